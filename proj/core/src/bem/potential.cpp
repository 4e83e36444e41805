#include "fembem/bem/potential.hpp"

#include <iostream>

#include "fembem/common/errors.hpp"
#include "fembem/common/quadrature.hpp"

namespace fembem {

std::vector<double> evaluate_exterior_potential(const std::vector<Vec3>& points, const TraceSpace& w_space,
                                                const Vector& u_plus, const TraceSpace& lambda_space,
                                                const Vector& lambda, const PotentialOptions& options) {
  if (!same_surface(w_space.surface(), lambda_space.surface())) {
    throw StructuralError("potential spaces live on different triangulations");
  }
  if (u_plus.size() != static_cast<Eigen::Index>(w_space.num_dofs()) ||
      lambda.size() != static_cast<Eigen::Index>(lambda_space.num_dofs())) {
    throw StructuralError("potential coefficient vectors do not match their spaces");
  }
  if (options.points < 1) throw ConfigError("potential quadrature needs at least one point");
  const SurfaceMesh& s = w_space.surface();
  const TriangleRule rule = triangle_rule_points(options.points);

  std::vector<Vec3> qx;
  std::vector<double> qw, qu, ql;
  std::vector<Vec3> qn;
  for (std::size_t t = 0; t < s.num_triangles(); ++t) {
    const auto& tri = s.triangles()[t];
    const double jac = 2.0 * s.areas()[t];
    for (std::size_t q = 0; q < rule.size(); ++q) {
      const std::array<double, 3> b{1.0 - rule.points[q][0] - rule.points[q][1], rule.points[q][0],
                                    rule.points[q][1]};
      qx.push_back(b[0] * s.vertices()[tri[0]] + b[1] * s.vertices()[tri[1]] + b[2] * s.vertices()[tri[2]]);
      qw.push_back(rule.weights[q] * jac);
      qn.push_back(s.normals()[t]);
      qu.push_back(w_space.evaluate(u_plus, t, b));
      ql.push_back(lambda_space.evaluate(lambda, t, b));
    }
  }

  std::vector<double> values(points.size(), 0.0);
  for (std::size_t p = 0; p < points.size(); ++p) {
    const Vec3& x = points[p];
    for (std::size_t t = 0; t < s.num_triangles(); ++t) {
      if ((x - s.centroid(t)).norm() < options.min_distance_ratio * s.diameters()[t]) {
        const std::string msg = "evaluation point " + std::to_string(p) + " lies within " +
                                std::to_string(options.min_distance_ratio) + " local mesh sizes of the boundary";
        if (options.policy == ProximityPolicy::Reject) throw InvalidArgument(msg);
        std::cerr << "warning: " << msg << "; accuracy is not guaranteed\n";
        break;
      }
    }
    double v = 0.0;
    for (std::size_t q = 0; q < qx.size(); ++q) {
      const Vec3 d = x - qx[q];
      const double r = d.norm();
      const double g = 1.0 / (4.0 * kPi * r);
      v += qw[q] * (-g * ql[q] + g * qn[q].dot(d) / (r * r) * qu[q]);
    }
    values[p] = v;
  }
  return values;
}

}  // namespace fembem
