#include "fembem/coupling/norms.hpp"

#include <cmath>
#include <limits>
#include <sstream>

#include "fembem/bem/surface_mass.hpp"
#include "fembem/common/errors.hpp"
#include "fembem/common/quadrature.hpp"

namespace fembem {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

std::array<double, 3> tri_bary(const std::array<double, 2>& p) { return {1.0 - p[0] - p[1], p[0], p[1]}; }

Vec3 surface_point(const SurfaceMesh& s, std::size_t t, const std::array<double, 3>& b) {
  const auto& tri = s.triangles()[t];
  return b[0] * s.vertices()[tri[0]] + b[1] * s.vertices()[tri[1]] + b[2] * s.vertices()[tri[2]];
}

/// sum_E weight_E ||a - b||_E^2 for two fields given per (triangle, bary).
template <class A, class B>
double weighted_surface_sq(const SurfaceMesh& s, const std::vector<double>& weight, int degree, A a, B b) {
  const TriangleRule rule = triangle_rule(degree);
  double sum = 0.0;
  for (std::size_t t = 0; t < s.num_triangles(); ++t) {
    double local = 0.0;
    for (std::size_t q = 0; q < rule.size(); ++q) {
      const auto bary = tri_bary(rule.points[q]);
      const double d = a(t, bary) - b(t, bary);
      local += rule.weights[q] * d * d;
    }
    sum += weight[t] * 2.0 * s.areas()[t] * local;
  }
  return sum;
}

}  // namespace

double l2_error_interior(const VolumeSpace& space, const Vector& u, const ScalarField& exact, int degree) {
  const TetMesh& mesh = space.mesh();
  const TetRule rule = tet_rule(degree);
  double sum = 0.0;
  for (std::size_t t = 0; t < mesh.num_tets(); ++t) {
    const auto& tet = mesh.tets()[t];
    const auto& x = mesh.vertices();
    const double jac = 6.0 * mesh.signed_volume(t);
    for (std::size_t q = 0; q < rule.size(); ++q) {
      const auto& p = rule.points[q];
      const std::array<double, 4> b{1.0 - p[0] - p[1] - p[2], p[0], p[1], p[2]};
      const Vec3 y = b[0] * x[tet[0]] + b[1] * x[tet[1]] + b[2] * x[tet[2]] + b[3] * x[tet[3]];
      const double d = (exact ? exact(y) : 0.0) - space.evaluate(u, t, b);
      sum += rule.weights[q] * jac * d * d;
    }
  }
  return std::sqrt(sum);
}

double l2_error_surface(const TraceSpace& space, const Vector& f, const NormalField& exact, int degree) {
  const SurfaceMesh& s = space.surface();
  const std::vector<double> ones(s.num_triangles(), 1.0);
  return std::sqrt(weighted_surface_sq(
      s, ones, degree,
      [&](std::size_t t, const std::array<double, 3>& b) {
        return exact ? exact(surface_point(s, t, b), s.normals()[t]) : 0.0;
      },
      [&](std::size_t t, const std::array<double, 3>& b) { return space.evaluate(f, t, b); }));
}

double trace_difference(const VolumeSpace& volume, const Vector& u, const TraceSpace& surface, const Vector& w,
                        int degree) {
  const SurfaceMesh& s = volume.boundary();
  if (!same_surface(s, surface.surface())) throw StructuralError("surface field is not on the volume boundary");
  const std::vector<double> ones(s.num_triangles(), 1.0);
  return std::sqrt(weighted_surface_sq(
      s, ones, degree,
      [&](std::size_t t, const std::array<double, 3>& b) {
        return volume.evaluate(u, static_cast<std::size_t>(s.source_facet(t).tet), volume.facet_to_tet(t, b));
      },
      [&](std::size_t t, const std::array<double, 3>& b) { return surface.evaluate(w, t, b); }));
}

ErrorNorms error_norms(const CoupledSystem& system, const SolutionBundle& bundle, const ExactSolution& exact) {
  const VolumeSpace& vol = system.volume_space();
  const ExteriorBlocks& ext = system.exterior();
  const TraceSpace& ws = *ext.w_space;
  const TraceSpace& ls = *ext.lambda_space;
  const TraceSpace& ms = *ext.trace_space;
  const SurfaceMesh& s = vol.boundary();
  const double tau = system.tau();

  ErrorNorms n{};
  n.l2_interior = exact.u_minus ? l2_error_interior(vol, bundle.u_minus, exact.u_minus) : kNaN;
  NormalField up_exact;
  if (exact.u_plus) up_exact = [&](const Vec3& x, const Vec3&) { return exact.u_plus(x); };
  n.l2_u_plus = exact.u_plus ? l2_error_surface(ws, bundle.u_plus, up_exact) : kNaN;
  n.l2_lambda = exact.lambda ? l2_error_surface(ls, bundle.lambda, exact.lambda) : kNaN;

  const double up_norm = l2_error_surface(ws, bundle.u_plus, {});
  const double diff = trace_difference(vol, bundle.u_minus, ws, bundle.u_plus);
  n.mismatch = up_norm > 0.0 ? diff / up_norm : diff;

  std::vector<double> pen(s.num_triangles()), hw(s.num_triangles());
  for (std::size_t t = 0; t < s.num_triangles(); ++t) {
    pen[t] = tau / s.diameters()[t];
    hw[t] = s.diameters()[t];
  }
  auto um_trace = [&](std::size_t t, const std::array<double, 3>& b) {
    return vol.evaluate(bundle.u_minus, static_cast<std::size_t>(s.source_facet(t).tet), vol.facet_to_tet(t, b));
  };
  auto ut_field = [&](std::size_t t, const std::array<double, 3>& b) { return ms.evaluate(bundle.u_tilde, t, b); };
  auto up_field = [&](std::size_t t, const std::array<double, 3>& b) { return ws.evaluate(bundle.u_plus, t, b); };
  n.penalty_interior = std::sqrt(weighted_surface_sq(s, pen, 4, um_trace, ut_field));
  n.penalty_exterior = std::sqrt(weighted_surface_sq(s, pen, 4, up_field, ut_field));

  if (exact.grad_u_minus) {
    n.flux_weighted = std::sqrt(weighted_surface_sq(
        s, hw, 6,
        [&](std::size_t t, const std::array<double, 3>& b) {
          return exact.grad_u_minus(surface_point(s, t, b)).dot(s.normals()[t]);
        },
        [&](std::size_t t, const std::array<double, 3>& b) {
          const auto tet = static_cast<std::size_t>(s.source_facet(t).tet);
          return vol.evaluate_gradient(bundle.u_minus, tet, vol.facet_to_tet(t, b)).dot(s.normals()[t]);
        }));
  } else {
    n.flux_weighted = kNaN;
  }

  if (exact.lambda) {
    n.lambda_weighted = std::sqrt(weighted_surface_sq(
        s, hw, 6,
        [&](std::size_t t, const std::array<double, 3>& b) {
          return exact.lambda(surface_point(s, t, b), s.normals()[t]);
        },
        [&](std::size_t t, const std::array<double, 3>& b) { return ls.evaluate(bundle.lambda, t, b); }));
    const Vector e = ls.project(exact.lambda) - bundle.lambda;
    n.v_surrogate = std::sqrt(std::max(0.0, e.dot(ext.V * e)));
  } else {
    n.lambda_weighted = kNaN;
    n.v_surrogate = kNaN;
  }

  if (exact.u_plus) {
    const Vector e = ws.project(up_exact) - bundle.u_plus;
    const SparseMatrix m = surface_mass(ws, ws);
    const double mean = ws.constant().dot(m * e);
    const double area = s.total_area();
    n.w_surrogate = std::sqrt(std::max(0.0, e.dot(ext.W * e)) + mean * mean / area);
  } else {
    n.w_surrogate = kNaN;
  }
  return n;
}

std::string ErrorNorms::csv_header() {
  return "l2_interior,l2_u_plus,l2_lambda,mismatch,penalty_interior,penalty_exterior,flux_weighted,"
         "lambda_weighted,v_surrogate,w_surrogate";
}

std::string ErrorNorms::csv_row() const {
  std::ostringstream os;
  os.precision(10);
  os << l2_interior << ',' << l2_u_plus << ',' << l2_lambda << ',' << mismatch << ',' << penalty_interior << ','
     << penalty_exterior << ',' << flux_weighted << ',' << lambda_weighted << ',' << v_surrogate << ','
     << w_surrogate;
  return os.str();
}

}  // namespace fembem
