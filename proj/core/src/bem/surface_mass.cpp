#include "fembem/bem/surface_mass.hpp"

#include "fembem/common/errors.hpp"
#include "fembem/common/quadrature.hpp"

namespace fembem {

SparseMatrix weighted_surface_mass(const TraceSpace& test, const TraceSpace& trial,
                                   const std::vector<double>& weights) {
  if (!same_surface(test.surface(), trial.surface())) {
    throw StructuralError("surface mass between spaces on different triangulations");
  }
  const SurfaceMesh& s = test.surface();
  if (weights.size() != s.num_triangles()) throw InvalidArgument("one weight per triangle expected");
  const TriangleRule rule = triangle_rule(test.degree() + trial.degree());
  std::vector<Triplet> entries;
  entries.reserve(s.num_triangles() * test.local_size() * trial.local_size());
  for (std::size_t t = 0; t < s.num_triangles(); ++t) {
    const auto dt = test.triangle_dofs(t);
    const auto ds = trial.triangle_dofs(t);
    double local[3][3] = {};
    for (std::size_t q = 0; q < rule.size(); ++q) {
      const std::array<double, 3> b{1.0 - rule.points[q][0] - rule.points[q][1], rule.points[q][0],
                                    rule.points[q][1]};
      double pt[3], ps[3];
      test.basis_values(b, pt);
      trial.basis_values(b, ps);
      for (std::size_t i = 0; i < dt.size(); ++i) {
        for (std::size_t j = 0; j < ds.size(); ++j) local[i][j] += rule.weights[q] * pt[i] * ps[j];
      }
    }
    const double scale = 2.0 * s.areas()[t] * weights[t];
    for (std::size_t i = 0; i < dt.size(); ++i) {
      for (std::size_t j = 0; j < ds.size(); ++j) entries.emplace_back(dt[i], ds[j], scale * local[i][j]);
    }
  }
  SparseMatrix m(static_cast<Eigen::Index>(test.num_dofs()), static_cast<Eigen::Index>(trial.num_dofs()));
  m.setFromTriplets(entries.begin(), entries.end());
  return m;
}

SparseMatrix surface_mass(const TraceSpace& test, const TraceSpace& trial) {
  return weighted_surface_mass(test, trial, std::vector<double>(test.surface().num_triangles(), 1.0));
}

SparseMatrix penalty_mass(const TraceSpace& test, const TraceSpace& trial, double tau) {
  if (!(tau > 0.0)) throw InvalidArgument("penalty parameter tau must be positive");
  const auto& d = test.surface().diameters();
  std::vector<double> w(d.size());
  for (std::size_t t = 0; t < d.size(); ++t) w[t] = tau / d[t];
  return weighted_surface_mass(test, trial, w);
}

}  // namespace fembem
