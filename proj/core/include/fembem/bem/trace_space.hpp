#pragma once

#include <array>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "fembem/common/types.hpp"
#include "fembem/mesh/surface_mesh.hpp"

namespace fembem {

enum class Continuity { Continuous, Discontinuous };

/// Piecewise polynomial space on the interface triangulation: continuous
/// P1, or discontinuous P0/P1. Local basis functions on a triangle follow
/// its vertex order (barycentric coordinates for P1).
class TraceSpace {
 public:
  TraceSpace(std::shared_ptr<const SurfaceMesh> surface, int degree, Continuity continuity);

  const SurfaceMesh& surface() const noexcept { return *surface_; }
  std::shared_ptr<const SurfaceMesh> surface_ptr() const noexcept { return surface_; }
  int degree() const noexcept { return degree_; }
  Continuity continuity() const noexcept { return continuity_; }
  bool continuous() const noexcept { return continuity_ == Continuity::Continuous; }
  std::size_t num_dofs() const noexcept { return num_dofs_; }
  int local_size() const noexcept { return degree_ == 0 ? 1 : 3; }
  std::span<const int> triangle_dofs(std::size_t t) const;
  std::string describe() const;

  void basis_values(const std::array<double, 3>& bary, double* values) const;
  /// Surface gradients of the local basis on triangle t (constant per triangle).
  std::array<Vec3, 3> surface_gradients(std::size_t t) const;
  /// n x grad_Gamma of the local basis on triangle t.
  std::array<Vec3, 3> surface_curls(std::size_t t) const;

  double evaluate(const Vector& coefficients, std::size_t t, const std::array<double, 3>& bary) const;

  /// Nodal interpolation (P1) or centroid sampling (P0).
  Vector interpolate(const ScalarField& f) const;
  /// L2(Gamma) projection of a field that may depend on the normal.
  Vector project(const NormalField& f) const;
  /// Coefficients of the constant function 1.
  Vector constant(double value = 1.0) const;

 private:
  std::shared_ptr<const SurfaceMesh> surface_;
  int degree_;
  Continuity continuity_;
  std::size_t num_dofs_ = 0;
  std::vector<int> dofs_;
};

/// True when both spaces live on the same triangulation (same object or
/// identical connectivity and coordinates).
bool same_surface(const SurfaceMesh& a, const SurfaceMesh& b);

}  // namespace fembem
