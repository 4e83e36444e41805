#pragma once

#include <array>
#include <memory>
#include <span>
#include <vector>

#include "fembem/common/types.hpp"
#include "fembem/mesh/surface_mesh.hpp"
#include "fembem/mesh/tet_mesh.hpp"

namespace fembem {

/// Continuous Lagrange P1/P2 space on a tetrahedral mesh. DOFs 0..nv-1 are
/// the vertices; for P2 the edge midpoints follow in sorted-edge order.
class VolumeSpace {
 public:
  VolumeSpace(std::shared_ptr<const TetMesh> mesh, int degree);

  const TetMesh& mesh() const noexcept { return *mesh_; }
  std::shared_ptr<const TetMesh> mesh_ptr() const noexcept { return mesh_; }
  /// Boundary triangulation the space was built against.
  const SurfaceMesh& boundary() const noexcept { return *boundary_; }
  std::shared_ptr<const SurfaceMesh> boundary_ptr() const noexcept { return boundary_; }

  int degree() const noexcept { return degree_; }
  std::size_t num_dofs() const noexcept { return num_dofs_; }
  int dofs_per_tet() const noexcept { return degree_ == 1 ? 4 : 10; }
  std::span<const int> tet_dofs(std::size_t tet) const;
  /// DOFs with a nonzero trace on the boundary, ascending.
  const std::vector<int>& boundary_dofs() const noexcept { return boundary_dofs_; }
  /// Interpolation node of each DOF.
  const std::vector<Vec3>& dof_points() const noexcept { return dof_points_; }

  Vector interpolate(const ScalarField& f) const;

  /// Basis values at barycentric coordinates (one entry per local DOF).
  void basis_values(const std::array<double, 4>& bary, double* values) const;
  /// Physical gradients of the local basis on `tet` at `bary`.
  void basis_gradients(std::size_t tet, const std::array<double, 4>& bary, Vec3* grads) const;
  /// Evaluates a coefficient vector at a point given in tet-barycentric coordinates.
  double evaluate(const Vector& coefficients, std::size_t tet, const std::array<double, 4>& bary) const;
  Vec3 evaluate_gradient(const Vector& coefficients, std::size_t tet,
                         const std::array<double, 4>& bary) const;

  /// Gradients of the barycentric coordinates on `tet`.
  std::array<Vec3, 4> barycentric_gradients(std::size_t tet) const;

  /// Tet-barycentric coordinates of a point on boundary triangle `t` given
  /// in the triangle's own barycentric coordinates.
  std::array<double, 4> facet_to_tet(std::size_t t, const std::array<double, 3>& bary) const;

 private:
  std::shared_ptr<const TetMesh> mesh_;
  std::shared_ptr<const SurfaceMesh> boundary_;
  int degree_;
  std::size_t num_dofs_ = 0;
  std::vector<int> dofs_;
  std::vector<int> boundary_dofs_;
  std::vector<Vec3> dof_points_;
};

}  // namespace fembem
