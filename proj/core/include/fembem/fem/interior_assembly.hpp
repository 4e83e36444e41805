#pragma once

#include <optional>

#include "fembem/bem/trace_space.hpp"
#include "fembem/common/types.hpp"
#include "fembem/fem/volume_space.hpp"

namespace fembem {

/// Reaction coefficient: a constant or a point field. Negative samples are
/// rejected when the coefficient is evaluated during assembly.
class Coefficient {
 public:
  Coefficient(double value);  // NOLINT(google-explicit-constructor)
  Coefficient(ScalarField field);  // NOLINT(google-explicit-constructor)

  double operator()(const Vec3& x) const;
  bool is_constant() const noexcept { return !field_; }
  bool is_zero() const noexcept { return !field_ && value_ == 0.0; }

 private:
  double value_ = 0.0;
  ScalarField field_;
};

/// Boundary terms of the interior Nitsche form. With phi the volume basis
/// and mu the trace basis:
///   consistency(i,j) = <d_n phi_j, phi_i>
///   penalty_vv(i,j)  = sum_E tau/h_E <phi_j, phi_i>_E
///   flux_trace(i,k)  = <mu_k, d_n phi_i>
///   penalty_vm(i,k)  = sum_E tau/h_E <mu_k, phi_i>_E
///   penalty_mm(k,l)  = sum_E tau/h_E <mu_l, mu_k>_E
struct NitscheBlocks {
  double tau = 0.0;
  SparseMatrix consistency;
  SparseMatrix penalty_vv;
  SparseMatrix flux_trace;
  SparseMatrix penalty_vm;
  SparseMatrix penalty_mm;
};

/// Interior form a_h((w, w~), (v, v~)) split into volume and boundary
/// parts, plus the load vector.
struct InteriorBlocks {
  SparseMatrix stiffness_plus_mass;
  NitscheBlocks nitsche;
  Vector load;

  std::size_t num_volume_dofs() const { return static_cast<std::size_t>(stiffness_plus_mass.rows()); }
  std::size_t num_trace_dofs() const { return static_cast<std::size_t>(nitsche.penalty_mm.rows()); }

  /// v-row, w-column: A - N - N^T + P_vv.
  SparseMatrix a_uu() const;
  /// v-row, w~-column: D - P_vm.
  SparseMatrix a_um() const;
  /// v~-row, w~-column: P_mm.
  SparseMatrix a_mm() const;
  /// Boundary part only of a_uu: -N - N^T + P_vv.
  SparseMatrix nitsche_uu() const;
  /// Full symmetric matrix over (w, w~).
  SparseMatrix a_h() const;
};

/// Volume terms int grad w . grad v + eps w v with an exact rule of degree 2j.
SparseMatrix assemble_interior(const VolumeSpace& space, const Coefficient& epsilon);

/// Nitsche boundary blocks. The trace space must live on the boundary
/// triangulation of the volume mesh; tau must be positive.
NitscheBlocks assemble_nitsche(const VolumeSpace& space, const TraceSpace& trace, double tau);

/// int f v with a rule of the given degree (default 2j + 4).
Vector assemble_load(const VolumeSpace& space, const ScalarField& f, std::optional<int> degree = std::nullopt);

InteriorBlocks assemble_interior_blocks(const VolumeSpace& space, const TraceSpace& trace,
                                        const Coefficient& epsilon, double tau, const ScalarField& f);

}  // namespace fembem
