#pragma once

#include <memory>
#include <string>
#include <vector>

#include "fembem/bem/exterior.hpp"
#include "fembem/bem/trace_space.hpp"
#include "fembem/fem/interior_assembly.hpp"
#include "fembem/fem/volume_space.hpp"
#include "fembem/solvers/solver_config.hpp"

namespace fembem {

/// Offsets of the four unknown blocks (u-, u+, lambda, u~) in monolithic vectors.
struct BlockLayout {
  Eigen::Index nv = 0, nw = 0, nl = 0, nm = 0;
  Eigen::Index u_minus() const { return 0; }
  Eigen::Index u_plus() const { return nv; }
  Eigen::Index lambda() const { return nv + nw; }
  Eigen::Index u_tilde() const { return nv + nw + nl; }
  Eigen::Index size() const { return nv + nw + nl + nm; }
};

/// A_h = a_h + b_h over (u-, u+, lambda, u~). Interior and exterior blocks
/// interact only through the u~ row and column.
class CoupledSystem {
 public:
  CoupledSystem(std::shared_ptr<const VolumeSpace> volume, InteriorBlocks interior, ExteriorBlocks exterior);

  const VolumeSpace& volume_space() const noexcept { return *volume_; }
  const InteriorBlocks& interior() const noexcept { return interior_; }
  const ExteriorBlocks& exterior() const noexcept { return exterior_; }
  const TraceSpace& trace_space() const noexcept { return *exterior_.trace_space; }
  double tau() const noexcept { return exterior_.tau; }
  const BlockLayout& layout() const noexcept { return layout_; }

  /// Monolithic action on a stacked (u-, u+, lambda, u~) vector.
  Vector apply(const Vector& x) const;
  /// Right-hand side (load, 0, 0, 0).
  Vector rhs() const;
  /// Dense monolithic matrix; only for coarse meshes.
  DenseMatrix dense_matrix() const;

  /// The u~-test row of A_h: (D^T - P_mv) u- + P_mm u~ - P_mw u+ - C^T lambda + P_mm u~.
  Vector trace_row(const Vector& u_minus, const Vector& u_plus, const Vector& lambda,
                   const Vector& u_tilde) const;

  Vector stack(const Vector& u_minus, const Vector& u_plus, const Vector& lambda, const Vector& u_tilde) const;

 private:
  std::shared_ptr<const VolumeSpace> volume_;
  InteriorBlocks interior_;
  ExteriorBlocks exterior_;
  BlockLayout layout_;
  SparseMatrix a_uu_, a_um_;
};

/// Checks that both parts use the same tau and trace space.
CoupledSystem assemble_coupled(std::shared_ptr<const VolumeSpace> volume, InteriorBlocks interior,
                               ExteriorBlocks exterior);

struct SolutionBundle {
  Vector u_minus;
  Vector u_plus;
  Vector lambda;
  Vector u_tilde;
  IterationTrace outer;
  std::vector<IterationTrace> interior_solves;
  std::vector<IterationTrace> exterior_solves;
  std::string method;

  int interior_iterations() const;
  int exterior_iterations() const;
};

}  // namespace fembem
