#pragma once

#include "fembem/fem/interior_assembly.hpp"
#include "fembem/solvers/krylov.hpp"
#include "fembem/solvers/solver_config.hpp"

namespace fembem {

/// Solves a_uu u = load - a_um u~ for the interior unknown with the trace
/// variable held fixed. The matrices are formed once; each solve is a CG run
/// with the configured preconditioner ("none" or "jacobi").
class InteriorDirichletSolver {
 public:
  InteriorDirichletSolver(const InteriorBlocks& blocks, SolverConfig config);

  /// `include_load = false` drops the volume source (homogeneous solve).
  KrylovResult solve(const Vector& trace_data, bool include_load = true) const;

  const SparseMatrix& matrix() const noexcept { return a_uu_; }
  const SparseMatrix& coupling() const noexcept { return a_um_; }
  const SolverConfig& config() const noexcept { return config_; }

 private:
  SparseMatrix a_uu_;
  SparseMatrix a_um_;
  Vector load_;
  SolverConfig config_;
  LinearOperator precond_;
};

KrylovResult solve_interior_dirichlet(const InteriorBlocks& blocks, const Vector& trace_data,
                                      const SolverConfig& config);

}  // namespace fembem
