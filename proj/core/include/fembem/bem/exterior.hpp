#pragma once

#include <memory>

#include "fembem/bem/boundary_operators.hpp"
#include "fembem/bem/trace_space.hpp"
#include "fembem/common/types.hpp"
#include "fembem/solvers/krylov.hpp"
#include "fembem/solvers/solver_config.hpp"

namespace fembem {

/// Exterior form b_h over (u+, lambda, u~) with test functions (v, phi, v~):
///
///          u+            lambda    u~
///   v   [ W + P_ww       B^T      -P_wm ]
///   phi [ -B             V         C    ]
///   v~  [ -P_mw         -C^T       P_mm ]
///
/// where B = 1/2 M_lw + K (Lambda x W), C = M_lm (Lambda x M) and P_xy are
/// tau/h_E weighted masses.
struct ExteriorBlocks {
  std::shared_ptr<const TraceSpace> w_space;
  std::shared_ptr<const TraceSpace> lambda_space;
  std::shared_ptr<const TraceSpace> trace_space;
  double tau = 0.0;

  DenseMatrix V;
  DenseMatrix W;
  DenseMatrix K;
  DenseMatrix B;
  SparseMatrix C;
  SparseMatrix mass_ww;
  SparseMatrix mass_ll;
  SparseMatrix mass_lw;
  SparseMatrix penalty_ww;
  SparseMatrix penalty_wm;
  SparseMatrix penalty_mm;

  std::size_t num_w() const { return static_cast<std::size_t>(W.rows()); }
  std::size_t num_lambda() const { return static_cast<std::size_t>(V.rows()); }
  std::size_t num_trace() const { return static_cast<std::size_t>(penalty_mm.rows()); }

  /// Dense matrix over (u+, lambda, u~) in that order.
  DenseMatrix matrix() const;
  /// Block action; returns (v-row, phi-row, v~-row) stacked.
  Vector apply(const Vector& u_plus, const Vector& lambda, const Vector& u_tilde) const;
};

ExteriorBlocks assemble_exterior(const BoundaryOperators& ops, std::shared_ptr<const TraceSpace> w_space,
                                 std::shared_ptr<const TraceSpace> lambda_space,
                                 std::shared_ptr<const TraceSpace> trace_space, double tau);

/// Exterior form after eliminating lambda = V^{-1}(B u+ - C u~):
///   R_ww = W + P_ww + B^T V^{-1} B
///   R_wm = -(P_wm + B^T V^{-1} C),  R_mw = R_wm^T
///   R_mm = P_mm + C^T V^{-1} C
/// R_ww is stored densely; the u~ blocks are applied through the Cholesky
/// factor of V since M is large.
class ReducedExterior {
 public:
  explicit ReducedExterior(const ExteriorBlocks& blocks);

  const ExteriorBlocks& blocks() const noexcept { return *blocks_; }
  const DenseMatrix& r_ww() const noexcept { return r_ww_; }

  Vector apply_wm(const Vector& u_tilde) const;
  Vector apply_mw(const Vector& u_plus) const;
  Vector apply_mm(const Vector& u_tilde) const;
  Vector solve_v(const Vector& rhs) const;
  Vector recover_lambda(const Vector& u_plus, const Vector& u_tilde) const;

  /// Dense reduced matrix over (u+, u~). Intended for coarse meshes.
  DenseMatrix matrix() const;

 private:
  const ExteriorBlocks* blocks_;
  Eigen::LLT<DenseMatrix> v_factor_;
  DenseMatrix v_inv_b_;
  DenseMatrix r_ww_;
};

/// Throws SolverError when V is not positive definite.
ReducedExterior symmetric_reduce(const ExteriorBlocks& blocks);

struct ExteriorSolution {
  Vector u_plus;
  Vector lambda;
  IterationTrace trace;
};

/// Exterior problem with u~ held fixed. The reduced path runs CG on R_ww;
/// the unreduced path runs GMRES on the (u+, lambda) block system. The
/// "mass" preconditioner uses the W-space mass for u+ and the Lambda mass
/// for lambda.
class ExteriorDirichletSolver {
 public:
  ExteriorDirichletSolver(const ExteriorBlocks& blocks, bool reduced, SolverConfig config);

  ExteriorSolution solve(const Vector& trace_data) const;
  bool reduced() const noexcept { return reduced_ != nullptr; }
  const ReducedExterior* reduced_form() const noexcept { return reduced_.get(); }
  const SolverConfig& config() const noexcept { return config_; }

 private:
  const ExteriorBlocks* blocks_;
  std::unique_ptr<ReducedExterior> reduced_;
  SolverConfig config_;
  LinearOperator precond_;
  LinearOperator block_op_;
};

ExteriorSolution solve_exterior_dirichlet(const ExteriorBlocks& blocks, const Vector& trace_data,
                                          const SolverConfig& config, bool reduced = true);

}  // namespace fembem
