#pragma once

#include <functional>

#include "fembem/common/types.hpp"
#include "fembem/solvers/solver_config.hpp"

namespace fembem {

/// y = A x. Implementations must size y themselves.
using LinearOperator = std::function<void(const Vector& x, Vector& y)>;

struct KrylovResult {
  Vector solution;
  IterationTrace trace;
};

/// Preconditioned conjugate gradients for a symmetric positive definite
/// operator. Stops when sqrt(r'Pr / b'Pb) <= tolerance. Throws SolverError
/// (with the residual history) on breakdown or when max_iterations is hit.
/// An empty `preconditioner` means identity.
KrylovResult cg(const LinearOperator& op, const Vector& rhs, const SolverConfig& config,
                const LinearOperator& preconditioner = {}, const Vector* initial = nullptr);

/// Restarted GMRES with left preconditioning; stops on the relative
/// preconditioned residual.
KrylovResult gmres(const LinearOperator& op, const Vector& rhs, const SolverConfig& config,
                   const LinearOperator& preconditioner = {}, const Vector* initial = nullptr);

LinearOperator as_operator(const SparseMatrix& matrix);
LinearOperator as_operator(const DenseMatrix& matrix);
/// Diagonal (Jacobi) preconditioner of a sparse matrix.
LinearOperator jacobi_preconditioner(const SparseMatrix& matrix);

}  // namespace fembem
