#pragma once

#include "fembem/common/types.hpp"

namespace fembem {

/// Partial-pivoting LU solve. Throws SolverError when the matrix is
/// singular to working precision, and when a well-conditioned system
/// (reciprocal condition estimate above 1e-6) leaves a relative residual
/// above 1e-10.
Vector dense_solve(const DenseMatrix& matrix, const Vector& rhs);

}  // namespace fembem
