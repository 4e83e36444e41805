#include "fembem/solvers/dense.hpp"

#include <limits>
#include <string>

#include "fembem/common/errors.hpp"

namespace fembem {

Vector dense_solve(const DenseMatrix& matrix, const Vector& rhs) {
  if (matrix.rows() != matrix.cols()) throw InvalidArgument("dense_solve needs a square matrix");
  if (matrix.rows() != rhs.size()) throw InvalidArgument("dense_solve: size mismatch");
  if (matrix.rows() == 0) return Vector();
  const Eigen::PartialPivLU<DenseMatrix> lu(matrix);
  const double rcond = lu.rcond();
  if (!(rcond > std::numeric_limits<double>::epsilon())) {
    throw SolverError("dense_solve: matrix is singular to working precision (rcond = " +
                          std::to_string(rcond) + ")",
                      {});
  }
  Vector x = lu.solve(rhs);
  const double bnorm = rhs.norm();
  if (rcond > 1e-6 && bnorm > 0.0) {
    const double rel = (matrix * x - rhs).norm() / bnorm;
    if (rel > 1e-10) {
      throw SolverError("dense_solve: residual check failed (" + std::to_string(rel) + ")", {rel});
    }
  }
  return x;
}

}  // namespace fembem
