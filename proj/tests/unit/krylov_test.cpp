#include <gtest/gtest.h>

#include <Eigen/Cholesky>
#include <Eigen/LU>
#include <Eigen/QR>
#include <random>
#include <sstream>

#include "fembem/common/errors.hpp"
#include "fembem/solvers/krylov.hpp"

using namespace fembem;

namespace {

SolverConfig config(const std::string& method, double tol = 1e-12, int max_it = 500) {
  SolverConfig c;
  c.method = method;
  c.tolerance = tol;
  c.max_iterations = max_it;
  return c;
}

DenseMatrix random_matrix(int n, unsigned seed) {
  std::mt19937 rng(seed);
  std::normal_distribution<double> nd;
  DenseMatrix a(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) a(i, j) = nd(rng);
  return a;
}

Vector random_vector(int n, unsigned seed) { return random_matrix(n, seed).col(0); }

}  // namespace

TEST(Krylov, IdentityConvergesInOneStep) {
  const DenseMatrix I = DenseMatrix::Identity(10, 10);
  const Vector b = random_vector(10, 1);
  for (const auto& r : {cg(as_operator(I), b, config("cg")), gmres(as_operator(I), b, config("gmres"))}) {
    EXPECT_TRUE(r.trace.converged);
    EXPECT_EQ(r.trace.iterations, 1);
    EXPECT_LT((r.solution - b).norm(), 1e-14);
    EXPECT_EQ(r.trace.residuals.size(), 2u);
  }
}

TEST(Krylov, DiagonalSystemExact) {
  SparseMatrix d(3, 3);
  d.insert(0, 0) = 1.0;
  d.insert(1, 1) = 2.0;
  d.insert(2, 2) = 3.0;
  const Vector b = Vector::Ones(3);
  const auto r = cg(as_operator(d), b, config("cg"));
  EXPECT_LE(r.trace.iterations, 3);
  EXPECT_NEAR(r.solution(0), 1.0, 1e-13);
  EXPECT_NEAR(r.solution(1), 0.5, 1e-13);
  EXPECT_NEAR(r.solution(2), 1.0 / 3.0, 1e-13);
  const auto p = cg(as_operator(d), b, config("cg"), jacobi_preconditioner(d));
  EXPECT_EQ(p.trace.iterations, 1);
}

// Three distinct eigenvalues: CG terminates after three steps in exact arithmetic.
TEST(Krylov, ConjugateGradientTerminatesOnDistinctEigenvalueCount) {
  const Eigen::HouseholderQR<DenseMatrix> qr(random_matrix(30, 2));
  const DenseMatrix Q = qr.householderQ();
  Vector ev(30);
  for (int i = 0; i < 30; ++i) ev(i) = 1.0 + (i % 3);
  const DenseMatrix A = Q * ev.asDiagonal() * Q.transpose();
  const auto r = cg(as_operator(A), random_vector(30, 3), config("cg", 1e-10));
  EXPECT_LE(r.trace.iterations, 4);
}

TEST(Krylov, RandomSpdMatchesCholesky) {
  const DenseMatrix M = random_matrix(50, 4);
  const DenseMatrix A = M * M.transpose() + 50.0 * DenseMatrix::Identity(50, 50);
  const Vector b = random_vector(50, 5);
  const Vector ref = A.llt().solve(b);
  const auto r = cg(as_operator(A), b, config("cg"));
  EXPECT_LT((r.solution - ref).norm(), 1e-10 * ref.norm());
  for (std::size_t i = 1; i < r.trace.residuals.size(); ++i) EXPECT_GE(r.trace.residuals[i], 0.0);
  EXPECT_LE(r.trace.residuals.back(), 1e-12);
  const auto g = gmres(as_operator(A), b, config("gmres"));
  EXPECT_LT((g.solution - ref).norm(), 1e-10 * ref.norm());
}

TEST(Krylov, GmresSolvesRotation) {
  DenseMatrix R(2, 2);
  R << 0.0, -1.0, 1.0, 0.0;
  const Vector b = Vector::Ones(2);
  const auto r = gmres(as_operator(R), b, config("gmres"));
  EXPECT_EQ(r.trace.iterations, 2);
  EXPECT_LT((R * r.solution - b).norm(), 1e-13);
}

TEST(Krylov, RestartedGmresOnNonsymmetricSystem) {
  const DenseMatrix A = random_matrix(40, 6) + 15.0 * DenseMatrix::Identity(40, 40);
  const Vector b = random_vector(40, 7);
  SolverConfig c = config("gmres", 1e-12, 1000);
  c.restart = 5;
  const auto r = gmres(as_operator(A), b, c);
  EXPECT_TRUE(r.trace.converged);
  EXPECT_GT(r.trace.iterations, 5);
  EXPECT_LT((r.solution - A.partialPivLu().solve(b)).norm(), 1e-10 * r.solution.norm());
}

TEST(Krylov, IterationCapThrowsWithHistory) {
  const DenseMatrix M = random_matrix(50, 8);
  const DenseMatrix A = M * M.transpose() + 0.01 * DenseMatrix::Identity(50, 50);
  try {
    cg(as_operator(A), random_vector(50, 9), config("cg", 1e-14, 3));
    FAIL() << "expected SolverError";
  } catch (const SolverError& e) {
    EXPECT_EQ(e.residuals().size(), 4u);
  }
  EXPECT_THROW(gmres(as_operator(A), random_vector(50, 9), config("gmres", 1e-14, 3)), SolverError);
}

TEST(Krylov, ExactInitialGuessAndZeroRhs) {
  const DenseMatrix A = DenseMatrix::Identity(4, 4) * 2.0;
  const Vector b = Vector::Ones(4);
  const Vector x0 = b / 2.0;
  const auto r = cg(as_operator(A), b, config("cg"), {}, &x0);
  EXPECT_EQ(r.trace.iterations, 0);
  const auto z = cg(as_operator(A), Vector::Zero(4), config("cg"));
  EXPECT_EQ(z.solution.norm(), 0.0);
  EXPECT_TRUE(z.trace.converged);
}

TEST(Krylov, IndefiniteOperatorBreaksDownInCg) {
  DenseMatrix A = DenseMatrix::Identity(2, 2);
  A(1, 1) = -1.0;
  Vector b(2);
  b << 1.0, 1.0;
  EXPECT_THROW(cg(as_operator(A), b, config("cg")), SolverError);
}

TEST(Krylov, ConfigValidation) {
  const DenseMatrix I = DenseMatrix::Identity(2, 2);
  EXPECT_THROW(cg(as_operator(I), Vector::Ones(2), config("cg", 0.0)), ConfigError);
  EXPECT_THROW(cg(as_operator(I), Vector::Ones(2), config("cg", 1e-8, 0)), ConfigError);
  SolverConfig c = config("gmres");
  c.restart = 0;
  EXPECT_THROW(gmres(as_operator(I), Vector::Ones(2), c), ConfigError);
}

TEST(Krylov, TraceCsvLayout) {
  const auto r = cg(as_operator(DenseMatrix(DenseMatrix::Identity(3, 3))), Vector::Ones(3), config("cg"));
  std::ostringstream out;
  r.trace.write_csv(out);
  std::istringstream in(out.str());
  std::string line;
  std::getline(in, line);
  EXPECT_EQ(line, "iteration,residual,increment,time");
  int rows = 0;
  while (std::getline(in, line)) ++rows;
  EXPECT_EQ(rows, static_cast<int>(r.trace.residuals.size()));
}
