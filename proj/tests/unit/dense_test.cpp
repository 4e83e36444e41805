#include <gtest/gtest.h>

#include <random>

#include "fembem/common/errors.hpp"
#include "fembem/solvers/dense.hpp"
#include "oracles.hpp"

using namespace fembem;

TEST(DenseSolve, Identity) {
  const Vector b = Vector::LinSpaced(5, 1.0, 5.0);
  EXPECT_EQ((dense_solve(DenseMatrix::Identity(5, 5), b) - b).norm(), 0.0);
}

TEST(DenseSolve, HilbertInverseColumns) {
  DenseMatrix H(4, 4);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) H(i, j) = 1.0 / (i + j + 1);
  for (int j = 0; j < 4; ++j) {
    const Vector x = dense_solve(H, Vector::Unit(4, j));
    for (int i = 0; i < 4; ++i) EXPECT_NEAR(x(i), oracle::hilbert_inverse(4, i + 1, j + 1), 1e-8);
  }
}

TEST(DenseSolve, RandomSystemResidual) {
  std::mt19937 rng(11);
  std::normal_distribution<double> nd;
  DenseMatrix A(100, 100);
  Vector b(100);
  for (int i = 0; i < 100; ++i) {
    b(i) = nd(rng);
    for (int j = 0; j < 100; ++j) A(i, j) = nd(rng);
  }
  const Vector x = dense_solve(A, b);
  EXPECT_LT((A * x - b).norm() / b.norm(), 1e-10);
}

TEST(DenseSolve, SingularAndMalformedInputsThrow) {
  DenseMatrix S(3, 3);
  S << 1, 2, 3, 2, 4, 6, 1, 0, 1;
  EXPECT_THROW(dense_solve(S, Vector::Ones(3)), SolverError);
  EXPECT_THROW(dense_solve(DenseMatrix::Identity(3, 2), Vector::Ones(3)), InvalidArgument);
  EXPECT_THROW(dense_solve(DenseMatrix::Identity(3, 3), Vector::Ones(2)), InvalidArgument);
}
