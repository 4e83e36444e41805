#include <gtest/gtest.h>

#include <cmath>

#include "fembem/common/errors.hpp"
#include "fembem/common/quadrature.hpp"
#include "oracles.hpp"

using namespace fembem;

TEST(GaussLegendre, IntegratesPolynomialsUpToDegree2nMinus1) {
  for (int n = 1; n <= 12; ++n) {
    const LineRule r = gauss_legendre(n);
    ASSERT_EQ(r.points.size(), static_cast<std::size_t>(n));
    for (int p = 0; p <= 2 * n - 1; ++p) {
      double s = 0.0;
      for (int i = 0; i < n; ++i) s += r.weights[i] * std::pow(r.points[i], p);
      EXPECT_NEAR(s, 1.0 / (p + 1), 1e-14) << "n=" << n << " p=" << p;
    }
  }
}

TEST(GaussLegendre, MatchesIndependentNewtonRule) {
  const LineRule r = gauss_legendre(9);
  const oracle::Line o = oracle::gauss(9);
  std::vector<double> a = r.points, b = o.x;
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  for (int i = 0; i < 9; ++i) EXPECT_NEAR(a[i], b[i], 1e-14);
}

TEST(TriangleRule, ExactForMonomialsOfStatedDegree) {
  for (int degree = 0; degree <= 12; ++degree) {
    const TriangleRule r = triangle_rule(degree);
    for (int a = 0; a <= degree; ++a) {
      for (int b = 0; a + b <= degree; ++b) {
        double s = 0.0;
        for (std::size_t q = 0; q < r.size(); ++q) {
          s += r.weights[q] * std::pow(r.points[q][0], a) * std::pow(r.points[q][1], b);
        }
        EXPECT_NEAR(s, oracle::triangle_monomial(a, b), 1e-15) << degree << ' ' << a << ' ' << b;
      }
    }
  }
}

TEST(TetRule, ExactForMonomialsOfStatedDegree) {
  for (int degree = 0; degree <= 10; ++degree) {
    const TetRule r = tet_rule(degree);
    for (int a = 0; a <= degree; ++a) {
      for (int b = 0; a + b <= degree; ++b) {
        for (int c = 0; a + b + c <= degree; ++c) {
          double s = 0.0;
          for (std::size_t q = 0; q < r.size(); ++q) {
            s += r.weights[q] * std::pow(r.points[q][0], a) * std::pow(r.points[q][1], b) *
                 std::pow(r.points[q][2], c);
          }
          EXPECT_NEAR(s, oracle::tet_monomial(a, b, c), 1e-15);
        }
      }
    }
  }
}

TEST(Quadrature, RejectsNonPositiveOrders) {
  EXPECT_THROW(gauss_legendre(0), Error);
  EXPECT_THROW(triangle_rule(-1), Error);
  EXPECT_THROW(tet_rule(-1), Error);
}
