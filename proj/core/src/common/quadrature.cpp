#include "fembem/common/quadrature.hpp"

#include <cmath>

#include "fembem/common/errors.hpp"
#include "fembem/common/types.hpp"

namespace fembem {

LineRule gauss_legendre(int n) {
  if (n < 1) throw InvalidArgument("Gauss-Legendre rule needs at least one point");
  LineRule rule;
  rule.points.resize(n);
  rule.weights.resize(n);
  for (int i = 0; i < n; ++i) {
    // Newton iteration on P_n starting from the Chebyshev-like guess.
    double x = std::cos(kPi * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0;
      double p1 = x;
      for (int k = 2; k <= n; ++k) {
        const double pk = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = pk;
      }
      if (n == 1) {
        p1 = x;
        p0 = 1.0;
      }
      dp = n * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    // recompute derivative at the converged root
    double p0 = 1.0;
    double p1 = x;
    for (int k = 2; k <= n; ++k) {
      const double pk = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
      p0 = p1;
      p1 = pk;
    }
    dp = (n == 1) ? 1.0 : n * (x * p1 - p0) / (x * x - 1.0);
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    rule.points[n - 1 - i] = 0.5 * (x + 1.0);
    rule.weights[n - 1 - i] = 0.5 * w;
  }
  return rule;
}

TriangleRule triangle_rule_points(int n) {
  const LineRule g = gauss_legendre(n);
  TriangleRule rule;
  rule.points.reserve(n * n);
  rule.weights.reserve(n * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const double u = g.points[i];
      const double v = g.points[j];
      rule.points.push_back({u * (1.0 - v), u * v});
      rule.weights.push_back(g.weights[i] * g.weights[j] * u);
    }
  }
  return rule;
}

TriangleRule triangle_rule(int degree) {
  if (degree < 0) throw InvalidArgument("negative quadrature degree");
  return triangle_rule_points((degree + 3) / 2);
}

TetRule tet_rule_points(int n) {
  const LineRule g = gauss_legendre(n);
  TetRule rule;
  rule.points.reserve(n * n * n);
  rule.weights.reserve(n * n * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      for (int k = 0; k < n; ++k) {
        const double u = g.points[i];
        const double v = g.points[j];
        const double w = g.points[k];
        rule.points.push_back({u * (1.0 - v), u * v * (1.0 - w), u * v * w});
        rule.weights.push_back(g.weights[i] * g.weights[j] * g.weights[k] * u * u * v);
      }
    }
  }
  return rule;
}

TetRule tet_rule(int degree) {
  if (degree < 0) throw InvalidArgument("negative quadrature degree");
  return tet_rule_points((degree + 4) / 2);
}

}  // namespace fembem
