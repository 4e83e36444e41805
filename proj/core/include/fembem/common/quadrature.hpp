#pragma once

#include <array>
#include <vector>

namespace fembem {

/// Gauss-Legendre rule on [0, 1].
struct LineRule {
  std::vector<double> points;
  std::vector<double> weights;
};

/// Rule on the reference triangle {(s, t) : s, t >= 0, s + t <= 1}.
/// Weights sum to the reference area 1/2.
struct TriangleRule {
  std::vector<std::array<double, 2>> points;
  std::vector<double> weights;
  std::size_t size() const { return weights.size(); }
};

/// Rule on the reference tetrahedron {x, y, z >= 0, x + y + z <= 1}.
/// Weights sum to the reference volume 1/6.
struct TetRule {
  std::vector<std::array<double, 3>> points;
  std::vector<double> weights;
  std::size_t size() const { return weights.size(); }
};

/// n-point Gauss-Legendre rule mapped to [0, 1]; exact for degree 2n - 1.
LineRule gauss_legendre(int n);

/// Collapsed (Duffy) product rule with n points per direction.
TriangleRule triangle_rule_points(int n);
/// Collapsed product rule exact for polynomials of total degree `degree`.
TriangleRule triangle_rule(int degree);

TetRule tet_rule_points(int n);
TetRule tet_rule(int degree);

}  // namespace fembem
