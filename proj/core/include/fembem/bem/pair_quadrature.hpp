#pragma once

#include <array>
#include <vector>

#include "fembem/common/quadrature.hpp"
#include "fembem/common/types.hpp"
#include "fembem/mesh/surface_mesh.hpp"

namespace fembem {

/// Quadrature orders for triangle-pair integrals. Singular pairs (shared
/// triangle, edge or vertex) use the Sauter-Schwab transformations with
/// `singular_points` Gauss points per direction of [0,1]^4. Separated pairs
/// use a collapsed Gauss rule on each triangle whose points per direction
/// are graded by d / h, the centroid distance over the larger diameter.
struct BemQuadrature {
  int singular_points = 10;
  /// Points per direction for d/h below near_ratio, mid_ratio, far_ratio,
  /// and beyond.
  std::array<int, 4> regular_points{10, 7, 5, 3};
  double near_ratio = 1.5;
  double mid_ratio = 3.0;
  double far_ratio = 8.0;

  /// Throws ConfigError for orders below the minimum (2 singular, 1 regular)
  /// or non-increasing ratios.
  void validate() const;
  /// Every order doubled; used for quadrature-refinement checks.
  BemQuadrature doubled() const;
  int regular_points_for(double ratio) const;
};

enum class PairKind { Coincident, Edge, Vertex, Regular };

/// Points of a rule for the pair integral int_{T_x} int_{T_y} F(x, y):
/// barycentric coordinates on each triangle (in the triangles' own vertex
/// order) and weights that include both surface Jacobians.
struct PairRule {
  PairKind kind = PairKind::Regular;
  std::vector<std::array<double, 3>> bary_x;
  std::vector<std::array<double, 3>> bary_y;
  std::vector<double> weights;
  std::size_t size() const { return weights.size(); }
};

/// Classification of two triangles of one mesh by shared vertices.
PairKind classify_pair(const std::array<int, 3>& tx, const std::array<int, 3>& ty);

/// Builds and caches reference rules; one instance per assembly.
class PairQuadrature {
 public:
  explicit PairQuadrature(BemQuadrature config);

  const BemQuadrature& config() const noexcept { return config_; }

  /// Rule for triangles tx, ty of `mesh`.
  void rule(const SurfaceMesh& mesh, std::size_t tx, std::size_t ty, PairRule& out) const;

  /// Regular (tensor) rule for triangles of possibly different meshes.
  void regular_rule(int points, double jac_x, double jac_y, PairRule& out) const;

 private:
  struct Reference {
    std::vector<std::array<double, 4>> points;  // (x1, x2, y1, y2) on {0 <= x2 <= x1 <= 1}
    std::vector<double> weights;
  };
  const TriangleRule& triangle(int points) const;

  BemQuadrature config_;
  Reference coincident_, edge_, vertex_;
  std::vector<TriangleRule> triangle_rules_;
};

}  // namespace fembem
