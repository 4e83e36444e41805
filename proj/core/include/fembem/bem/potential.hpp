#pragma once

#include <vector>

#include "fembem/bem/trace_space.hpp"
#include "fembem/common/types.hpp"

namespace fembem {

enum class ProximityPolicy { Reject, Warn };

struct PotentialOptions {
  /// Points per direction of the collapsed Gauss rule on each triangle.
  int points = 6;
  /// A point closer to a triangle centroid than this many local diameters is
  /// treated as too close for regular quadrature.
  double min_distance_ratio = 1.0;
  ProximityPolicy policy = ProximityPolicy::Reject;
};

/// Representation formula u(x) = -int G(x,y) lambda(y) dy + int dG/dn_y u+(y) dy
/// for points outside the domain. Too-close points either throw
/// InvalidArgument or log a warning and are evaluated anyway.
std::vector<double> evaluate_exterior_potential(const std::vector<Vec3>& points, const TraceSpace& w_space,
                                                const Vector& u_plus, const TraceSpace& lambda_space,
                                                const Vector& lambda, const PotentialOptions& options = {});

}  // namespace fembem
