#pragma once

#include "fembem/common/types.hpp"

namespace fembem {

/// Laplace fundamental solution G(x, y) = 1 / (4 pi |x - y|).
/// Throws SingularEvaluation for x == y.
double greens_kernel(const Vec3& x, const Vec3& y);

/// d G(x, y) / d n_y = n_y . (x - y) / (4 pi |x - y|^3).
double double_layer_kernel(const Vec3& x, const Vec3& y, const Vec3& normal_y);

/// d G(x, y) / d n_x = n_x . (y - x) / (4 pi |x - y|^3).
double adjoint_double_layer_kernel(const Vec3& x, const Vec3& y, const Vec3& normal_x);

}  // namespace fembem
