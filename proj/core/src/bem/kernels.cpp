#include "fembem/bem/kernels.hpp"

#include "fembem/common/errors.hpp"

namespace fembem {

namespace {

double checked_distance(const Vec3& x, const Vec3& y) {
  const double r = (x - y).norm();
  if (r == 0.0) throw SingularEvaluation("Green's function evaluated at coincident points");
  return r;
}

}  // namespace

double greens_kernel(const Vec3& x, const Vec3& y) { return 1.0 / (4.0 * kPi * checked_distance(x, y)); }

double double_layer_kernel(const Vec3& x, const Vec3& y, const Vec3& ny) {
  const double r = checked_distance(x, y);
  return ny.dot(x - y) / (4.0 * kPi * r * r * r);
}

double adjoint_double_layer_kernel(const Vec3& x, const Vec3& y, const Vec3& nx) {
  const double r = checked_distance(x, y);
  return nx.dot(y - x) / (4.0 * kPi * r * r * r);
}

}  // namespace fembem
