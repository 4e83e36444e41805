#include "fembem/harness/cases.hpp"

#include <cmath>

#include "fembem/common/errors.hpp"
#include "fembem/mesh/generators.hpp"

namespace fembem {

int ManufacturedCase::subdivisions(int level) const {
  if (level < 1 || level > 10) throw ConfigError("mesh level must lie in [1, 10]");
  return base_subdivisions << (level - 1);
}

const ExactSolution& ManufacturedCase::require_exact() const {
  if (!has_exact) throw ConfigError("case '" + name + "' has no exact solution");
  return exact;
}

ManufacturedCase sphere_case() {
  ManufacturedCase c;
  c.name = "sphere";
  c.has_exact = true;
  c.lambda_degree = 1;
  c.base_subdivisions = 4;
  c.generator = [](int n) { return generate_ball_mesh(n); };
  const double shift = (2.0 * kPi + 1.0) / (2.0 * kPi);
  auto u = [shift](const Vec3& x) {
    const double s = x.squaredNorm();
    return (std::sin(kPi * s) + std::cos(kPi * s)) / (2.0 * kPi) + shift;
  };
  c.exact.u_minus = u;
  c.exact.grad_u_minus = [](const Vec3& x) {
    const double s = x.squaredNorm();
    return Vec3((std::cos(kPi * s) - std::sin(kPi * s)) * x);
  };
  c.exact.u_plus = [](const Vec3& x) { return 1.0 / x.norm(); };
  c.exact.lambda = [](const Vec3& x, const Vec3& n) {
    const double r = x.norm();
    return -x.dot(n) / (r * r * r);
  };
  c.forcing = [u](const Vec3& x) {
    const double s = x.squaredNorm();
    const double sn = std::sin(kPi * s), cs = std::cos(kPi * s);
    return -3.0 * (cs - sn) + 2.0 * kPi * s * (sn + cs) + u(x);
  };
  return c;
}

ManufacturedCase cube_case() {
  ManufacturedCase c;
  c.name = "cube";
  c.has_exact = false;
  c.lambda_degree = 0;
  c.base_subdivisions = 2;
  c.generator = [](int n) { return generate_cube_mesh(n); };
  c.forcing = [](const Vec3&) { return 1.0; };
  return c;
}

ManufacturedCase case_by_name(const std::string& name) {
  if (name == "sphere") return sphere_case();
  if (name == "cube") return cube_case();
  throw ConfigError("unknown case '" + name + "' (expected sphere or cube)");
}

}  // namespace fembem
