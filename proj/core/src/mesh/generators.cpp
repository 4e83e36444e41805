#include "fembem/mesh/generators.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <vector>

#include "fembem/common/errors.hpp"

namespace fembem {

namespace {

void check_subdivisions(int n) {
  if (n < 1) throw InvalidArgument("mesh generator needs n >= 1 subdivisions, got " + std::to_string(n));
}

}  // namespace

TetMesh generate_cube_mesh(int n, const Vec3& lower, const Vec3& upper, CubeSplit split) {
  check_subdivisions(n);
  const int m = n + 1;
  auto index = [m](int i, int j, int k) { return i + m * (j + m * k); };

  std::vector<Vec3> vertices;
  vertices.reserve(static_cast<std::size_t>(m) * m * m);
  for (int k = 0; k < m; ++k) {
    for (int j = 0; j < m; ++j) {
      for (int i = 0; i < m; ++i) {
        const Vec3 t(static_cast<double>(i) / n, static_cast<double>(j) / n,
                     static_cast<double>(k) / n);
        vertices.push_back(lower + t.cwiseProduct(upper - lower));
      }
    }
  }

  static constexpr std::array<std::array<int, 3>, 6> perms{{
      {0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}}};

  std::vector<std::array<int, 4>> tets;
  tets.reserve(6 * static_cast<std::size_t>(n) * n * n);
  for (int k = 0; k < n; ++k) {
    for (int j = 0; j < n; ++j) {
      for (int i = 0; i < n; ++i) {
        std::array<int, 3> start{i, j, k};
        std::array<int, 3> step{1, 1, 1};
        if (split == CubeSplit::Mirrored) {
          for (int d = 0; d < 3; ++d) {
            if (2 * start[d] + 1 < n) {
              ++start[d];
              step[d] = -1;
            }
          }
        }
        for (const auto& p : perms) {
          std::array<int, 3> c = start;
          std::array<int, 4> tet{};
          tet[0] = index(c[0], c[1], c[2]);
          for (int s = 0; s < 3; ++s) {
            c[p[s]] += step[p[s]];
            tet[s + 1] = index(c[0], c[1], c[2]);
          }
          tets.push_back(tet);
        }
      }
    }
  }
  return TetMesh(std::move(vertices), std::move(tets));
}

TetMesh generate_ball_mesh(int n) {
  const TetMesh cube = generate_cube_mesh(n, Vec3::Constant(-1.0), Vec3::Constant(1.0), CubeSplit::Mirrored);
  std::vector<Vec3> vertices = cube.vertices();
  for (auto& x : vertices) {
    const double r2 = x.norm();
    if (r2 == 0.0) continue;
    const double rinf = x.cwiseAbs().maxCoeff();
    x *= rinf / r2;
    if (rinf == 1.0) x /= x.norm();
  }
  return TetMesh(std::move(vertices), cube.tets());
}

}  // namespace fembem
