#include <gtest/gtest.h>

#include <random>
#include <set>

#include "fembem/common/errors.hpp"
#include "fembem/fem/volume_space.hpp"
#include "fembem/mesh/generators.hpp"

using namespace fembem;

namespace {
std::shared_ptr<const TetMesh> cube(int n) { return std::make_shared<const TetMesh>(generate_cube_mesh(n)); }

std::size_t edge_count(const TetMesh& m) {
  std::set<std::pair<int, int>> edges;
  for (const auto& t : m.tets()) {
    for (int a = 0; a < 4; ++a) {
      for (int b = a + 1; b < 4; ++b) edges.insert(std::minmax(t[a], t[b]));
    }
  }
  return edges.size();
}
}  // namespace

TEST(VolumeSpace, LinearDofCountsAreVertexCounts) {
  EXPECT_EQ(VolumeSpace(cube(1), 1).num_dofs(), 8u);
  EXPECT_EQ(VolumeSpace(cube(2), 1).num_dofs(), 27u);
}

TEST(VolumeSpace, QuadraticDofCountIsVerticesPlusEdges) {
  const auto m = cube(1);
  EXPECT_EQ(edge_count(*m), 19u);
  EXPECT_EQ(VolumeSpace(m, 2).num_dofs(), 27u);
  const auto m3 = cube(3);
  EXPECT_EQ(VolumeSpace(m3, 2).num_dofs(), m3->num_vertices() + edge_count(*m3));
}

TEST(VolumeSpace, UnsupportedDegreeRejected) {
  EXPECT_THROW(VolumeSpace(cube(1), 0), UnsupportedSpace);
  EXPECT_THROW(VolumeSpace(cube(1), 3), UnsupportedSpace);
  EXPECT_THROW(VolumeSpace(nullptr, 1), InvalidArgument);
}

TEST(VolumeSpace, QuadraticDofsSitAtVerticesAndEdgeMidpoints) {
  const auto m = cube(2);
  const VolumeSpace s(m, 2);
  for (std::size_t t = 0; t < m->num_tets(); ++t) {
    const auto& tet = m->tets()[t];
    std::vector<Vec3> expected;
    for (int a = 0; a < 4; ++a) expected.push_back(m->vertices()[tet[a]]);
    for (int a = 0; a < 4; ++a) {
      for (int b = a + 1; b < 4; ++b) expected.push_back(0.5 * (m->vertices()[tet[a]] + m->vertices()[tet[b]]));
    }
    for (int dof : s.tet_dofs(t)) {
      const Vec3& p = s.dof_points()[dof];
      bool found = false;
      for (const Vec3& e : expected) found = found || (p - e).norm() < 1e-14;
      EXPECT_TRUE(found);
    }
  }
}

TEST(VolumeSpace, InterpolationReproducesPolynomialsOfItsDegree) {
  std::mt19937 rng(7);
  std::uniform_real_distribution<double> U(0.0, 1.0);
  for (int degree : {1, 2}) {
    const auto m = cube(2);
    const VolumeSpace s(m, degree);
    auto f = [degree](const Vec3& x) {
      const double lin = 0.3 + 1.2 * x.x() - 0.7 * x.y() + 2.0 * x.z();
      return degree == 1 ? lin : lin + x.x() * x.y() - 0.5 * x.z() * x.z() + 0.25 * x.x() * x.x();
    };
    auto grad = [degree](const Vec3& x) {
      Vec3 g(1.2, -0.7, 2.0);
      if (degree == 2) g += Vec3(x.y() + 0.5 * x.x(), x.x(), -x.z());
      return g;
    };
    const Vector c = s.interpolate(f);
    for (std::size_t t = 0; t < m->num_tets(); ++t) {
      double l1 = U(rng), l2 = U(rng), l3 = U(rng);
      if (l1 + l2 + l3 > 1.0) {
        l1 *= 0.3;
        l2 *= 0.3;
        l3 *= 0.3;
      }
      const std::array<double, 4> bary{1.0 - l1 - l2 - l3, l1, l2, l3};
      const auto& tet = m->tets()[t];
      Vec3 x = Vec3::Zero();
      for (int k = 0; k < 4; ++k) x += bary[k] * m->vertices()[tet[k]];
      EXPECT_NEAR(s.evaluate(c, t, bary), f(x), 1e-13);
      EXPECT_NEAR((s.evaluate_gradient(c, t, bary) - grad(x)).norm(), 0.0, 1e-12);
    }
  }
}

TEST(VolumeSpace, BoundaryDofsAreExactlyThoseOnTheSurface) {
  for (int degree : {1, 2}) {
    const VolumeSpace s(cube(3), degree);
    std::set<int> boundary(s.boundary_dofs().begin(), s.boundary_dofs().end());
    for (std::size_t i = 0; i < s.num_dofs(); ++i) {
      const Vec3& p = s.dof_points()[i];
      const bool on_surface = p.minCoeff() < 1e-14 || p.maxCoeff() > 1.0 - 1e-14;
      EXPECT_EQ(on_surface, boundary.count(static_cast<int>(i)) == 1);
    }
  }
}
