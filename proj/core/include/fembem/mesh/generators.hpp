#pragma once

#include "fembem/common/types.hpp"
#include "fembem/mesh/tet_mesh.hpp"

namespace fembem {

/// Kuhn: every cell uses the diagonal from its lowest to its highest
/// corner. Mirrored: the pattern is reflected per octant so each diagonal
/// starts at the cell corner nearest the box center.
enum class CubeSplit { Kuhn, Mirrored };

/// Structured mesh of the box [lower, upper] with n cells per axis, each
/// cell split into the six tetrahedra sharing one main diagonal.
/// Vertex (i, j, k) has index i + (n+1) (j + (n+1) k).
TetMesh generate_cube_mesh(int n, const Vec3& lower = Vec3::Zero(),
                           const Vec3& upper = Vec3::Ones(), CubeSplit split = CubeSplit::Kuhn);

/// Unit ball: the mirrored [-1, 1]^3 cube mesh pushed through
/// x -> x |x|_inf / |x|_2, which sends the cube surface onto the unit sphere.
/// The mirrored split keeps every tetrahedron at least one vertex away from
/// the sphere, so no element has all four vertices on it.
TetMesh generate_ball_mesh(int n);

}  // namespace fembem
