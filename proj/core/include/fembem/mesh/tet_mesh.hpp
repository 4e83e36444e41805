#pragma once

#include <array>
#include <cstddef>
#include <vector>

#include "fembem/common/types.hpp"

namespace fembem {

/// A facet of the tetrahedral mesh that lies on its boundary. The vertex
/// triple is ordered so that its right-hand normal points out of the mesh.
struct BoundaryFacet {
  std::array<int, 3> vertices;
  int tet;
  /// Local index of the tet vertex opposite to the facet.
  int local_face;
};

/// Conforming tetrahedral mesh of the interior domain. Immutable after
/// construction; every tet is stored with positive signed volume.
class TetMesh {
 public:
  TetMesh() = default;
  /// Validates connectivity, flips negatively oriented tets and builds the
  /// boundary facet list. Throws StructuralError on degenerate tets or
  /// facets shared by more than two tets.
  TetMesh(std::vector<Vec3> vertices, std::vector<std::array<int, 4>> tets);

  const std::vector<Vec3>& vertices() const noexcept { return vertices_; }
  const std::vector<std::array<int, 4>>& tets() const noexcept { return tets_; }
  const std::vector<BoundaryFacet>& boundary_facets() const noexcept { return boundary_; }

  std::size_t num_vertices() const noexcept { return vertices_.size(); }
  std::size_t num_tets() const noexcept { return tets_.size(); }
  std::size_t num_interior_facets() const noexcept { return num_interior_facets_; }
  bool empty() const noexcept { return tets_.empty(); }

  double signed_volume(std::size_t tet) const;
  double volume(std::size_t tet) const { return signed_volume(tet); }
  /// Largest pairwise vertex distance of the tet.
  double diameter(std::size_t tet) const;
  Vec3 centroid(std::size_t tet) const;
  double total_volume() const;

  /// Vertex triple of local face `face` (opposite vertex `face`), ordered
  /// outward for a positively oriented tet.
  static std::array<int, 3> local_face_vertices(int face);

 private:
  std::vector<Vec3> vertices_;
  std::vector<std::array<int, 4>> tets_;
  std::vector<BoundaryFacet> boundary_;
  std::size_t num_interior_facets_ = 0;
};

/// h = max over tets of the tet diameter. Throws InvalidArgument when empty.
double mesh_size(const TetMesh& mesh);

}  // namespace fembem
