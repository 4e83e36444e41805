#pragma once

#include <array>
#include <cstddef>
#include <vector>

#include "fembem/common/types.hpp"
#include "fembem/mesh/tet_mesh.hpp"

namespace fembem {

/// Oriented triangulation of the interface. When produced by
/// extract_boundary it remembers, per vertex and per triangle, where it came
/// from in the volume mesh.
class SurfaceMesh {
 public:
  SurfaceMesh() = default;

  /// Standalone surface (no volume mesh behind it). Normals follow the
  /// right-hand rule of each vertex triple.
  static SurfaceMesh from_triangles(std::vector<Vec3> vertices,
                                    std::vector<std::array<int, 3>> triangles);

  const std::vector<Vec3>& vertices() const noexcept { return vertices_; }
  const std::vector<std::array<int, 3>>& triangles() const noexcept { return triangles_; }
  const std::vector<Vec3>& normals() const noexcept { return normals_; }
  const std::vector<double>& areas() const noexcept { return areas_; }
  const std::vector<double>& diameters() const noexcept { return diameters_; }

  std::size_t num_vertices() const noexcept { return vertices_.size(); }
  std::size_t num_triangles() const noexcept { return triangles_.size(); }

  Vec3 centroid(std::size_t triangle) const;
  double total_area() const;

  bool has_volume_source() const noexcept { return !volume_vertex_.empty(); }
  /// Volume-mesh index of surface vertex `v`.
  int volume_vertex(std::size_t v) const { return volume_vertex_.at(v); }
  /// Boundary facet of the volume mesh that triangle `t` was built from.
  const BoundaryFacet& source_facet(std::size_t t) const { return source_facets_.at(t); }

  friend SurfaceMesh extract_boundary(const TetMesh& mesh);

 private:
  void compute_geometry();

  std::vector<Vec3> vertices_;
  std::vector<std::array<int, 3>> triangles_;
  std::vector<Vec3> normals_;
  std::vector<double> areas_;
  std::vector<double> diameters_;
  std::vector<int> volume_vertex_;
  std::vector<BoundaryFacet> source_facets_;
};

/// Boundary triangulation with outward normals. Throws StructuralError if
/// the boundary is not a closed, consistently oriented 2-manifold.
SurfaceMesh extract_boundary(const TetMesh& mesh);

}  // namespace fembem
