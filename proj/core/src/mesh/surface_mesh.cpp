#include "fembem/mesh/surface_mesh.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "fembem/common/errors.hpp"

namespace fembem {

SurfaceMesh SurfaceMesh::from_triangles(std::vector<Vec3> vertices,
                                        std::vector<std::array<int, 3>> triangles) {
  SurfaceMesh s;
  s.vertices_ = std::move(vertices);
  s.triangles_ = std::move(triangles);
  const int nv = static_cast<int>(s.vertices_.size());
  for (const auto& tri : s.triangles_) {
    for (int v : tri) {
      if (v < 0 || v >= nv) throw StructuralError("triangle references a missing vertex");
    }
  }
  s.compute_geometry();
  return s;
}

void SurfaceMesh::compute_geometry() {
  normals_.resize(triangles_.size());
  areas_.resize(triangles_.size());
  diameters_.resize(triangles_.size());
  for (std::size_t t = 0; t < triangles_.size(); ++t) {
    const Vec3& a = vertices_[triangles_[t][0]];
    const Vec3& b = vertices_[triangles_[t][1]];
    const Vec3& c = vertices_[triangles_[t][2]];
    const Vec3 cross = (b - a).cross(c - a);
    const double twice_area = cross.norm();
    if (!(twice_area > 0.0)) {
      throw StructuralError("surface triangle " + std::to_string(t) + " has zero area");
    }
    normals_[t] = cross / twice_area;
    areas_[t] = 0.5 * twice_area;
    diameters_[t] = std::max({(b - a).norm(), (c - b).norm(), (a - c).norm()});
  }
}

Vec3 SurfaceMesh::centroid(std::size_t t) const {
  const auto& tri = triangles_.at(t);
  return (vertices_[tri[0]] + vertices_[tri[1]] + vertices_[tri[2]]) / 3.0;
}

double SurfaceMesh::total_area() const {
  double a = 0.0;
  for (double x : areas_) a += x;
  return a;
}

SurfaceMesh extract_boundary(const TetMesh& mesh) {
  SurfaceMesh s;
  const auto& facets = mesh.boundary_facets();

  // directed edge -> count; a closed oriented surface has every directed
  // edge exactly once and its reverse exactly once.
  std::map<std::pair<int, int>, int> directed;
  for (const auto& f : facets) {
    for (int e = 0; e < 3; ++e) {
      ++directed[{f.vertices[e], f.vertices[(e + 1) % 3]}];
    }
  }
  for (const auto& [edge, count] : directed) {
    const auto rev = directed.find({edge.second, edge.first});
    if (count != 1 || rev == directed.end() || rev->second != 1) {
      throw StructuralError("non-manifold boundary at edge (" + std::to_string(edge.first) +
                            ", " + std::to_string(edge.second) + ")");
    }
  }

  std::vector<int> to_surface(mesh.num_vertices(), -1);
  for (const auto& f : facets) {
    for (int v : f.vertices) to_surface[v] = 0;
  }
  for (std::size_t v = 0; v < to_surface.size(); ++v) {
    if (to_surface[v] == 0) {
      to_surface[v] = static_cast<int>(s.vertices_.size());
      s.vertices_.push_back(mesh.vertices()[v]);
      s.volume_vertex_.push_back(static_cast<int>(v));
    }
  }
  s.triangles_.reserve(facets.size());
  for (const auto& f : facets) {
    s.triangles_.push_back(
        {to_surface[f.vertices[0]], to_surface[f.vertices[1]], to_surface[f.vertices[2]]});
    s.source_facets_.push_back(f);
  }
  s.compute_geometry();
  return s;
}

}  // namespace fembem
