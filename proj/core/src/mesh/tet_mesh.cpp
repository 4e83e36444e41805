#include "fembem/mesh/tet_mesh.hpp"

#include <algorithm>
#include <string>

#include "fembem/common/errors.hpp"

namespace fembem {

namespace {

double signed_volume_of(const Vec3& a, const Vec3& b, const Vec3& c, const Vec3& d) {
  return (b - a).cross(c - a).dot(d - a) / 6.0;
}

struct FacetRecord {
  std::array<int, 3> key;
  int tet;
  int face;
};

}  // namespace

std::array<int, 3> TetMesh::local_face_vertices(int face) {
  static constexpr std::array<std::array<int, 3>, 4> table{{
      {1, 2, 3},
      {0, 3, 2},
      {0, 1, 3},
      {0, 2, 1},
  }};
  return table.at(static_cast<std::size_t>(face));
}

TetMesh::TetMesh(std::vector<Vec3> vertices, std::vector<std::array<int, 4>> tets)
    : vertices_(std::move(vertices)), tets_(std::move(tets)) {
  const int nv = static_cast<int>(vertices_.size());
  for (std::size_t t = 0; t < tets_.size(); ++t) {
    auto& tet = tets_[t];
    for (int v : tet) {
      if (v < 0 || v >= nv) {
        throw StructuralError("tet " + std::to_string(t) + " references vertex " +
                              std::to_string(v) + " outside [0, " + std::to_string(nv) + ")");
      }
    }
    double vol = signed_volume_of(vertices_[tet[0]], vertices_[tet[1]], vertices_[tet[2]],
                                  vertices_[tet[3]]);
    const double scale = (vertices_[tet[1]] - vertices_[tet[0]]).norm();
    if (std::abs(vol) <= 1e-14 * scale * scale * scale) {
      throw StructuralError("tet " + std::to_string(t) + " is degenerate");
    }
    if (vol < 0.0) std::swap(tet[2], tet[3]);
  }

  std::vector<FacetRecord> facets;
  facets.reserve(4 * tets_.size());
  for (std::size_t t = 0; t < tets_.size(); ++t) {
    for (int f = 0; f < 4; ++f) {
      const auto local = local_face_vertices(f);
      std::array<int, 3> key{tets_[t][local[0]], tets_[t][local[1]], tets_[t][local[2]]};
      std::sort(key.begin(), key.end());
      facets.push_back({key, static_cast<int>(t), f});
    }
  }
  std::sort(facets.begin(), facets.end(), [](const FacetRecord& a, const FacetRecord& b) {
    return a.key != b.key ? a.key < b.key : a.tet < b.tet;
  });

  for (std::size_t i = 0; i < facets.size();) {
    std::size_t j = i + 1;
    while (j < facets.size() && facets[j].key == facets[i].key) ++j;
    const std::size_t count = j - i;
    if (count == 1) {
      const auto& rec = facets[i];
      const auto local = local_face_vertices(rec.face);
      const auto& tet = tets_[rec.tet];
      boundary_.push_back({{tet[local[0]], tet[local[1]], tet[local[2]]}, rec.tet, rec.face});
    } else if (count == 2) {
      ++num_interior_facets_;
    } else {
      throw StructuralError("facet shared by " + std::to_string(count) + " tets");
    }
    i = j;
  }
  std::sort(boundary_.begin(), boundary_.end(), [](const BoundaryFacet& a, const BoundaryFacet& b) {
    return a.tet != b.tet ? a.tet < b.tet : a.local_face < b.local_face;
  });
}

double TetMesh::signed_volume(std::size_t tet) const {
  const auto& t = tets_.at(tet);
  return signed_volume_of(vertices_[t[0]], vertices_[t[1]], vertices_[t[2]], vertices_[t[3]]);
}

double TetMesh::diameter(std::size_t tet) const {
  const auto& t = tets_.at(tet);
  double d = 0.0;
  for (int a = 0; a < 4; ++a) {
    for (int b = a + 1; b < 4; ++b) {
      d = std::max(d, (vertices_[t[a]] - vertices_[t[b]]).norm());
    }
  }
  return d;
}

Vec3 TetMesh::centroid(std::size_t tet) const {
  const auto& t = tets_.at(tet);
  return 0.25 * (vertices_[t[0]] + vertices_[t[1]] + vertices_[t[2]] + vertices_[t[3]]);
}

double TetMesh::total_volume() const {
  double v = 0.0;
  for (std::size_t t = 0; t < tets_.size(); ++t) v += signed_volume(t);
  return v;
}

double mesh_size(const TetMesh& mesh) {
  if (mesh.empty()) throw InvalidArgument("mesh_size of an empty mesh");
  double h = 0.0;
  for (std::size_t t = 0; t < mesh.num_tets(); ++t) h = std::max(h, mesh.diameter(t));
  return h;
}

}  // namespace fembem
