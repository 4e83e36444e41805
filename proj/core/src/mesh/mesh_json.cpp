#include "fembem/mesh/mesh_json.hpp"

#include <json.hpp>

#include "fembem/common/errors.hpp"

namespace fembem {

std::string mesh_to_json(const TetMesh& mesh) {
  nlohmann::json j;
  auto& verts = j["vertices"] = nlohmann::json::array();
  for (const auto& x : mesh.vertices()) verts.push_back({x[0], x[1], x[2]});
  auto& tets = j["tets"] = nlohmann::json::array();
  for (const auto& t : mesh.tets()) tets.push_back(t);
  auto& facets = j["boundary_facets"] = nlohmann::json::array();
  for (const auto& f : mesh.boundary_facets()) {
    facets.push_back({{"vertices", f.vertices}, {"tet", f.tet}, {"local_face", f.local_face}});
  }
  return j.dump();
}

TetMesh mesh_from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(0, std::string("invalid mesh JSON: ") + e.what());
  }
  std::vector<Vec3> vertices;
  for (const auto& v : j.at("vertices")) vertices.emplace_back(v.at(0), v.at(1), v.at(2));
  std::vector<std::array<int, 4>> tets = j.at("tets").get<std::vector<std::array<int, 4>>>();
  TetMesh mesh(std::move(vertices), std::move(tets));
  if (j.contains("boundary_facets")) {
    const auto& stored = j["boundary_facets"];
    const auto& rebuilt = mesh.boundary_facets();
    if (stored.size() != rebuilt.size()) {
      throw StructuralError("stored boundary facet count does not match the tets");
    }
    for (std::size_t i = 0; i < rebuilt.size(); ++i) {
      if (stored[i].at("tet").get<int>() != rebuilt[i].tet ||
          stored[i].at("local_face").get<int>() != rebuilt[i].local_face) {
        throw StructuralError("stored boundary facet " + std::to_string(i) + " does not match the tets");
      }
    }
  }
  return mesh;
}

}  // namespace fembem
