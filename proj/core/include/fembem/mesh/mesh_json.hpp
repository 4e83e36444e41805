#pragma once

#include <string>

#include "fembem/mesh/tet_mesh.hpp"

namespace fembem {

/// JSON dump: {"vertices": [[x,y,z],...], "tets": [[a,b,c,d],...],
/// "boundary_facets": [{"vertices": [a,b,c], "tet": t, "local_face": f}, ...]}
std::string mesh_to_json(const TetMesh& mesh);
/// Rebuilds the mesh from vertices and tets; the stored boundary facets must
/// agree with the reconstructed ones.
TetMesh mesh_from_json(const std::string& text);

}  // namespace fembem
