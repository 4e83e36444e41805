#pragma once

#include <iosfwd>
#include <string>

#include "fembem/mesh/tet_mesh.hpp"

namespace fembem {

/// Reads a Gmsh ASCII v2.2 file. Tetrahedra (type 4) form the mesh;
/// triangles (type 2) are only checked against the reconstructed boundary.
/// Points (15) and lines (1) are skipped; any other element type is an
/// error. Node ids must be exactly 1..N. Errors carry the line number.
TetMesh read_gmsh(std::istream& in);
TetMesh read_gmsh(const std::string& path);

/// Writes nodes, tets and the boundary triangles in Gmsh ASCII v2.2.
void write_gmsh(std::ostream& out, const TetMesh& mesh);
void write_gmsh(const std::string& path, const TetMesh& mesh);

}  // namespace fembem
