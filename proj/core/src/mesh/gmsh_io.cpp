#include "fembem/mesh/gmsh_io.hpp"

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <set>
#include <sstream>
#include <unordered_map>
#include <vector>

#include "fembem/common/errors.hpp"

namespace fembem {

namespace {

class LineReader {
 public:
  explicit LineReader(std::istream& in) : in_(in) {}

  bool next(std::string& line) {
    while (std::getline(in_, line)) {
      ++number_;
      if (!line.empty() && line.back() == '\r') line.pop_back();
      if (line.find_first_not_of(" \t") != std::string::npos) return true;
    }
    return false;
  }

  std::string expect(const std::string& what) {
    std::string line;
    if (!next(line)) throw ParseError(number_, "unexpected end of file, expected " + what);
    return line;
  }

  std::size_t number() const { return number_; }

 private:
  std::istream& in_;
  std::size_t number_ = 0;
};

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t");
  const auto e = s.find_last_not_of(" \t");
  return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
}

long parse_count(LineReader& reader, const std::string& what) {
  const std::string line = reader.expect(what);
  std::istringstream ss(line);
  long n = -1;
  if (!(ss >> n) || n < 0) throw ParseError(reader.number(), "malformed " + what + ": '" + line + "'");
  return n;
}

}  // namespace

TetMesh read_gmsh(std::istream& in) {
  LineReader reader(in);
  std::string line;

  if (!reader.next(line) || trim(line) != "$MeshFormat") {
    throw ParseError(reader.number(), "missing $MeshFormat header");
  }
  {
    line = reader.expect("format line");
    std::istringstream ss(line);
    std::string version;
    int file_type = -1;
    int data_size = 0;
    if (!(ss >> version >> file_type >> data_size)) {
      throw ParseError(reader.number(), "malformed $MeshFormat line");
    }
    if (version.rfind("2.2", 0) != 0) {
      throw ParseError(reader.number(), "unsupported Gmsh version " + version + " (need 2.2)");
    }
    if (file_type != 0) throw ParseError(reader.number(), "binary Gmsh files are not supported");
    if (trim(reader.expect("$EndMeshFormat")) != "$EndMeshFormat") {
      throw ParseError(reader.number(), "expected $EndMeshFormat");
    }
  }

  std::vector<Vec3> vertices;
  std::unordered_map<long, int> node_index;
  std::vector<std::array<int, 4>> tets;
  struct FileTriangle {
    std::array<int, 3> nodes;
    std::size_t line;
  };
  std::vector<FileTriangle> triangles;
  bool have_nodes = false;
  bool have_elements = false;

  while (reader.next(line)) {
    const std::string section = trim(line);
    if (section == "$Nodes") {
      const long n = parse_count(reader, "node count");
      vertices.reserve(n);
      std::vector<long> ids;
      ids.reserve(n);
      for (long i = 0; i < n; ++i) {
        line = reader.expect("node line");
        std::istringstream ss(line);
        long id = 0;
        double x = 0, y = 0, z = 0;
        if (!(ss >> id >> x >> y >> z)) throw ParseError(reader.number(), "malformed node line");
        if (!node_index.emplace(id, static_cast<int>(vertices.size())).second) {
          throw ParseError(reader.number(), "duplicate node id " + std::to_string(id));
        }
        vertices.emplace_back(x, y, z);
        ids.push_back(id);
      }
      if (trim(reader.expect("$EndNodes")) != "$EndNodes") {
        throw ParseError(reader.number(), "expected $EndNodes");
      }
      std::sort(ids.begin(), ids.end());
      for (long k = 0; k < n; ++k) {
        if (ids[k] != k + 1) {
          throw ParseError(reader.number(), "node numbering has a gap: missing node index " +
                                                std::to_string(k + 1));
        }
      }
      have_nodes = true;
    } else if (section == "$Elements") {
      if (!have_nodes) throw ParseError(reader.number(), "$Elements before $Nodes");
      const long n = parse_count(reader, "element count");
      for (long e = 0; e < n; ++e) {
        line = reader.expect("element line");
        std::istringstream ss(line);
        long id = 0;
        int type = 0;
        int ntags = 0;
        if (!(ss >> id >> type >> ntags) || ntags < 0) {
          throw ParseError(reader.number(), "malformed element line");
        }
        for (int t = 0; t < ntags; ++t) {
          long tag = 0;
          if (!(ss >> tag)) throw ParseError(reader.number(), "missing element tag");
        }
        int nodes_per_element = 0;
        switch (type) {
          case 15: nodes_per_element = 1; break;
          case 1: nodes_per_element = 2; break;
          case 2: nodes_per_element = 3; break;
          case 4: nodes_per_element = 4; break;
          default:
            throw ParseError(reader.number(), "unsupported element type " + std::to_string(type));
        }
        std::array<int, 4> nodes{};
        for (int k = 0; k < nodes_per_element; ++k) {
          long ref = 0;
          if (!(ss >> ref)) throw ParseError(reader.number(), "missing element node");
          const auto it = node_index.find(ref);
          if (it == node_index.end()) {
            throw ParseError(reader.number(), "element references missing node index " + std::to_string(ref));
          }
          nodes[k] = it->second;
        }
        if (type == 4) tets.push_back(nodes);
        if (type == 2) triangles.push_back({{nodes[0], nodes[1], nodes[2]}, reader.number()});
      }
      if (trim(reader.expect("$EndElements")) != "$EndElements") {
        throw ParseError(reader.number(), "expected $EndElements");
      }
      have_elements = true;
    } else if (!section.empty() && section[0] == '$') {
      const std::string end = "$End" + section.substr(1);
      while (true) {
        line = reader.expect(end);
        if (trim(line) == end) break;
      }
    } else {
      throw ParseError(reader.number(), "unexpected content outside a section: '" + section + "'");
    }
  }
  if (!have_nodes || !have_elements) throw ParseError(reader.number(), "missing $Nodes or $Elements section");
  if (tets.empty()) throw ParseError(reader.number(), "file contains no tetrahedra");

  TetMesh mesh(std::move(vertices), std::move(tets));

  std::set<std::array<int, 3>> boundary;
  for (const auto& f : mesh.boundary_facets()) {
    auto key = f.vertices;
    std::sort(key.begin(), key.end());
    boundary.insert(key);
  }
  for (const auto& tri : triangles) {
    auto key = tri.nodes;
    std::sort(key.begin(), key.end());
    if (!boundary.count(key)) {
      throw ParseError(tri.line, "triangle does not match any boundary facet of the tetrahedra");
    }
  }
  return mesh;
}

TetMesh read_gmsh(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidArgument("cannot open mesh file " + path);
  return read_gmsh(in);
}

void write_gmsh(std::ostream& out, const TetMesh& mesh) {
  out << "$MeshFormat\n2.2 0 8\n$EndMeshFormat\n";
  out << "$Nodes\n" << mesh.num_vertices() << '\n' << std::setprecision(17);
  for (std::size_t v = 0; v < mesh.num_vertices(); ++v) {
    const Vec3& x = mesh.vertices()[v];
    out << v + 1 << ' ' << x[0] << ' ' << x[1] << ' ' << x[2] << '\n';
  }
  out << "$EndNodes\n";
  const auto& facets = mesh.boundary_facets();
  out << "$Elements\n" << facets.size() + mesh.num_tets() << '\n';
  std::size_t id = 1;
  for (const auto& f : facets) {
    out << id++ << " 2 2 1 1 " << f.vertices[0] + 1 << ' ' << f.vertices[1] + 1 << ' '
        << f.vertices[2] + 1 << '\n';
  }
  for (const auto& t : mesh.tets()) {
    out << id++ << " 4 2 2 1 " << t[0] + 1 << ' ' << t[1] + 1 << ' ' << t[2] + 1 << ' '
        << t[3] + 1 << '\n';
  }
  out << "$EndElements\n";
}

void write_gmsh(const std::string& path, const TetMesh& mesh) {
  std::ofstream out(path);
  if (!out) throw InvalidArgument("cannot open " + path + " for writing");
  write_gmsh(out, mesh);
}

}  // namespace fembem
