#include <gbc/error.hpp>
#include <gbc/mesh_io.hpp>

#include <nlohmann/json.hpp>

#include <fstream>
#include <sstream>

namespace gbc {
namespace {

using nlohmann::json;

[[noreturn]] void field_error(const std::string& pointer, const std::string& what) {
  throw Error(ErrorKind::Parse, pointer + ": " + what);
}

const json& require(const json& obj, const std::string& key, const std::string& at) {
  const auto it = obj.find(key);
  if (it == obj.end()) field_error(at, "missing field \"" + key + "\"");
  return *it;
}

int read_id(const json& j, const std::string& at) {
  if (!j.is_number_integer()) field_error(at, "expected an integer vertex id");
  const auto id = j.get<long long>();
  if (id < 0 || id > std::numeric_limits<int>::max()) field_error(at, "vertex id out of range");
  return static_cast<int>(id);
}

std::vector<int> read_ids(const json& j, const std::string& at) {
  if (!j.is_array()) field_error(at, "expected an array of vertex ids");
  std::vector<int> out;
  for (std::size_t a = 0; a < j.size(); ++a) out.push_back(read_id(j[a], at + "/" + std::to_string(a)));
  return out;
}

std::string line_column(std::string_view text, std::size_t byte) {
  std::size_t line = 1, col = 1;
  for (std::size_t a = 0; a < byte && a < text.size(); ++a) {
    if (text[a] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return "line " + std::to_string(line) + " column " + std::to_string(col);
}

}  // namespace

MeshDescription parse_mesh(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    // e.byte is one past the offending character
    throw Error(ErrorKind::Parse, line_column(text, e.byte > 0 ? e.byte - 1 : 0) + ": malformed JSON");
  }
  if (!doc.is_object()) field_error("", "expected a JSON object");

  MeshDescription mesh;
  const json& dim = require(doc, "dimension", "");
  if (!dim.is_number_integer() || (dim.get<int>() != 2 && dim.get<int>() != 3)) {
    field_error("/dimension", "expected 2 or 3");
  }
  mesh.dimension = dim.get<int>();

  const json& verts = require(doc, "vertices", "");
  if (!verts.is_array()) field_error("/vertices", "expected an array");
  for (std::size_t a = 0; a < verts.size(); ++a) {
    const std::string at = "/vertices/" + std::to_string(a);
    const json& v = verts[a];
    if (!v.is_array() || static_cast<int>(v.size()) != mesh.dimension) {
      field_error(at, "expected " + std::to_string(mesh.dimension) + " coordinates");
    }
    Vec p(mesh.dimension);
    for (int c = 0; c < mesh.dimension; ++c) {
      const json& x = v[static_cast<std::size_t>(c)];
      if (!x.is_number()) field_error(at + "/" + std::to_string(c), "expected a number");
      p[c] = x.get<double>();
      if (!std::isfinite(p[c])) field_error(at + "/" + std::to_string(c), "coordinate is not finite");
    }
    mesh.vertices.push_back(p);
  }

  const json& elems = require(doc, "elements", "");
  if (!elems.is_array()) field_error("/elements", "expected an array");
  for (std::size_t e = 0; e < elems.size(); ++e) {
    const std::string at = "/elements/" + std::to_string(e);
    const json& el = elems[e];
    if (!el.is_object()) field_error(at, "expected an object");
    ElementSpec spec;
    if (mesh.dimension == 2) {
      spec.vertices = read_ids(require(el, "vertices", at), at + "/vertices");
    } else {
      const json& faces = require(el, "faces", at);
      if (!faces.is_array()) field_error(at + "/faces", "expected an array of faces");
      for (std::size_t f = 0; f < faces.size(); ++f) {
        spec.faces.push_back(read_ids(faces[f], at + "/faces/" + std::to_string(f)));
      }
    }
    mesh.elements.push_back(std::move(spec));
  }
  return mesh;
}

MeshDescription load_mesh(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::Io, "cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) throw Error(ErrorKind::Io, "cannot read " + path.string());
  return parse_mesh(buf.str());
}

std::string write_mesh(const MeshDescription& mesh) {
  std::ostringstream os;
  os.precision(17);
  auto ids = [&os](const std::vector<int>& v) {
    os << '[';
    for (std::size_t a = 0; a < v.size(); ++a) os << (a ? ", " : "") << v[a];
    os << ']';
  };

  os << "{\n  \"dimension\": " << mesh.dimension << ",\n  \"vertices\": [\n";
  for (std::size_t a = 0; a < mesh.vertices.size(); ++a) {
    os << "    [";
    for (Eigen::Index c = 0; c < mesh.vertices[a].size(); ++c) os << (c ? ", " : "") << mesh.vertices[a][c];
    os << ']' << (a + 1 < mesh.vertices.size() ? "," : "") << '\n';
  }
  os << "  ],\n  \"elements\": [\n";
  for (std::size_t e = 0; e < mesh.elements.size(); ++e) {
    const auto& el = mesh.elements[e];
    if (mesh.dimension == 2) {
      os << "    {\"vertices\": ";
      ids(el.vertices);
      os << '}';
    } else {
      os << "    {\"faces\": [";
      for (std::size_t f = 0; f < el.faces.size(); ++f) {
        if (f) os << ", ";
        ids(el.faces[f]);
      }
      os << "]}";
    }
    os << (e + 1 < mesh.elements.size() ? "," : "") << '\n';
  }
  os << "  ]\n}\n";
  return os.str();
}

void save_mesh(const MeshDescription& mesh, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorKind::Io, "cannot write " + path.string());
  out << write_mesh(mesh);
  if (!out) throw Error(ErrorKind::Io, "write failed for " + path.string());
}

}  // namespace gbc
