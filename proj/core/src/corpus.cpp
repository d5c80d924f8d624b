#include <gbc/corpus.hpp>
#include <gbc/error.hpp>
#include <gbc/mesh_io.hpp>

#include <cmath>
#include <numbers>

namespace gbc {
namespace {

Vec P2(double x, double y) {
  Vec v(2);
  v << x, y;
  return v;
}

Vec P3(double x, double y, double z) {
  Vec v(3);
  v << x, y, z;
  return v;
}

MeshDescription single_2d(std::vector<Vec> vertices) {
  MeshDescription m;
  m.dimension = 2;
  ElementSpec e;
  for (int i = 0; i < static_cast<int>(vertices.size()); ++i) e.vertices.push_back(i);
  m.vertices = std::move(vertices);
  m.elements.push_back(std::move(e));
  return m;
}

MeshDescription single_3d(std::vector<Vec> vertices, std::vector<std::vector<int>> faces) {
  MeshDescription m;
  m.dimension = 3;
  m.vertices = std::move(vertices);
  m.elements.push_back({{}, std::move(faces)});
  return m;
}

std::vector<Vec> cube_vertices() {
  return {P3(0, 0, 0), P3(1, 0, 0), P3(1, 1, 0), P3(0, 1, 0), P3(0, 0, 1), P3(1, 0, 1), P3(1, 1, 1), P3(0, 1, 1)};
}

std::vector<std::vector<int>> cube_faces() {
  return {{0, 3, 2, 1}, {4, 5, 6, 7}, {0, 1, 5, 4}, {2, 3, 7, 6}, {0, 4, 7, 3}, {1, 2, 6, 5}};
}

std::vector<Vec> pentagon_vertices() {
  std::vector<Vec> v;
  for (int k = 0; k < 5; ++k) {
    const double t = std::numbers::pi / 2 + 2 * std::numbers::pi * k / 5;
    v.push_back(P2(std::cos(t), std::sin(t)));
  }
  return v;
}

std::vector<Vec> skewed_vertices() {
  Mat m(3, 3);
  m << 1.0, 0.3, 0.2,
       0.1, 1.2, 0.25,
       0.0, 0.15, 0.9;
  const Vec shift = P3(0.2, -0.1, 0.05);
  std::vector<Vec> out;
  for (const Vec& v : cube_vertices()) out.push_back(Vec(m * v + shift));
  return out;
}

MeshDescription two_squares() {
  MeshDescription m;
  m.dimension = 2;
  m.vertices = {P2(0, 0), P2(1, 0), P2(2, 0), P2(0, 1), P2(1, 1), P2(2, 1)};
  m.elements = {{{0, 1, 4, 3}, {}}, {{1, 2, 5, 4}, {}}};
  return m;
}

MeshDescription square_pentagon() {
  MeshDescription m;
  m.dimension = 2;
  m.vertices = {P2(0, 0), P2(1, 0), P2(1, 1), P2(0, 1), P2(2, -0.2), P2(2.4, 0.6), P2(1.8, 1.3)};
  m.elements = {{{0, 1, 2, 3}, {}}, {{1, 4, 5, 6, 2}, {}}};
  return m;
}

MeshDescription two_cubes() {
  MeshDescription m;
  m.dimension = 3;
  // left cube: ids 0..7 as cube_vertices(); right cube shares 1, 2, 6, 5
  m.vertices = cube_vertices();
  for (const Vec& v : {P3(2, 0, 0), P3(2, 1, 0), P3(2, 1, 1), P3(2, 0, 1)}) m.vertices.push_back(v);
  m.elements.push_back({{}, cube_faces()});
  // right cube corners in cube_vertices() order
  const int r[8] = {1, 8, 9, 2, 5, 11, 10, 6};
  m.elements.push_back({{},
                        {{r[0], r[3], r[2], r[1]},
                         {r[4], r[5], r[6], r[7]},
                         {r[0], r[1], r[5], r[4]},
                         {r[2], r[3], r[7], r[6]},
                         {r[0], r[4], r[7], r[3]},
                         {r[1], r[2], r[6], r[5]}}});
  return m;
}

MeshDescription cube_prism() {
  MeshDescription m;
  m.dimension = 3;
  m.vertices = cube_vertices();
  m.vertices.push_back(P3(1.8, 0, 0.5));  // 8
  m.vertices.push_back(P3(1.8, 1, 0.5));  // 9
  m.elements.push_back({{}, cube_faces()});
  m.elements.push_back({{}, {{1, 5, 6, 2}, {1, 8, 5}, {2, 6, 9}, {1, 2, 9, 8}, {5, 8, 9, 6}}});
  return m;
}

std::vector<Vec> tet_vertices() { return {P3(0, 0, 0), P3(1, 0, 0), P3(0, 1, 0), P3(0, 0, 1)}; }
std::vector<std::vector<int>> tet_faces() { return {{0, 2, 1}, {0, 1, 3}, {0, 3, 2}, {1, 2, 3}}; }

std::vector<Vec> prism_vertices() {
  return {P3(0, 0, 0), P3(1, 0, 0), P3(0, 1, 0), P3(0, 0, 1), P3(1, 0, 1), P3(0, 1, 1)};
}
std::vector<std::vector<int>> prism_faces() { return {{0, 2, 1}, {3, 4, 5}, {0, 1, 4, 3}, {1, 2, 5, 4}, {0, 3, 5, 2}}; }

std::vector<Vec> pyramid_vertices() { return {P3(0, 0, 0), P3(1, 0, 0), P3(1, 1, 0), P3(0, 1, 0), P3(0.5, 0.5, 1)}; }
std::vector<std::vector<int>> pyramid_faces() { return {{0, 3, 2, 1}, {0, 1, 4}, {1, 2, 4}, {2, 3, 4}, {3, 0, 4}}; }

std::vector<CorpusEntry> build() {
  return {
      {"triangle", single_2d({P2(0, 0), P2(1, 0), P2(0, 1)})},
      {"square", single_2d({P2(0, 0), P2(1, 0), P2(1, 1), P2(0, 1)})},
      {"pentagon", single_2d(pentagon_vertices())},
      {"hexagon", single_2d({P2(0, 0), P2(2, -0.3), P2(3.1, 0.8), P2(2.7, 2.2), P2(1, 2.6), P2(-0.4, 1.3)})},
      {"two-squares", two_squares()},
      {"square-pentagon", square_pentagon()},
      {"tetrahedron", single_3d(tet_vertices(), tet_faces())},
      {"cube", single_3d(cube_vertices(), cube_faces())},
      {"skewed-hexahedron", single_3d(skewed_vertices(), cube_faces())},
      {"prism", single_3d(prism_vertices(), prism_faces())},
      {"pyramid", single_3d(pyramid_vertices(), pyramid_faces())},
      {"two-cubes", two_cubes()},
      {"cube-prism", cube_prism()},
  };
}

}  // namespace

std::vector<CorpusEntry> corpus() { return build(); }

const CorpusEntry& corpus_entry(const std::string& name) {
  static const std::vector<CorpusEntry> all = build();
  for (const auto& e : all)
    if (e.name == name) return e;
  throw Error(ErrorKind::Contract, "no corpus mesh named " + name);
}

Polytope reference_triangle() { return Polytope::polygon({P2(0, 0), P2(1, 0), P2(0, 1)}); }
Polytope unit_square() { return Polytope::polygon({P2(0, 0), P2(1, 0), P2(1, 1), P2(0, 1)}); }
Polytope regular_pentagon() { return Polytope::polygon(pentagon_vertices()); }
Polytope reference_tetrahedron() { return Polytope::polyhedron(tet_vertices(), tet_faces()); }
Polytope unit_cube() { return Polytope::polyhedron(cube_vertices(), cube_faces()); }
Polytope skewed_hexahedron() { return Polytope::polyhedron(skewed_vertices(), cube_faces()); }
Polytope triangular_prism() { return Polytope::polyhedron(prism_vertices(), prism_faces()); }
Polytope square_pyramid() { return Polytope::polyhedron(pyramid_vertices(), pyramid_faces()); }

std::vector<std::filesystem::path> generate_corpus(const std::filesystem::path& dir) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw Error(ErrorKind::Io, "cannot create " + dir.string() + ": " + ec.message());
  std::vector<std::filesystem::path> out;
  for (const auto& e : corpus()) {
    const auto path = dir / (e.name + ".json");
    save_mesh(e.mesh, path);
    out.push_back(path);
  }
  return out;
}

}  // namespace gbc
