#pragma once

#include <gbc/mesh.hpp>

#include <filesystem>
#include <string>
#include <vector>

namespace gbc {

struct CorpusEntry {
  std::string name;  // file stem, e.g. "two-squares"
  MeshDescription mesh;
};

/// The bundled meshes: triangle, square, pentagon, hexagon, two-squares,
/// square-pentagon, tetrahedron, cube, skewed-hexahedron, prism, pyramid,
/// two-cubes, cube-prism.
std::vector<CorpusEntry> corpus();

/// Look up a corpus entry by name. Throws Error(Contract) if unknown.
const CorpusEntry& corpus_entry(const std::string& name);

/// Single-element corpus shapes as polytopes.
Polytope reference_triangle();
Polytope unit_square();
Polytope regular_pentagon();
Polytope reference_tetrahedron();
Polytope unit_cube();
Polytope skewed_hexahedron();
Polytope triangular_prism();
Polytope square_pyramid();

/// Write every corpus mesh as <dir>/<name>.json; returns the paths written.
std::vector<std::filesystem::path> generate_corpus(const std::filesystem::path& dir);

}  // namespace gbc
