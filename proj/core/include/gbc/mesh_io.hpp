#pragma once

#include <gbc/mesh.hpp>

#include <filesystem>
#include <string>
#include <string_view>

namespace gbc {

/// Parse a mesh document:
///
///   {"dimension": 2, "vertices": [[x, y], ...], "elements": [{"vertices": [ids]}, ...]}
///   {"dimension": 3, "vertices": [[x, y, z], ...], "elements": [{"faces": [[ids], ...]}, ...]}
///
/// Ids are 0-based. Throws Error(Parse) with "line L column C" for syntax
/// errors and a JSON pointer (e.g. "/elements/1/vertices/2") for field errors.
/// Does not validate geometry; see build_complex.
MeshDescription parse_mesh(std::string_view text);

/// Reads and parses a file. Throws Error(Io) if it cannot be read.
MeshDescription load_mesh(const std::filesystem::path& path);

/// Serialize with fixed formatting (17 significant digits), so output is
/// byte-stable for identical input.
std::string write_mesh(const MeshDescription& mesh);

void save_mesh(const MeshDescription& mesh, const std::filesystem::path& path);

}  // namespace gbc
