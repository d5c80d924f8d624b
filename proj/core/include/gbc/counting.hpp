#pragma once

#include <gbc/polytope.hpp>
#include <gbc/types.hpp>

#include <optional>
#include <string>
#include <vector>

namespace gbc {

/// Basis sizes for one (n, k, family): functions constructed, functions
/// whose indices all lie on a single facet (the ones that matter for
/// inter-element continuity), and the dimension of the polynomial space.
struct CountRecord {
  int n = 2;
  int k = 0;
  Family family = Family::P;
  long constructed = 0;
  long boundary = 0;
  long polynomial = 0;
  /// Set when the value usually quoted for this element disagrees with the
  /// count formula (see hexahedron_text_boundary).
  std::optional<std::string> note;
};

long binomial(long n, long r);

/// Polygon with v vertices and e edges (v == e >= 3), k in {0, 1, 2}.
CountRecord count_2d(int v, int e, int k, Family family);

/// Polyhedron with v vertices, e edges and the given per-face vertex counts.
/// Throws Error(Topology) if v - e + f != 2 or sum(face sizes) != 2e.
CountRecord count_3d(int v, int e, const std::vector<int>& face_vertex_counts, int k, Family family);

/// Counts from a polytope's combinatorics, with the hexahedron note attached.
CountRecord count(const Polytope& p, int k, Family family);

/// Every (k, family) pair for the polytope's dimension, k ascending, P first.
std::vector<CountRecord> count_all(const Polytope& p);

/// The boundary count quoted in prose for the hexahedron trimmed 1-form
/// family, which differs from the formula value of 24.
inline constexpr long hexahedron_text_boundary = 20;

/// True for 8 vertices, 12 edges, 6 quadrilateral faces.
bool is_combinatorial_hexahedron(const Polytope& p);

}  // namespace gbc
