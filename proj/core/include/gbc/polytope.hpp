#pragma once

#include <gbc/types.hpp>

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace gbc {

/// A convex polygon (vertices counterclockwise) or polyhedron (faces
/// counterclockwise as seen from outside). Immutable after construction.
///
/// Construction does not validate; call validate_polytope() for that. Derived
/// data (facet normals, vertex stars, edges) is computed eagerly so every
/// accessor is a cheap const lookup.
class Polytope {
 public:
  static Polytope polygon(std::vector<Vec> vertices);
  static Polytope polyhedron(std::vector<Vec> vertices, std::vector<std::vector<int>> faces);

  int dimension() const noexcept { return dimension_; }
  int num_vertices() const noexcept { return static_cast<int>(vertices_.size()); }
  const Vec& vertex(int i) const { return vertices_[static_cast<std::size_t>(i)]; }
  std::span<const Vec> vertices() const noexcept { return vertices_; }

  /// Codimension-1 facets: edges (i, i+1) in 2D, stored faces in 3D.
  int num_facets() const noexcept { return static_cast<int>(facets_.size()); }
  std::span<const int> facet(int f) const { return facets_[static_cast<std::size_t>(f)]; }
  const std::vector<std::vector<int>>& facets() const noexcept { return facets_; }

  /// Unit outward normal re-derived from the stored vertex order (Newell's
  /// method in 3D). Zero if the facet is degenerate.
  const Vec& facet_normal(int f) const { return normals_[static_cast<std::size_t>(f)]; }
  /// Signed distance of x to the facet plane, positive inside.
  double facet_distance(int f, const Vec& x) const;

  /// Undirected edges (i < j). In 2D these coincide with the facets.
  const std::vector<std::pair<int, int>>& edges() const noexcept { return edges_; }
  int num_edges() const noexcept { return static_cast<int>(edges_.size()); }

  /// 3D only: facets incident to vertex i, in counterclockwise order as seen
  /// from outside. Empty if the star could not be ordered.
  std::span<const int> vertex_star(int i) const { return stars_[static_cast<std::size_t>(i)]; }

  /// Is local vertex i a vertex of facet f?
  bool facet_contains(int f, int i) const;

  double diameter() const noexcept { return diameter_; }
  /// Absolute length tolerance, kRelTol * diameter.
  double tolerance() const noexcept { return kRelTol * diameter_; }
  Vec vertex_centroid() const;

  /// Signed area (2D, shoelace) or signed volume (3D, face fan about the
  /// vertex centroid).
  double signed_measure() const;

  /// True if x lies in the closed polytope up to the geometric tolerance.
  bool contains(const Vec& x) const;
  /// Minimum signed facet distance (negative outside).
  double boundary_distance(const Vec& x) const;

 private:
  Polytope() = default;
  void finish();

  int dimension_ = 0;
  std::vector<Vec> vertices_;
  std::vector<std::vector<int>> facets_;
  std::vector<Vec> normals_;
  std::vector<std::pair<int, int>> edges_;
  std::vector<std::vector<int>> stars_;
  double diameter_ = 0.0;
};

enum class ViolationKind {
  TooFewVertices,
  Orientation,        // negative signed area / volume, or a face wound inward
  NonConvexVertex,    // reflex or flat corner, or a vertex outside a face plane
  NonPlanarFace,
  BadEdgeIncidence,   // edge not shared by exactly two oppositely oriented faces
  EulerCharacteristic,
  BadFace,            // fewer than 3 vertices, repeated or out-of-range ids
};

std::string to_string(ViolationKind kind);

struct Violation {
  ViolationKind kind;
  /// Local vertex index for vertex violations, face index for face
  /// violations, -1 when not attributable.
  int index = -1;
  std::string detail;
};

struct ValidationResult {
  std::vector<Violation> violations;
  bool ok() const noexcept { return violations.empty(); }
};

/// Check convexity, planarity, incidence and orientation at relative
/// tolerance kRelTol. Throws Error(Degenerate) if the vertex set does not span
/// the ambient dimension.
ValidationResult validate_polytope(const Polytope& p);

/// Deterministic strictly-interior points. The first point is always the
/// vertex centroid; the rest are convex combinations with exponential weights
/// normalized to sum 1.
std::vector<Vec> sample_interior(const Polytope& p, std::size_t count, std::uint64_t seed);

/// Same construction over an arbitrary point set (used for facets).
std::vector<Vec> sample_convex_combinations(std::span<const Vec> points, std::size_t count,
                                            std::uint64_t seed);

}  // namespace gbc
