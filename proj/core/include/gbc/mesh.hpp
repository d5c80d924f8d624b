#pragma once

#include <gbc/error.hpp>
#include <gbc/polytope.hpp>
#include <gbc/types.hpp>

#include <cstdint>
#include <span>
#include <vector>

namespace gbc {

/// Element as written in a mesh document, in global vertex ids. 2D elements
/// use `vertices` (counterclockwise); 3D elements use `faces` (each
/// counterclockwise from outside).
struct ElementSpec {
  std::vector<int> vertices;
  std::vector<std::vector<int>> faces;
};

/// Plain description of a mesh, before validation.
struct MeshDescription {
  int dimension = 2;
  std::vector<Vec> vertices;
  std::vector<ElementSpec> elements;
};

struct Element {
  Polytope shape;
  /// local vertex index -> global vertex id
  std::vector<int> global_ids;

  /// Local index of a global vertex id, or -1 if the vertex is not on this element.
  int local_of(int global_id) const;
};

struct FacetSide {
  int element = -1;
  int local_facet = -1;
  Vec outward_normal;
};

/// Codimension-1 face of the complex, identified by its global vertex-id set.
struct Facet {
  int id = -1;
  /// Sorted global vertex ids.
  std::vector<int> vertex_ids;
  /// One side for boundary facets, two for interior facets.
  std::vector<FacetSide> sides;
  /// Vertex coordinates in the first side's cycle order.
  std::vector<Vec> points;

  bool interior() const noexcept { return sides.size() == 2; }
};

struct FacetFrame {
  /// Unit normal pointing out of the first incident element.
  Vec normal;
  /// Orthonormal tangents spanning the facet plane (1 in 2D, 2 in 3D).
  std::vector<Vec> tangents;
};

class MeshComplex {
 public:
  int dimension() const noexcept { return dimension_; }
  const std::vector<Vec>& vertices() const noexcept { return vertices_; }
  const std::vector<Element>& elements() const noexcept { return elements_; }
  const Element& element(int e) const { return elements_.at(static_cast<std::size_t>(e)); }
  const std::vector<Facet>& facets() const noexcept { return facets_; }
  const Facet& facet(int f) const { return facets_.at(static_cast<std::size_t>(f)); }

  std::vector<int> interior_facets() const;

 private:
  friend MeshComplex build_complex(const MeshDescription& description);

  int dimension_ = 0;
  std::vector<Vec> vertices_;
  std::vector<Element> elements_;
  std::vector<Facet> facets_;
};

/// Validation failure of one element, carrying the local violations.
class ValidationError : public Error {
 public:
  ValidationError(int element, std::vector<Violation> violations, const std::string& what)
      : Error(ErrorKind::Validation, what), element_(element), violations_(std::move(violations)) {}

  int element() const noexcept { return element_; }
  const std::vector<Violation>& violations() const noexcept { return violations_; }

 private:
  int element_;
  std::vector<Violation> violations_;
};

/// Build local polytopes, validate them, and glue codimension-1 faces by
/// global vertex-id set. Throws ValidationError for a bad element,
/// Error(NonManifold) for a facet claimed more than twice and
/// Error(Inconsistent) when two elements sharing a facet lie on the same side
/// of it.
MeshComplex build_complex(const MeshDescription& description);

/// Wrap a single polytope as a one-element complex.
MeshDescription describe(const Polytope& p);

FacetFrame facet_frame(const Facet& f);

/// Deterministic points in the relative interior of the facet; the first one
/// is the facet vertex centroid.
std::vector<Vec> sample_facet(const Facet& f, std::size_t count, std::uint64_t seed);

}  // namespace gbc
