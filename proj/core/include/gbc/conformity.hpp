#pragma once

#include <gbc/basis.hpp>
#include <gbc/mesh.hpp>
#include <gbc/types.hpp>

#include <cstdint>
#include <string>
#include <vector>

namespace gbc {

/// Piecewise coordinate of one global vertex: the element's Wachspress
/// coordinate if the vertex belongs to the element, zero otherwise.
struct HatValue {
  double value = 0.0;
  Vec gradient;
};

/// Throws Error(Contract) for out-of-range ids and Error(Domain) if x is
/// outside the element.
HatValue hat_evaluate(const MeshComplex& mesh, int element, int global_vertex, const Vec& x);

/// Coordinates of vertices off a facet, sampled on the facet.
struct BoundaryReport {
  int facet = -1;  // local facet index
  double max_value = 0.0;        // max |lambda_k|
  double max_tangential = 0.0;   // max norm of the tangential part of grad lambda_k
  double min_inward = 0.0;       // min of grad lambda_k . (inward unit normal)
  int checked = 0;               // number of (vertex, sample) pairs

  bool pass(double value_tol = 1e-10, double tangential_tol = 1e-8) const {
    return max_value <= value_tol && max_tangential <= tangential_tol && min_inward > 0.0;
  }
};

/// Samples must lie in the relative interior of the facet.
BoundaryReport boundary_vanishing_check(const Polytope& p, int local_facet, const std::vector<Vec>& samples);

enum class TraceKind { Value, Tangential, Normal };

std::string to_string(TraceKind kind);

/// Which trace a family must keep continuous: value for k = 0, tangential for
/// 1-forms, normal for 3D 2-forms and 2D rot 1-forms. Throws Error(Contract)
/// for top-degree forms, which carry no continuity requirement.
TraceKind trace_kind_for(int dimension, const BasisSpec& spec);

struct DescriptorJump {
  /// Descriptor in global vertex ids, e.g. "W:1,4" or "P:4,1,5".
  std::string descriptor;
  /// True if every index is a vertex of the facet (both sides evaluated);
  /// otherwise the single side's trace itself is recorded as the jump.
  bool shared = false;
  int element = -1;  // the owning element for one-sided entries
  double jump = 0.0;
};

struct JumpReport {
  int facet = -1;
  TraceKind trace = TraceKind::Tangential;
  BasisSpec spec;
  double max_jump = 0.0;
  /// Descriptor attaining max_jump (first one on ties).
  std::string worst;
  std::vector<DescriptorJump> entries;

  bool pass(double tol) const { return max_jump <= tol; }
};

/// Per-descriptor tangential trace jumps across an interior facet for a
/// 1-form family. Descriptors are matched across the two elements by global
/// vertex tuple (sorted for Whitney forms, gradient indices sorted for P).
JumpReport tangential_jump(const MeshComplex& mesh, int facet, const BasisSpec& spec, const std::vector<Vec>& samples);

/// Normal trace jumps (measured in the first element's outward frame) for
/// 3D 2-form families and 2D rot 1-form families.
JumpReport normal_jump(const MeshComplex& mesh, int facet, const BasisSpec& spec, const std::vector<Vec>& samples);

/// Trace jump of an assembled random field. Coefficients are drawn per
/// global vertex tuple from the seed, so both elements use the same value
/// for the same function. With `mismatch` the second element draws its
/// coefficients from a different stream (a negative control).
JumpReport random_span_jump(const MeshComplex& mesh, int facet, const BasisSpec& spec, std::uint64_t seed,
                            const std::vector<Vec>& samples, bool mismatch = false);

/// Single-valuedness of every hat function touching the facet.
JumpReport hat_value_jump(const MeshComplex& mesh, int facet, const std::vector<Vec>& samples);

/// Trace components of a field value: [value], the tangent-frame components,
/// or [normal component].
Vec trace_of(const FieldSample& u, const FacetFrame& frame, TraceKind kind);

}  // namespace gbc
