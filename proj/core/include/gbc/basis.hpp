#pragma once

#include <gbc/coordinates.hpp>
#include <gbc/polytope.hpp>
#include <gbc/types.hpp>

#include <compare>
#include <string>
#include <vector>

namespace gbc {

/// Which family of basis functions: form degree, full/trimmed, and (2D,
/// k = 1 only) whether the rotated variant is meant.
struct BasisSpec {
  Family family = Family::P;
  int k = 0;
  bool rot = false;

  auto operator<=>(const BasisSpec&) const = default;
};

std::string to_string(const BasisSpec& spec);

/// One basis function. Index tuples are local vertex indices:
///
///   k = 0            (i)          lambda_i
///   k = 1, P         (i, j)       lambda_i grad lambda_j          [rot ...]
///   k = 1, Pminus    (i, j)       W_ij                           [rot ...]
///   k = 2, P         (i, j, k)    lambda_i grad_j x grad_k       (2D: grad_j . rot grad_k)
///   k = 2, Pminus    (i, j, k)    W_ijk                           (2D: a x b = a_x b_y - a_y b_x)
///   k = 3, P         (i,j,k,l)    lambda_i grad_j . (grad_k x grad_l)
///   k = 3, Pminus    (i,j,k,l)    W_ijkl = 3! * alternating sum
struct BasisDescriptor {
  Family family = Family::P;
  int k = 0;
  std::vector<int> indices;
  bool rot = false;

  BasisSpec spec() const { return {family, k, rot}; }
  auto operator<=>(const BasisDescriptor&) const = default;
};

/// Compact text form, e.g. "W:0,1", "P:0,1:rot", "P:2,0,1".
std::string to_string(const BasisDescriptor& d);

enum class FieldKind { Scalar, Vector };

/// Value of a basis function or target at a point, in vector-proxy form.
/// Scalars are stored as a length-1 vector.
struct FieldSample {
  FieldKind kind = FieldKind::Scalar;
  Vec value;

  static FieldSample scalar(double v) { return {FieldKind::Scalar, Vec::Constant(1, v)}; }
  static FieldSample vector(Vec v) { return {FieldKind::Vector, std::move(v)}; }
};

/// Is a k-form in n dimensions represented by a scalar proxy?
constexpr bool scalar_proxy(int n, int k) { return k == 0 || k == n; }

/// Every family for dimension n: k ascending, P before Pminus, plain before
/// rot. k = 0 appears once (as P).
std::vector<BasisSpec> all_specs(int n);

/// Canonical enumeration. Sizes: v for k = 0; P: v(v-1), 3 C(v,3), 4 C(v,4);
/// Pminus: C(v,2), C(v,3), C(v,4). Throws Error(Domain) for k > n and
/// Error(Contract) for a rot flag outside 2D k = 1.
std::vector<BasisDescriptor> enumerate_basis(const Polytope& p, const BasisSpec& spec);
std::vector<BasisDescriptor> enumerate_basis(int num_vertices, int dimension, const BasisSpec& spec);

/// Evaluate a descriptor from precomputed coordinates. Non-distinct index
/// tuples are accepted and give the exact degenerate value (zero for W).
FieldSample evaluate(const BasisDescriptor& d, const CoordinateSet& cs);

/// Classical simplicial basis functions, computed from affine barycentric
/// coordinates obtained by a direct linear solve. Whitney forms use their
/// closed forms (position vector relative to the opposite vertex scaled by the
/// simplex measure). Independent of the Wachspress code path.
FieldSample whitney_simplex_reference(const BasisDescriptor& d, const Polytope& simplex, const Vec& x);

}  // namespace gbc
