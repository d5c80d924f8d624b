#pragma once

#include <gbc/polytope.hpp>
#include <gbc/types.hpp>

#include <vector>

namespace gbc {

/// Values and gradients of every coordinate of one polytope at one point.
struct CoordinateSet {
  Vec point;
  std::vector<double> values;
  /// Units of 1/length. NaN when evaluated exactly at a vertex where the
  /// coordinates are not differentiable (e.g. the apex of a pyramid).
  std::vector<Vec> gradients;

  int dimension() const noexcept { return static_cast<int>(point.size()); }
  int size() const noexcept { return static_cast<int>(values.size()); }
};

/// Wachspress coordinates on a convex polygon, polynomial-numerator form:
///
///   w_i(x) = C_i * prod_{j not in {i-1, i}} A_j(x),   lambda_i = w_i / sum_j w_j
///
/// with A_j(x) the signed area of (x, v_j, v_{j+1}) and C_i the signed area
/// of (v_{i-1}, v_i, v_{i+1}). The weights stay finite on the boundary, so the
/// function can be evaluated directly on edges. Throws Error(Domain) if x is
/// outside the closed polygon.
CoordinateSet wachspress_2d(const Polytope& p, const Vec& x);

/// Wachspress coordinates on a convex polyhedron. With h_f(x) the distance to
/// face plane f and f_1..f_d the faces around vertex i (counterclockwise from
/// outside), the weight is the fan sum
///
///   w_i(x) = sum_{t=2}^{d-1} det(n_{f_1}, n_{f_t}, n_{f_{t+1}}) * prod_{f not in triple} h_f(x)
///
/// which reduces to the classical single-determinant weight at simple
/// vertices. Throws Error(Domain) outside the polyhedron and Error(Topology)
/// if a vertex star could not be ordered.
CoordinateSet wachspress_3d(const Polytope& p, const Vec& x);

/// Dispatch on the polytope dimension.
CoordinateSet wachspress(const Polytope& p, const Vec& x);

/// Independent gradient estimate: central differences of the coordinate
/// values with one Richardson step, error O(h^4). Throws Error(Stencil) if
/// the stencil (reach h) leaves the polytope.
std::vector<Vec> gradient_fd_oracle(const Polytope& p, const Vec& x, double h);

struct IdentityResiduals {
  double partition_of_unity = 0.0;  // |sum lambda_i - 1|
  double linear_precision = 0.0;    // ||sum v_i lambda_i - x||
  double gradient_sum = 0.0;        // ||sum grad lambda_i||
  double gradient_precision = 0.0;  // max-entry ||sum v_i grad lambda_i^T - I||
};

IdentityResiduals coordinate_identity_residuals(const CoordinateSet& cs, const Polytope& p);

}  // namespace gbc
