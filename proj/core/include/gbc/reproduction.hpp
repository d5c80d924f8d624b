#pragma once

#include <gbc/basis.hpp>
#include <gbc/koszul.hpp>
#include <gbc/polytope.hpp>
#include <gbc/types.hpp>

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace gbc {

/// Target polynomial field in vector-proxy form.
struct PolyField {
  enum class Kind {
    Identity,      // the identity matrix, checked one column at a time
    Linear,        // A x
    Constant,      // c
    ScalarOne,     // 1
    ScalarLinear,  // a . x
    Position,      // x
  };

  Kind kind = Kind::Constant;
  int dimension = 2;
  Mat matrix;  // A for Linear
  Vec vector;  // c or a

  static PolyField identity(int n);
  static PolyField linear(Mat a);
  static PolyField constant(Vec c);
  static PolyField scalar_one(int n);
  static PolyField scalar_linear(Vec a);
  static PolyField position(int n);
  /// The vector proxy B x of a homogeneous linear 1-form (e.g. a Koszul image).
  static PolyField from_linear_form(const KoszulForm& form);

  bool is_scalar() const noexcept { return kind == Kind::ScalarOne || kind == Kind::ScalarLinear; }
  /// Identity expands to its n columns as constant fields; anything else to itself.
  std::vector<PolyField> columns() const;
  FieldSample operator()(const Vec& x) const;
};

std::string to_string(PolyField::Kind kind);

/// Coefficients aligned with an enumerate_basis() result.
struct CoefficientVector {
  std::vector<BasisDescriptor> basis;
  std::vector<double> coeffs;

  std::size_t size() const noexcept { return coeffs.size(); }
  double max_abs() const;
};

/// Explicit coefficients c_d with sum_d c_d * phi_d = target, built from the
/// vertex positions alone. Supported:
///
///   k = 0        1, a . x                  c_i = 1, a . v_i
///   P, k = 1     c, A x                    (v_j - v_i) . c,  A v_i . v_j
///   P, k = 1 rot c, A x (2D)               rot(v_j - v_i) . c,  -rot A v_i . v_j
///   P, k = 2     c, A x (3D)               c . (v_j - v_i) x (v_k - v_i),  A v_i . v_j x v_k
///   P, k = 2     1, a . x (2D)             (v_j - v_i) . rot(v_k - v_i),  a.v_i (v_j . rot v_k)
///   Pminus k = 1 c, A x, A antisymmetric   (v_j - v_i) . c,  A v_i . v_j
///   Pminus rot   c, alpha x (2D)           rot(v_j - v_i) . c,  -alpha (rot v_i) . v_j
///   Pminus k = 2 c, alpha x (3D)           c . (v_j - v_i) x (v_k - v_i),  alpha v_i . v_j x v_k
///
/// P-family sums run over every index tuple; tuples whose lambda index also
/// appears among the gradients are folded onto the canonical descriptors via
/// grad lambda_i = -sum_{m != i} grad lambda_m. Anything else (including all
/// top-degree Whitney forms and 3D P k = 3) throws Error(UnsupportedTarget);
/// use span_contains for those.
CoefficientVector coefficients_for(const PolyField& target, const Polytope& p, const BasisSpec& spec);

/// Rewrite Whitney-form coefficients over the P family using
/// W_{t0..tk} = c_k sum_a (-1)^a lambda_{t_a} d lambda_{t_0} .. (omit a) .. d lambda_{t_k}
/// with c_k = 6 for k = 3 and 1 otherwise, negated for planar k = 2 where the P
/// descriptors carry grad . rot grad. k = 0 is returned unchanged.
CoefficientVector expand_to_p(const CoefficientVector& whitney, int num_vertices, int dimension);

/// Sum of c_d * evaluate(d, cs).
FieldSample combine(const CoefficientVector& cv, const CoordinateSet& cs);

/// Largest component of |a - b|.
double field_distance(const FieldSample& a, const FieldSample& b);

struct ResidualReport {
  double max_residual = 0.0;
  /// Sample index of the worst residual (first one on ties), -1 if no samples.
  int worst_sample = -1;
  /// One coefficient vector per target column.
  std::vector<CoefficientVector> coefficients;
};

/// Max-norm residual of sum_d c_d phi_d - target over the samples.
ResidualReport verify_reproduction(const Polytope& p, const BasisSpec& spec, const PolyField& target,
                                   const std::vector<Vec>& samples);

struct SpanResult {
  /// ||M c - t|| / ||t||, or the absolute residual when t vanishes.
  double residual = 0.0;
  int rank = 0;
  int rows = 0;
  int cols = 0;
};

using FieldFunction = std::function<FieldSample(const Vec&)>;

/// Least-squares span oracle. Stacks the basis values over samples and
/// components and solves with column-pivoted QR (rank threshold 1e-10).
/// Throws Error(Contract) when there are fewer equations than basis functions.
SpanResult span_contains(const Polytope& p, const BasisSpec& spec, const FieldFunction& target,
                         const std::vector<Vec>& samples);
SpanResult span_contains(const Polytope& p, const BasisSpec& spec, const PolyField& target,
                         const std::vector<Vec>& samples);

/// One reproduction check: a basis family and a target with its tolerance.
struct ReproductionCase {
  std::string id;
  BasisSpec spec;
  PolyField target;
  double tolerance = 1e-8;
};

/// Matrix identities for dimension n (the identity matrix reproduced by each
/// family with explicit constant-field coefficients) and the scalar unity
/// identity in 2D.
std::vector<ReproductionCase> identity_cases(int n);

/// Linear-field cases, `draws` seeded random payloads (entries in [-1, 1])
/// per family. Ids carry the draw number, e.g. "grad-pair-linear#2".
std::vector<ReproductionCase> linear_cases(int n, std::uint64_t seed, int draws = 5);

Mat random_matrix(int n, std::uint64_t seed);
Vec random_vector(int n, std::uint64_t seed);

}  // namespace gbc
