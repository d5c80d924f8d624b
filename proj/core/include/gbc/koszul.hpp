#pragma once

#include <gbc/types.hpp>

#include <optional>
#include <vector>

namespace gbc {

/// A polynomial differential form with constant or linear coefficients,
/// written as a sum of terms  coeff * [x_coordinate] * dx_{basis[0]} ^ ... .
/// Coordinate and dx indices are 0-based.
struct KoszulForm {
  struct Term {
    double coeff = 0.0;
    /// Strictly increasing dx indices; empty for a 0-form.
    std::vector<int> basis;
    /// Multiplying coordinate x_c for linear terms; empty for constants.
    std::optional<int> coordinate;
  };

  int dimension = 3;
  int degree = 0;
  std::vector<Term> terms;

  /// Constant-coefficient form from (coefficient, dx index tuple) pairs.
  static KoszulForm constant(int dimension, int degree, std::vector<std::pair<double, std::vector<int>>> terms);

  bool is_zero() const;
};

/// Koszul operator on a constant-coefficient form:
///   kappa(a dx_s1 ^ ... ^ dx_sk) = sum_i (-1)^(i+1) a x_si dx_s1 ^ ..(omit i).. ^ dx_sk
/// A 0-form maps to zero. Throws Error(Contract) on non-constant input.
KoszulForm koszul_apply(const KoszulForm& form);

/// Sign matrix of a linear 1-form  sum_i (sum_j b_ij x_j) dx_i : entry (i, j)
/// is sign(b_ij). Intended for kappa(omega) with omega a constant 2-form, for
/// which the result is antisymmetric; anything else throws Error(Contract).
Mat phi_sign_matrix(const KoszulForm& kappa_omega);

}  // namespace gbc
