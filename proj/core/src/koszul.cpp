#include <gbc/error.hpp>
#include <gbc/koszul.hpp>

#include <algorithm>
#include <cmath>

namespace gbc {

KoszulForm KoszulForm::constant(int dimension, int degree, std::vector<std::pair<double, std::vector<int>>> terms) {
  KoszulForm f;
  f.dimension = dimension;
  f.degree = degree;
  for (auto& [coeff, basis] : terms) {
    if (static_cast<int>(basis.size()) != degree || !std::is_sorted(basis.begin(), basis.end()) ||
        std::adjacent_find(basis.begin(), basis.end()) != basis.end()) {
      throw Error(ErrorKind::Contract, "form basis tuples must be strictly increasing and of the form degree");
    }
    for (int s : basis) {
      if (s < 0 || s >= dimension) throw Error(ErrorKind::Contract, "dx index out of range");
    }
    if (!std::isfinite(coeff)) throw Error(ErrorKind::Contract, "form coefficient is not finite");
    f.terms.push_back({coeff, std::move(basis), std::nullopt});
  }
  return f;
}

bool KoszulForm::is_zero() const {
  return std::all_of(terms.begin(), terms.end(), [](const Term& t) { return t.coeff == 0.0; });
}

KoszulForm koszul_apply(const KoszulForm& form) {
  KoszulForm out;
  out.dimension = form.dimension;
  out.degree = std::max(0, form.degree - 1);
  if (form.degree == 0) return out;

  for (const auto& term : form.terms) {
    if (term.coordinate) throw Error(ErrorKind::Contract, "koszul_apply expects constant coefficients");
    for (std::size_t i = 0; i < term.basis.size(); ++i) {
      KoszulForm::Term t;
      t.coeff = (i % 2 == 0 ? 1.0 : -1.0) * term.coeff;
      t.coordinate = term.basis[i];
      for (std::size_t j = 0; j < term.basis.size(); ++j)
        if (j != i) t.basis.push_back(term.basis[j]);
      if (t.coeff != 0.0) out.terms.push_back(std::move(t));
    }
  }
  return out;
}

Mat phi_sign_matrix(const KoszulForm& kappa_omega) {
  const int n = kappa_omega.dimension;
  if (kappa_omega.degree != 1) throw Error(ErrorKind::Contract, "phi expects a 1-form");

  Mat b = Mat::Zero(n, n);
  for (const auto& t : kappa_omega.terms) {
    if (!t.coordinate || t.basis.size() != 1) throw Error(ErrorKind::Contract, "phi expects a homogeneous linear 1-form");
    b(t.basis[0], *t.coordinate) += t.coeff;
  }

  Mat phi = Mat::Zero(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const double sum = b(i, j) + b(j, i);
      if (std::abs(sum) > 1e-12 * (1.0 + b.cwiseAbs().maxCoeff())) {
        throw Error(ErrorKind::Contract, "linear 1-form is not the Koszul image of a 2-form");
      }
      phi(i, j) = static_cast<double>((b(i, j) > 0.0) - (b(i, j) < 0.0));
    }
  }
  return phi;
}

}  // namespace gbc
