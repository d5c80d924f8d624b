#include <gbc/basis.hpp>
#include <gbc/error.hpp>

#include <Eigen/LU>

#include <algorithm>
#include <set>
#include <sstream>

namespace gbc {

std::string to_string(const BasisSpec& spec) {
  std::ostringstream os;
  os << to_string(spec.family) << " k=" << spec.k;
  if (spec.rot) os << " rot";
  return os.str();
}

std::string to_string(const BasisDescriptor& d) {
  std::ostringstream os;
  os << (d.family == Family::P ? "P" : "W") << ':';
  for (std::size_t a = 0; a < d.indices.size(); ++a) os << (a ? "," : "") << d.indices[a];
  if (d.rot) os << ":rot";
  return os.str();
}

namespace {

void check_spec(int dimension, const BasisSpec& spec) {
  if (spec.k < 0 || spec.k > dimension) {
    throw Error(ErrorKind::Domain, "form degree " + std::to_string(spec.k) + " exceeds dimension " + std::to_string(dimension));
  }
  if (spec.rot && !(dimension == 2 && spec.k == 1)) {
    throw Error(ErrorKind::Contract, "rot variants exist only for 2D 1-forms");
  }
}

/// Visit every strictly increasing tuple of `size` values drawn from `pool`.
template <typename Visit>
void combinations(const std::vector<int>& pool, int size, Visit&& visit) {
  std::vector<int> pick(static_cast<std::size_t>(size));
  auto rec = [&](auto&& self, std::size_t start, int depth) -> void {
    if (depth == size) {
      visit(pick);
      return;
    }
    for (std::size_t a = start; a < pool.size(); ++a) {
      pick[static_cast<std::size_t>(depth)] = pool[a];
      self(self, a + 1, depth + 1);
    }
  };
  rec(rec, 0, 0);
}

bool distinct(const std::vector<int>& idx) {
  return std::set<int>(idx.begin(), idx.end()).size() == idx.size();
}

}  // namespace

std::vector<BasisSpec> all_specs(int n) {
  std::vector<BasisSpec> out{{Family::P, 0, false}};
  for (int k = 1; k <= n; ++k) {
    for (Family f : {Family::P, Family::Pminus}) {
      out.push_back({f, k, false});
      if (n == 2 && k == 1) out.push_back({f, k, true});
    }
  }
  return out;
}

std::vector<BasisDescriptor> enumerate_basis(int num_vertices, int dimension, const BasisSpec& spec) {
  check_spec(dimension, spec);
  std::vector<BasisDescriptor> out;
  std::vector<int> all(static_cast<std::size_t>(num_vertices));
  for (int i = 0; i < num_vertices; ++i) all[static_cast<std::size_t>(i)] = i;

  if (spec.k == 0) {
    for (int i : all) out.push_back({spec.family, 0, {i}, false});
    return out;
  }
  if (spec.family == Family::Pminus) {
    combinations(all, spec.k + 1, [&](const std::vector<int>& t) { out.push_back({spec.family, spec.k, t, spec.rot}); });
    return out;
  }
  // P: the lambda index is free, gradient indices increasing and distinct from it.
  for (int i : all) {
    std::vector<int> rest;
    for (int j : all)
      if (j != i) rest.push_back(j);
    combinations(rest, spec.k, [&](const std::vector<int>& t) {
      std::vector<int> idx{i};
      idx.insert(idx.end(), t.begin(), t.end());
      out.push_back({spec.family, spec.k, std::move(idx), spec.rot});
    });
  }
  return out;
}

std::vector<BasisDescriptor> enumerate_basis(const Polytope& p, const BasisSpec& spec) {
  return enumerate_basis(p.num_vertices(), p.dimension(), spec);
}

FieldSample evaluate(const BasisDescriptor& d, const CoordinateSet& cs) {
  const int n = cs.dimension();
  check_spec(n, d.spec());
  const std::size_t want = d.k == 0 ? 1 : static_cast<std::size_t>(d.k + 1);
  if (d.indices.size() != want) throw Error(ErrorKind::Contract, "descriptor " + to_string(d) + " has the wrong arity");
  for (int i : d.indices) {
    if (i < 0 || i >= cs.size()) throw Error(ErrorKind::Contract, "descriptor " + to_string(d) + " indexes a missing vertex");
  }

  auto lam = [&](std::size_t a) { return cs.values[static_cast<std::size_t>(d.indices[a])]; };
  auto grad = [&](std::size_t a) -> const Vec& { return cs.gradients[static_cast<std::size_t>(d.indices[a])]; };
  const bool whitney = d.family == Family::Pminus;

  if (d.k == 0) return FieldSample::scalar(lam(0));

  if (whitney && !distinct(d.indices)) {
    return scalar_proxy(n, d.k) ? FieldSample::scalar(0.0) : FieldSample::vector(Vec::Zero(n));
  }

  if (d.k == 1) {
    Vec v = lam(0) * grad(1);
    if (whitney) v -= lam(1) * grad(0);
    return FieldSample::vector(d.rot ? rot(v) : v);
  }

  if (d.k == 2 && n == 3) {
    Vec v = lam(0) * cross(grad(1), grad(2));
    if (whitney) v += lam(1) * cross(grad(2), grad(0)) + lam(2) * cross(grad(0), grad(1));
    return FieldSample::vector(v);
  }

  if (d.k == 2) {
    // P uses grad_j . rot grad_k = -(grad_j x grad_k); W uses the plain 2D cross
    if (!whitney) return FieldSample::scalar(lam(0) * grad(1).dot(rot(grad(2))));
    return FieldSample::scalar(lam(0) * cross2(grad(1), grad(2)) + lam(1) * cross2(grad(2), grad(0)) +
                               lam(2) * cross2(grad(0), grad(1)));
  }

  // k == 3, n == 3
  if (!whitney) return FieldSample::scalar(lam(0) * det3(grad(1), grad(2), grad(3)));
  const double s = lam(0) * det3(grad(1), grad(2), grad(3)) - lam(1) * det3(grad(0), grad(2), grad(3)) +
                   lam(2) * det3(grad(0), grad(1), grad(3)) - lam(3) * det3(grad(0), grad(1), grad(2));
  return FieldSample::scalar(6.0 * s);
}

FieldSample whitney_simplex_reference(const BasisDescriptor& d, const Polytope& simplex, const Vec& x) {
  const int n = simplex.dimension();
  if (simplex.num_vertices() != n + 1) throw Error(ErrorKind::Contract, "simplex reference needs a triangle or tetrahedron");
  check_spec(n, d.spec());

  const Vec& v0 = simplex.vertex(0);
  Mat edges(n, n);
  for (int a = 0; a < n; ++a) edges.col(a) = simplex.vertex(a + 1) - v0;
  const Mat inv = edges.inverse();
  const Vec mu = inv * (x - v0);

  std::vector<double> lambda(static_cast<std::size_t>(n + 1));
  std::vector<Vec> grad(static_cast<std::size_t>(n + 1));
  lambda[0] = 1.0 - mu.sum();
  grad[0] = -inv.colwise().sum().transpose();
  for (int a = 0; a < n; ++a) {
    lambda[static_cast<std::size_t>(a + 1)] = mu[a];
    grad[static_cast<std::size_t>(a + 1)] = inv.row(a).transpose();
  }

  const auto& idx = d.indices;
  auto L = [&](std::size_t a) { return lambda[static_cast<std::size_t>(idx[a])]; };
  auto G = [&](std::size_t a) -> const Vec& { return grad[static_cast<std::size_t>(idx[a])]; };
  auto V = [&](std::size_t a) -> const Vec& { return simplex.vertex(idx[a]); };

  if (d.k == 0) return FieldSample::scalar(L(0));

  if (d.family == Family::P) {
    if (d.k == 1) {
      const Vec v = L(0) * G(1);
      return FieldSample::vector(d.rot ? rot(v) : v);
    }
    if (d.k == 2 && n == 3) return FieldSample::vector(L(0) * cross(G(1), G(2)));
    // a . rot(b) = -(a_x b_y - a_y b_x)
    if (d.k == 2) return FieldSample::scalar(-L(0) * (G(1)[0] * G(2)[1] - G(1)[1] * G(2)[0]));
    Eigen::Matrix3d rows;
    rows << G(1).transpose(), G(2).transpose(), G(3).transpose();
    return FieldSample::scalar(L(0) * rows.determinant());
  }

  // Whitney forms: closed forms on the simplex.
  const bool top = d.k == n;
  if (!distinct(idx)) return top ? FieldSample::scalar(0.0) : FieldSample::vector(Vec::Zero(n));
  std::vector<int> rest;
  for (int a = 0; a <= n; ++a)
    if (std::find(idx.begin(), idx.end(), a) == idx.end()) rest.push_back(a);

  if (n == 2) {
    if (d.k == 1) {
      // W_ij = rot(x - v_k) / (2 A(v_i, v_j, v_k))
      const Vec& vk = simplex.vertex(rest[0]);
      const Vec w = rot(x - vk) / cross2(V(1) - V(0), vk - V(0));
      return FieldSample::vector(d.rot ? rot(w) : w);
    }
    // W_ijk = 1 / (2 A(v_i, v_j, v_k))
    return FieldSample::scalar(1.0 / cross2(V(1) - V(0), V(2) - V(0)));
  }

  auto volume6 = [](const Vec& a, const Vec& b, const Vec& c, const Vec& e) { return det3(b - a, c - a, e - a); };
  if (d.k == 1) {
    // W_ij = (v_l - v_k) x (x - v_k) / (6 V(v_i, v_j, v_k, v_l))
    const Vec& vk = simplex.vertex(rest[0]);
    const Vec& vl = simplex.vertex(rest[1]);
    return FieldSample::vector(cross(vl - vk, x - vk) / volume6(V(0), V(1), vk, vl));
  }
  if (d.k == 2) {
    // W_ijk = -(x - v_l) / (6 V(v_i, v_j, v_k, v_l))
    const Vec& vl = simplex.vertex(rest[0]);
    return FieldSample::vector(-(x - vl) / volume6(V(0), V(1), V(2), vl));
  }
  // W_ijkl = 1 / V(v_i, v_j, v_k, v_l)
  return FieldSample::scalar(6.0 / volume6(V(0), V(1), V(2), V(3)));
}

}  // namespace gbc
