#include <gbc/error.hpp>
#include <gbc/random.hpp>
#include <gbc/reproduction.hpp>

#include <Eigen/QR>

#include <algorithm>
#include <cmath>
#include <map>
#include <optional>

namespace gbc {

PolyField PolyField::identity(int n) {
  PolyField f;
  f.kind = Kind::Identity;
  f.dimension = n;
  return f;
}

PolyField PolyField::linear(Mat a) {
  if (a.rows() != a.cols()) throw Error(ErrorKind::Contract, "linear field needs a square matrix");
  PolyField f;
  f.kind = Kind::Linear;
  f.dimension = static_cast<int>(a.rows());
  f.matrix = std::move(a);
  return f;
}

PolyField PolyField::constant(Vec c) {
  PolyField f;
  f.kind = Kind::Constant;
  f.dimension = static_cast<int>(c.size());
  f.vector = std::move(c);
  return f;
}

PolyField PolyField::scalar_one(int n) {
  PolyField f;
  f.kind = Kind::ScalarOne;
  f.dimension = n;
  return f;
}

PolyField PolyField::scalar_linear(Vec a) {
  PolyField f;
  f.kind = Kind::ScalarLinear;
  f.dimension = static_cast<int>(a.size());
  f.vector = std::move(a);
  return f;
}

PolyField PolyField::position(int n) {
  PolyField f;
  f.kind = Kind::Position;
  f.dimension = n;
  return f;
}

PolyField PolyField::from_linear_form(const KoszulForm& form) {
  if (form.degree != 1) throw Error(ErrorKind::Contract, "expected a linear 1-form");
  const int n = form.dimension;
  Mat b = Mat::Zero(n, n);
  for (const auto& t : form.terms) {
    if (!t.coordinate || t.basis.size() != 1) throw Error(ErrorKind::Contract, "expected a homogeneous linear 1-form");
    b(t.basis[0], *t.coordinate) += t.coeff;
  }
  return linear(b);
}

std::vector<PolyField> PolyField::columns() const {
  if (kind != Kind::Identity) return {*this};
  std::vector<PolyField> out;
  for (int c = 0; c < dimension; ++c) out.push_back(constant(Vec::Unit(dimension, c)));
  return out;
}

FieldSample PolyField::operator()(const Vec& x) const {
  switch (kind) {
    case Kind::Linear: return FieldSample::vector(matrix * x);
    case Kind::Constant: return FieldSample::vector(vector);
    case Kind::ScalarOne: return FieldSample::scalar(1.0);
    case Kind::ScalarLinear: return FieldSample::scalar(vector.dot(x));
    case Kind::Position: return FieldSample::vector(x);
    case Kind::Identity: break;
  }
  throw Error(ErrorKind::Contract, "the identity target is evaluated column by column");
}

std::string to_string(PolyField::Kind kind) {
  switch (kind) {
    case PolyField::Kind::Identity: return "identity";
    case PolyField::Kind::Linear: return "linear";
    case PolyField::Kind::Constant: return "constant";
    case PolyField::Kind::ScalarOne: return "scalar-one";
    case PolyField::Kind::ScalarLinear: return "scalar-linear";
    case PolyField::Kind::Position: return "position";
  }
  return "?";
}

double CoefficientVector::max_abs() const {
  double m = 0.0;
  for (double c : coeffs) m = std::max(m, std::abs(c));
  return m;
}

namespace {

[[noreturn]] void unsupported(const PolyField& target, const BasisSpec& spec, int n) {
  throw Error(ErrorKind::UnsupportedTarget, "no explicit coefficients for target " + to_string(target.kind) + " in " +
                                                to_string(spec) + " (n=" + std::to_string(n) + ")");
}

double scale(const Mat& a) { return 1.0 + a.cwiseAbs().maxCoeff(); }

bool antisymmetric(const Mat& a) { return (a + a.transpose()).cwiseAbs().maxCoeff() <= 1e-12 * scale(a); }

/// Returns alpha if a == alpha I (up to rounding), otherwise nullopt.
std::optional<double> multiple_of_identity(const Mat& a) {
  const double alpha = a.trace() / static_cast<double>(a.rows());
  const Mat rest = a - alpha * Mat::Identity(a.rows(), a.cols());
  if (rest.cwiseAbs().maxCoeff() > 1e-12 * scale(a)) return std::nullopt;
  return alpha;
}

Mat linear_part(const PolyField& t) {
  return t.kind == PolyField::Kind::Position ? Mat(Mat::Identity(t.dimension, t.dimension)) : t.matrix;
}

/// Accumulates P-family coefficients written over arbitrary index tuples onto
/// the canonical descriptors (lambda index free, gradient indices increasing
/// and distinct from it).
class PFolder {
 public:
  PFolder(std::vector<BasisDescriptor> basis, int num_vertices)
      : basis_(std::move(basis)), coeffs_(basis_.size(), 0.0), nv_(num_vertices) {
    for (std::size_t a = 0; a < basis_.size(); ++a) slot_[basis_[a].indices] = a;
  }

  void add(int i, std::vector<int> grads, double c) {
    if (c == 0.0) return;
    for (std::size_t a = 0; a < grads.size(); ++a)
      for (std::size_t b = a + 1; b < grads.size(); ++b)
        if (grads[a] == grads[b]) return;  // repeated gradient: the function vanishes

    const auto hit = std::find(grads.begin(), grads.end(), i);
    if (hit != grads.end()) {
      for (int m = 0; m < nv_; ++m) {
        if (m == i) continue;
        *hit = m;
        add(i, grads, -c);
      }
      return;
    }

    // insertion sort, tracking the permutation parity
    double sign = 1.0;
    for (std::size_t a = 1; a < grads.size(); ++a)
      for (std::size_t b = a; b > 0 && grads[b - 1] > grads[b]; --b) {
        std::swap(grads[b - 1], grads[b]);
        sign = -sign;
      }
    std::vector<int> key{i};
    key.insert(key.end(), grads.begin(), grads.end());
    coeffs_[slot_.at(key)] += sign * c;
  }

  CoefficientVector finish() && { return {std::move(basis_), std::move(coeffs_)}; }

 private:
  std::vector<BasisDescriptor> basis_;
  std::vector<double> coeffs_;
  std::map<std::vector<int>, std::size_t> slot_;
  int nv_;
};

CoefficientVector p_family(const PolyField& t, const Polytope& p, const BasisSpec& spec) {
  const int n = p.dimension();
  const int nv = p.num_vertices();
  auto v = [&](int i) -> const Vec& { return p.vertex(i); };
  PFolder folder(enumerate_basis(p, spec), nv);

  if (spec.k == 1) {
    const bool constant = t.kind == PolyField::Kind::Constant;
    Mat b;
    if (!constant) {
      if (t.kind != PolyField::Kind::Linear && t.kind != PolyField::Kind::Position) unsupported(t, spec, n);
      b = spec.rot ? Mat(-rot_matrix() * linear_part(t)) : linear_part(t);
    }
    for (int i = 0; i < nv; ++i)
      for (int j = 0; j < nv; ++j) {
        double c;
        if (constant) {
          const Vec e = v(j) - v(i);
          c = (spec.rot ? rot(e) : e).dot(t.vector);
        } else {
          c = (b * v(i)).dot(v(j));
        }
        folder.add(i, {j}, c);
      }
    return std::move(folder).finish();
  }

  if (spec.k == 2 && n == 3) {
    const bool constant = t.kind == PolyField::Kind::Constant;
    Mat a;
    if (!constant) {
      if (t.kind != PolyField::Kind::Linear && t.kind != PolyField::Kind::Position) unsupported(t, spec, n);
      a = linear_part(t);
    }
    for (int i = 0; i < nv; ++i)
      for (int j = 0; j < nv; ++j)
        for (int k = 0; k < nv; ++k) {
          const double c = constant ? t.vector.dot(cross(v(j) - v(i), v(k) - v(i))) : (a * v(i)).dot(cross(v(j), v(k)));
          folder.add(i, {j, k}, 0.5 * c);
        }
    return std::move(folder).finish();
  }

  if (spec.k == 2 && n == 2) {
    if (t.kind != PolyField::Kind::ScalarOne && t.kind != PolyField::Kind::ScalarLinear) unsupported(t, spec, n);
    for (int i = 0; i < nv; ++i)
      for (int j = 0; j < nv; ++j)
        for (int k = 0; k < nv; ++k) {
          const double c = t.kind == PolyField::Kind::ScalarOne ? (v(j) - v(i)).dot(rot(v(k) - v(i)))
                                                                 : t.vector.dot(v(i)) * v(j).dot(rot(v(k)));
          folder.add(i, {j, k}, 0.5 * c);
        }
    return std::move(folder).finish();
  }

  unsupported(t, spec, n);
}

CoefficientVector whitney_family(const PolyField& t, const Polytope& p, const BasisSpec& spec) {
  const int n = p.dimension();
  CoefficientVector cv{enumerate_basis(p, spec), {}};
  cv.coeffs.reserve(cv.basis.size());
  auto v = [&](int i) -> const Vec& { return p.vertex(i); };
  const bool constant = t.kind == PolyField::Kind::Constant;

  if (spec.k == 1) {
    Mat b;
    if (!constant) {
      if (t.kind != PolyField::Kind::Linear && t.kind != PolyField::Kind::Position) unsupported(t, spec, n);
      b = spec.rot ? Mat(-rot_matrix() * linear_part(t)) : linear_part(t);
      if (!antisymmetric(b)) unsupported(t, spec, n);
    }
    for (const auto& d : cv.basis) {
      const int i = d.indices[0], j = d.indices[1];
      if (constant) {
        const Vec e = v(j) - v(i);
        cv.coeffs.push_back((spec.rot ? rot(e) : e).dot(t.vector));
      } else {
        cv.coeffs.push_back((b * v(i)).dot(v(j)));
      }
    }
    return cv;
  }

  if (spec.k == 2 && n == 3) {
    double alpha = 0.0;
    if (!constant) {
      if (t.kind != PolyField::Kind::Linear && t.kind != PolyField::Kind::Position) unsupported(t, spec, n);
      const auto m = multiple_of_identity(linear_part(t));
      if (!m) unsupported(t, spec, n);
      alpha = *m;
    }
    for (const auto& d : cv.basis) {
      const int i = d.indices[0], j = d.indices[1], k = d.indices[2];
      cv.coeffs.push_back(constant ? t.vector.dot(cross(v(j) - v(i), v(k) - v(i))) : alpha * v(i).dot(cross(v(j), v(k))));
    }
    return cv;
  }

  unsupported(t, spec, n);
}

}  // namespace

CoefficientVector coefficients_for(const PolyField& target, const Polytope& p, const BasisSpec& spec) {
  const int n = p.dimension();
  if (target.dimension != n) throw Error(ErrorKind::Contract, "target dimension does not match the polytope");
  if (target.kind == PolyField::Kind::Identity) {
    throw Error(ErrorKind::Contract, "expand the identity target with columns() first");
  }
  const bool scalar_target = target.is_scalar();
  if (scalar_target != scalar_proxy(n, spec.k)) unsupported(target, spec, n);

  if (spec.k == 0) {
    CoefficientVector cv{enumerate_basis(p, spec), {}};
    for (const auto& d : cv.basis) {
      cv.coeffs.push_back(target.kind == PolyField::Kind::ScalarOne ? 1.0 : target.vector.dot(p.vertex(d.indices[0])));
    }
    return cv;
  }
  return spec.family == Family::P ? p_family(target, p, spec) : whitney_family(target, p, spec);
}

CoefficientVector expand_to_p(const CoefficientVector& whitney, int num_vertices, int dimension) {
  if (whitney.basis.empty()) return whitney;
  const BasisSpec ws = whitney.basis.front().spec();
  if (ws.family != Family::Pminus || ws.k == 0) return whitney;

  BasisSpec ps = ws;
  ps.family = Family::P;
  PFolder folder(enumerate_basis(num_vertices, dimension, ps), num_vertices);
  // planar W_ijk is built on a x b, the P descriptors on a . rot b = -(a x b)
  const double factor = ws.k == 3 ? 6.0 : (dimension == 2 && ws.k == 2 ? -1.0 : 1.0);
  for (std::size_t s = 0; s < whitney.size(); ++s) {
    const auto& t = whitney.basis[s].indices;
    for (std::size_t a = 0; a < t.size(); ++a) {
      std::vector<int> grads;
      for (std::size_t b = 0; b < t.size(); ++b)
        if (b != a) grads.push_back(t[b]);
      folder.add(t[a], grads, (a % 2 == 0 ? 1.0 : -1.0) * factor * whitney.coeffs[s]);
    }
  }
  return std::move(folder).finish();
}

FieldSample combine(const CoefficientVector& cv, const CoordinateSet& cs) {
  if (cv.basis.empty()) throw Error(ErrorKind::Contract, "empty coefficient vector");
  FieldSample out = evaluate(cv.basis.front(), cs);
  out.value.setZero();
  for (std::size_t s = 0; s < cv.size(); ++s) {
    if (cv.coeffs[s] == 0.0) continue;
    out.value += cv.coeffs[s] * evaluate(cv.basis[s], cs).value;
  }
  return out;
}

double field_distance(const FieldSample& a, const FieldSample& b) {
  if (a.value.size() != b.value.size()) throw Error(ErrorKind::Contract, "field samples differ in shape");
  return (a.value - b.value).cwiseAbs().maxCoeff();
}

ResidualReport verify_reproduction(const Polytope& p, const BasisSpec& spec, const PolyField& target,
                                   const std::vector<Vec>& samples) {
  ResidualReport report;
  const auto cols = target.columns();
  for (const auto& col : cols) report.coefficients.push_back(coefficients_for(col, p, spec));

  for (std::size_t s = 0; s < samples.size(); ++s) {
    const CoordinateSet cs = wachspress(p, samples[s]);
    for (std::size_t c = 0; c < cols.size(); ++c) {
      const double r = field_distance(combine(report.coefficients[c], cs), cols[c](samples[s]));
      if (report.worst_sample < 0 || r > report.max_residual) {
        report.max_residual = r;
        report.worst_sample = static_cast<int>(s);
      }
    }
  }
  return report;
}

SpanResult span_contains(const Polytope& p, const BasisSpec& spec, const FieldFunction& target,
                         const std::vector<Vec>& samples) {
  const auto basis = enumerate_basis(p, spec);
  const int comps = scalar_proxy(p.dimension(), spec.k) ? 1 : p.dimension();
  const auto rows = static_cast<Eigen::Index>(samples.size()) * comps;
  const auto cols = static_cast<Eigen::Index>(basis.size());
  if (rows < cols) {
    throw Error(ErrorKind::Contract, "span_contains needs at least " + std::to_string(cols) + " equations, got " +
                                         std::to_string(rows) + "; add samples");
  }

  Eigen::MatrixXd m(rows, cols);
  Eigen::VectorXd rhs(rows);
  for (std::size_t s = 0; s < samples.size(); ++s) {
    const CoordinateSet cs = wachspress(p, samples[s]);
    const FieldSample t = target(samples[s]);
    if (t.value.size() != comps) throw Error(ErrorKind::Contract, "target shape does not match the basis family");
    const auto r0 = static_cast<Eigen::Index>(s) * comps;
    rhs.segment(r0, comps) = t.value;
    for (Eigen::Index c = 0; c < cols; ++c) m.block(r0, c, comps, 1) = evaluate(basis[static_cast<std::size_t>(c)], cs).value;
  }

  Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(m);
  qr.setThreshold(1e-10);
  const Eigen::VectorXd coeffs = qr.solve(rhs);
  const double err = (m * coeffs - rhs).norm();
  const double norm = rhs.norm();

  SpanResult out;
  out.residual = norm > 0.0 ? err / norm : err;
  out.rank = static_cast<int>(qr.rank());
  out.rows = static_cast<int>(rows);
  out.cols = static_cast<int>(cols);
  return out;
}

SpanResult span_contains(const Polytope& p, const BasisSpec& spec, const PolyField& target,
                         const std::vector<Vec>& samples) {
  if (target.kind == PolyField::Kind::Identity) {
    SpanResult worst;
    for (const auto& col : target.columns()) {
      const SpanResult r = span_contains(p, spec, col, samples);
      if (r.residual >= worst.residual) worst = r;
    }
    return worst;
  }
  return span_contains(p, spec, FieldFunction([&target](const Vec& x) { return target(x); }), samples);
}

std::vector<ReproductionCase> identity_cases(int n) {
  const PolyField id = PolyField::identity(n);
  if (n == 2) {
    return {
        {"grad-pair-matrix", {Family::P, 1, false}, id, 1e-8},
        {"rot-grad-pair-matrix", {Family::P, 1, true}, id, 1e-8},
        {"rot-density-unity", {Family::P, 2, false}, PolyField::scalar_one(2), 1e-9},
        {"whitney-edge-matrix", {Family::Pminus, 1, false}, id, 1e-8},
        {"rot-whitney-edge-matrix", {Family::Pminus, 1, true}, id, 1e-8},
    };
  }
  return {
      {"grad-pair-matrix", {Family::P, 1, false}, id, 1e-8},
      {"cross-triple-matrix", {Family::P, 2, false}, id, 1e-8},
      {"whitney-edge-matrix", {Family::Pminus, 1, false}, id, 1e-8},
      {"whitney-face-matrix", {Family::Pminus, 2, false}, id, 1e-8},
  };
}

Mat random_matrix(int n, std::uint64_t seed) {
  SampleStream rng(seed);
  Mat a(n, n);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) a(r, c) = rng.uniform(-1.0, 1.0);
  return a;
}

Vec random_vector(int n, std::uint64_t seed) {
  SampleStream rng(seed);
  Vec a(n);
  for (int r = 0; r < n; ++r) a[r] = rng.uniform(-1.0, 1.0);
  return a;
}

std::vector<ReproductionCase> linear_cases(int n, std::uint64_t seed, int draws) {
  std::vector<ReproductionCase> out;
  std::uint64_t stream = 0;
  auto draw = [&] { return SampleStream::derive(seed, stream++); };
  auto add = [&](const std::string& id, BasisSpec spec, auto&& make) {
    for (int d = 0; d < draws; ++d) out.push_back({id + "#" + std::to_string(d), spec, make(draw()), 1e-8});
  };

  auto random_linear = [n](std::uint64_t s) { return PolyField::linear(random_matrix(n, s)); };
  auto scaled_position = [n](std::uint64_t s) {
    return PolyField::linear(random_vector(1, s)[0] * Mat::Identity(n, n));
  };
  // Koszul image of a random constant 2-form
  auto koszul_field = [n](std::uint64_t s) {
    const Vec w = random_vector(n == 2 ? 1 : 3, s);
    const KoszulForm omega = n == 2 ? KoszulForm::constant(2, 2, {{w[0], {0, 1}}})
                                    : KoszulForm::constant(3, 2, {{w[0], {0, 1}}, {w[1], {0, 2}}, {w[2], {1, 2}}});
    return PolyField::from_linear_form(koszul_apply(omega));
  };

  add("grad-pair-linear", {Family::P, 1, false}, random_linear);
  if (n == 2) {
    add("rot-grad-pair-linear", {Family::P, 1, true}, random_linear);
    add("rot-density-linear", {Family::P, 2, false}, [](std::uint64_t s) { return PolyField::scalar_linear(random_vector(2, s)); });
    add("whitney-edge-koszul", {Family::Pminus, 1, false}, koszul_field);
    add("rot-whitney-edge-position", {Family::Pminus, 1, true}, scaled_position);
  } else {
    add("cross-triple-linear", {Family::P, 2, false}, random_linear);
    add("whitney-edge-koszul", {Family::Pminus, 1, false}, koszul_field);
    add("whitney-face-position", {Family::Pminus, 2, false}, scaled_position);
  }
  return out;
}

}  // namespace gbc
