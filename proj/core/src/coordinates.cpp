#include <gbc/coordinates.hpp>
#include <gbc/error.hpp>

#include <cmath>
#include <limits>
#include <sstream>

namespace gbc {
namespace {

/// Product of the factors whose mask bit is set, and its gradient (product rule).
struct Product {
  double value = 1.0;
  Vec gradient;
};

Product masked_product(const std::vector<double>& factors, const std::vector<Vec>& grads,
                       const std::vector<char>& include, int dim) {
  Product out{1.0, Vec::Zero(dim)};
  const std::size_t m = factors.size();
  for (std::size_t a = 0; a < m; ++a) {
    if (!include[a]) continue;
    out.value *= factors[a];
    double rest = 1.0;
    for (std::size_t b = 0; b < m; ++b)
      if (b != a && include[b]) rest *= factors[b];
    out.gradient += rest * grads[a];
  }
  return out;
}

/// Normalize weights into coordinates (quotient rule for the gradients).
CoordinateSet normalize(const Polytope& p, const Vec& x, const std::vector<double>& w,
                        const std::vector<Vec>& gw) {
  const int n = static_cast<int>(w.size());
  const int dim = p.dimension();
  double total = 0.0;
  Vec total_grad = Vec::Zero(dim);
  for (int i = 0; i < n; ++i) {
    total += w[static_cast<std::size_t>(i)];
    total_grad += gw[static_cast<std::size_t>(i)];
  }

  CoordinateSet cs;
  cs.point = x;
  cs.values.resize(static_cast<std::size_t>(n));
  cs.gradients.resize(static_cast<std::size_t>(n));

  if (!(total > 0.0)) {
    // All weights vanish only at a vertex where more than three faces meet.
    for (int i = 0; i < n; ++i) {
      if ((p.vertex(i) - x).norm() <= p.tolerance()) {
        const Vec nan = Vec::Constant(dim, std::numeric_limits<double>::quiet_NaN());
        for (int j = 0; j < n; ++j) {
          cs.values[static_cast<std::size_t>(j)] = j == i ? 1.0 : 0.0;
          cs.gradients[static_cast<std::size_t>(j)] = nan;
        }
        return cs;
      }
    }
    throw Error(ErrorKind::Internal, "Wachspress weights sum to a non-positive value");
  }

  for (int i = 0; i < n; ++i) {
    const auto s = static_cast<std::size_t>(i);
    cs.values[s] = w[s] / total;
    cs.gradients[s] = (gw[s] - cs.values[s] * total_grad) / total;
  }
  return cs;
}

[[noreturn]] void outside(const Vec& x, double distance) {
  std::ostringstream os;
  os << "point (" << x.transpose() << ") lies outside the polytope (facet distance " << distance << ")";
  throw Error(ErrorKind::Domain, os.str());
}

}  // namespace

CoordinateSet wachspress_2d(const Polytope& p, const Vec& x) {
  if (p.dimension() != 2 || x.size() != 2) throw Error(ErrorKind::Contract, "wachspress_2d needs a polygon and a 2D point");
  const int n = p.num_vertices();
  const double area_tol = kRelTol * p.diameter() * p.diameter();

  std::vector<double> area(static_cast<std::size_t>(n));
  std::vector<Vec> area_grad(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j) {
    const Vec& a = p.vertex(j);
    const Vec& b = p.vertex((j + 1) % n);
    const auto s = static_cast<std::size_t>(j);
    area[s] = 0.5 * cross2(a - x, b - x);
    area_grad[s] = 0.5 * rot(b - a);
    if (area[s] < -area_tol) outside(x, area[s]);
  }

  std::vector<double> w(static_cast<std::size_t>(n));
  std::vector<Vec> gw(static_cast<std::size_t>(n));
  std::vector<char> include(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    const int prev = (i + n - 1) % n;
    const Vec& vp = p.vertex(prev);
    const Vec& vi = p.vertex(i);
    const Vec& vn = p.vertex((i + 1) % n);
    const double corner = 0.5 * cross2(vi - vp, vn - vi);

    for (int j = 0; j < n; ++j) include[static_cast<std::size_t>(j)] = (j != i && j != prev);
    const Product prod = masked_product(area, area_grad, include, 2);
    w[static_cast<std::size_t>(i)] = corner * prod.value;
    gw[static_cast<std::size_t>(i)] = corner * prod.gradient;
  }
  return normalize(p, x, w, gw);
}

CoordinateSet wachspress_3d(const Polytope& p, const Vec& x) {
  if (p.dimension() != 3 || x.size() != 3) throw Error(ErrorKind::Contract, "wachspress_3d needs a polyhedron and a 3D point");
  const int n = p.num_vertices();
  const int nf = p.num_facets();

  std::vector<double> h(static_cast<std::size_t>(nf));
  std::vector<Vec> hgrad(static_cast<std::size_t>(nf));
  for (int f = 0; f < nf; ++f) {
    const auto s = static_cast<std::size_t>(f);
    h[s] = p.facet_distance(f, x);
    hgrad[s] = -p.facet_normal(f);
    if (h[s] < -p.tolerance()) outside(x, h[s]);
  }

  std::vector<double> w(static_cast<std::size_t>(n), 0.0);
  std::vector<Vec> gw(static_cast<std::size_t>(n), Vec::Zero(3));
  std::vector<char> include(static_cast<std::size_t>(nf));
  for (int i = 0; i < n; ++i) {
    const auto star = p.vertex_star(i);
    if (star.size() < 3) {
      throw Error(ErrorKind::Topology, "faces around vertex " + std::to_string(i) + " cannot be ordered cyclically");
    }
    const auto s = static_cast<std::size_t>(i);
    const int f1 = star[0];
    for (std::size_t t = 1; t + 1 < star.size(); ++t) {
      const int ft = star[t];
      const int fu = star[t + 1];
      const double d = det3(p.facet_normal(f1), p.facet_normal(ft), p.facet_normal(fu));
      for (int f = 0; f < nf; ++f) include[static_cast<std::size_t>(f)] = (f != f1 && f != ft && f != fu);
      const Product prod = masked_product(h, hgrad, include, 3);
      w[s] += d * prod.value;
      gw[s] += d * prod.gradient;
    }
  }
  return normalize(p, x, w, gw);
}

CoordinateSet wachspress(const Polytope& p, const Vec& x) {
  return p.dimension() == 2 ? wachspress_2d(p, x) : wachspress_3d(p, x);
}

std::vector<Vec> gradient_fd_oracle(const Polytope& p, const Vec& x, double h) {
  if (!(h > 0.0)) throw Error(ErrorKind::Contract, "finite-difference step must be positive");
  if (p.boundary_distance(x) < h) throw Error(ErrorKind::Stencil, "finite-difference stencil leaves the polytope");

  const int dim = p.dimension();
  const int n = p.num_vertices();
  std::vector<Vec> grads(static_cast<std::size_t>(n), Vec::Zero(dim));

  auto central = [&](int axis, double step) {
    Vec fwd = x, bwd = x;
    fwd[axis] += step;
    bwd[axis] -= step;
    const auto plus = wachspress(p, fwd).values;
    const auto minus = wachspress(p, bwd).values;
    std::vector<double> d(static_cast<std::size_t>(n));
    for (std::size_t i = 0; i < d.size(); ++i) d[i] = (plus[i] - minus[i]) / (2.0 * step);
    return d;
  };

  for (int axis = 0; axis < dim; ++axis) {
    const auto coarse = central(axis, h);
    const auto fine = central(axis, 0.5 * h);
    for (std::size_t i = 0; i < coarse.size(); ++i) grads[i][axis] = (4.0 * fine[i] - coarse[i]) / 3.0;
  }
  return grads;
}

IdentityResiduals coordinate_identity_residuals(const CoordinateSet& cs, const Polytope& p) {
  const int dim = p.dimension();
  double sum = 0.0;
  Vec position = Vec::Zero(dim);
  Vec grad_sum = Vec::Zero(dim);
  Mat outer = Mat::Zero(dim, dim);
  for (int i = 0; i < cs.size(); ++i) {
    const auto s = static_cast<std::size_t>(i);
    sum += cs.values[s];
    position += cs.values[s] * p.vertex(i);
    grad_sum += cs.gradients[s];
    outer += p.vertex(i) * cs.gradients[s].transpose();
  }
  IdentityResiduals r;
  r.partition_of_unity = std::abs(sum - 1.0);
  r.linear_precision = (position - cs.point).norm();
  r.gradient_sum = grad_sum.norm();
  r.gradient_precision = (outer - Mat::Identity(dim, dim)).cwiseAbs().maxCoeff();
  return r;
}

}  // namespace gbc
