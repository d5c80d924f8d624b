#include <gbc/error.hpp>
#include <gbc/polytope.hpp>
#include <gbc/random.hpp>

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <set>
#include <sstream>

namespace gbc {

std::string to_string(ViolationKind kind) {
  switch (kind) {
    case ViolationKind::TooFewVertices: return "too-few-vertices";
    case ViolationKind::Orientation: return "orientation";
    case ViolationKind::NonConvexVertex: return "non-convex-vertex";
    case ViolationKind::NonPlanarFace: return "non-planar-face";
    case ViolationKind::BadEdgeIncidence: return "bad-edge-incidence";
    case ViolationKind::EulerCharacteristic: return "euler-characteristic";
    case ViolationKind::BadFace: return "bad-face";
  }
  return "unknown";
}

namespace {

Vec newell_normal(std::span<const Vec> vertices, std::span<const int> cycle) {
  Vec n = Vec::Zero(3);
  const std::size_t m = cycle.size();
  for (std::size_t a = 0; a < m; ++a) {
    const Vec& p = vertices[static_cast<std::size_t>(cycle[a])];
    const Vec& q = vertices[static_cast<std::size_t>(cycle[(a + 1) % m])];
    n += cross(p, q);
  }
  return n;
}

bool index_ok(int i, int n) { return i >= 0 && i < n; }

}  // namespace

Polytope Polytope::polygon(std::vector<Vec> vertices) {
  Polytope p;
  p.dimension_ = 2;
  p.vertices_ = std::move(vertices);
  const int n = p.num_vertices();
  for (int i = 0; i < n; ++i) p.facets_.push_back({i, (i + 1) % n});
  p.finish();
  return p;
}

Polytope Polytope::polyhedron(std::vector<Vec> vertices, std::vector<std::vector<int>> faces) {
  Polytope p;
  p.dimension_ = 3;
  p.vertices_ = std::move(vertices);
  p.facets_ = std::move(faces);
  p.finish();
  return p;
}

void Polytope::finish() {
  const int n = num_vertices();
  for (const Vec& v : vertices_) {
    if (v.size() != dimension_) {
      throw Error(ErrorKind::Contract, "vertex dimension does not match polytope dimension");
    }
  }

  diameter_ = 0.0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) diameter_ = std::max(diameter_, (vertex(i) - vertex(j)).norm());

  normals_.clear();
  for (const auto& f : facets_) {
    bool in_range = f.size() >= 2;
    for (int i : f) in_range = in_range && index_ok(i, n);
    Vec normal = Vec::Zero(dimension_);
    if (in_range && dimension_ == 2) {
      const Vec e = vertex(f[1]) - vertex(f[0]);
      const double len = e.norm();
      if (len > 0.0) {
        normal.resize(2);
        normal << e[1] / len, -e[0] / len;
      }
    } else if (in_range && f.size() >= 3) {
      const Vec area = newell_normal(vertices_, f);
      const double len = area.norm();
      if (len > 0.0) normal = area / len;
    }
    normals_.push_back(normal);
  }

  std::set<std::pair<int, int>> edge_set;
  for (const auto& f : facets_) {
    const std::size_t m = f.size();
    if (dimension_ == 2) {
      if (m == 2) edge_set.insert(std::minmax(f[0], f[1]));
      continue;
    }
    for (std::size_t a = 0; a < m; ++a) edge_set.insert(std::minmax(f[a], f[(a + 1) % m]));
  }
  edges_.assign(edge_set.begin(), edge_set.end());

  stars_.assign(static_cast<std::size_t>(n), {});
  if (dimension_ != 3) return;

  // prev/next neighbour of vertex i inside face f's cycle
  auto neighbour = [this](int f, int i, int step) {
    const auto& cyc = facets_[static_cast<std::size_t>(f)];
    const auto it = std::find(cyc.begin(), cyc.end(), i);
    const auto m = static_cast<std::ptrdiff_t>(cyc.size());
    const auto pos = it - cyc.begin();
    return cyc[static_cast<std::size_t>((pos + step + m) % m)];
  };

  for (int i = 0; i < n; ++i) {
    std::vector<int> incident;
    for (int f = 0; f < num_facets(); ++f)
      if (facet_contains(f, i)) incident.push_back(f);
    if (incident.size() < 3) continue;

    // Walking counterclockwise from outside, the face after f is the one that
    // contains the edge (prev_f(i), i) traversed as i -> prev_f(i).
    std::vector<int> order{incident.front()};
    bool ok = true;
    while (ok && order.size() < incident.size()) {
      const int p = neighbour(order.back(), i, -1);
      int found = -1;
      for (int g : incident) {
        if (g != order.back() && neighbour(g, i, +1) == p) {
          found = g;
          break;
        }
      }
      if (found < 0 || std::find(order.begin(), order.end(), found) != order.end()) ok = false;
      else order.push_back(found);
    }
    if (ok && neighbour(order.front(), i, +1) == neighbour(order.back(), i, -1)) {
      stars_[static_cast<std::size_t>(i)] = std::move(order);
    }
  }
}

bool Polytope::facet_contains(int f, int i) const {
  const auto& cyc = facets_[static_cast<std::size_t>(f)];
  return std::find(cyc.begin(), cyc.end(), i) != cyc.end();
}

double Polytope::facet_distance(int f, const Vec& x) const {
  const Vec& q = vertex(facet(f)[0]);
  return (q - x).dot(facet_normal(f));
}

Vec Polytope::vertex_centroid() const {
  Vec c = Vec::Zero(dimension_);
  for (const Vec& v : vertices_) c += v;
  return c / static_cast<double>(vertices_.size());
}

double Polytope::signed_measure() const {
  if (dimension_ == 2) {
    double twice = 0.0;
    const int n = num_vertices();
    for (int i = 0; i < n; ++i) twice += cross2(vertex(i), vertex((i + 1) % n));
    return 0.5 * twice;
  }
  const Vec c = vertex_centroid();
  double six = 0.0;
  for (const auto& f : facets_) {
    for (std::size_t t = 1; t + 1 < f.size(); ++t) {
      six += det3(vertex(f[0]) - c, vertex(f[t]) - c, vertex(f[t + 1]) - c);
    }
  }
  return six / 6.0;
}

double Polytope::boundary_distance(const Vec& x) const {
  double d = std::numeric_limits<double>::infinity();
  for (int f = 0; f < num_facets(); ++f) d = std::min(d, facet_distance(f, x));
  return d;
}

bool Polytope::contains(const Vec& x) const { return boundary_distance(x) >= -tolerance(); }

ValidationResult validate_polytope(const Polytope& p) {
  ValidationResult result;
  auto flag = [&result](ViolationKind kind, int index, std::string detail) {
    result.violations.push_back({kind, index, std::move(detail)});
  };

  const int n = p.num_vertices();
  const int dim = p.dimension();
  if (n < dim + 1) {
    flag(ViolationKind::TooFewVertices, -1, "need at least " + std::to_string(dim + 1) + " vertices");
    return result;
  }

  const double diam = p.diameter();
  const double tol = p.tolerance();

  // Degeneracy: the vertex set must span the ambient dimension.
  double span = 0.0;
  const Vec& o = p.vertex(0);
  for (int a = 1; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      if (dim == 2) {
        span = std::max(span, std::abs(cross2(p.vertex(a) - o, p.vertex(b) - o)));
        continue;
      }
      for (int c = b + 1; c < n; ++c)
        span = std::max(span, std::abs(det3(p.vertex(a) - o, p.vertex(b) - o, p.vertex(c) - o)));
    }
  }
  if (!(diam > 0.0) || span <= kRelTol * std::pow(diam, dim)) {
    throw Error(ErrorKind::Degenerate, dim == 2 ? "polygon has zero area" : "polyhedron has zero volume");
  }

  if (dim == 3) {
    bool faces_ok = p.num_facets() >= 4;
    if (!faces_ok) flag(ViolationKind::BadFace, -1, "polyhedron needs at least 4 faces");
    for (int f = 0; f < p.num_facets(); ++f) {
      const auto cyc = p.facet(f);
      std::set<int> unique(cyc.begin(), cyc.end());
      const bool in_range = std::all_of(cyc.begin(), cyc.end(), [n](int i) { return index_ok(i, n); });
      if (cyc.size() < 3 || unique.size() != cyc.size() || !in_range) {
        flag(ViolationKind::BadFace, f, "face must list at least 3 distinct valid vertex ids");
        faces_ok = false;
      }
    }
    if (!faces_ok) return result;

    std::map<std::pair<int, int>, int> directed;
    for (const auto& cyc : p.facets()) {
      for (std::size_t a = 0; a < cyc.size(); ++a) ++directed[{cyc[a], cyc[(a + 1) % cyc.size()]}];
    }
    for (const auto& [e, count] : directed) {
      const auto twin = directed.find({e.second, e.first});
      if (count != 1 || twin == directed.end() || twin->second != 1) {
        std::ostringstream os;
        os << "edge (" << e.first << "," << e.second << ") is not shared by exactly two consistently oriented faces";
        flag(ViolationKind::BadEdgeIncidence, e.first, os.str());
      }
    }

    const int euler = n - p.num_edges() + p.num_facets();
    if (euler != 2) flag(ViolationKind::EulerCharacteristic, -1, "v - e + f = " + std::to_string(euler));

    for (int i = 0; i < n; ++i) {
      if (p.vertex_star(i).empty()) {
        flag(ViolationKind::NonConvexVertex, i, "vertex is not a corner with an orderable face star");
      }
    }

    const Vec c = p.vertex_centroid();
    for (int f = 0; f < p.num_facets(); ++f) {
      const auto cyc = p.facet(f);
      const Vec& normal = p.facet_normal(f);
      if (normal.norm() == 0.0) {
        flag(ViolationKind::BadFace, f, "face has zero area");
        continue;
      }
      Vec fc = Vec::Zero(3);
      for (int i : cyc) fc += p.vertex(i);
      fc /= static_cast<double>(cyc.size());
      double off = 0.0;
      for (int i : cyc) off = std::max(off, std::abs((p.vertex(i) - fc).dot(normal)));
      if (off > tol) {
        std::ostringstream os;
        os << "face deviates from its plane by " << off;
        flag(ViolationKind::NonPlanarFace, f, os.str());
      }
      if ((fc - c).dot(normal) <= 0.0) flag(ViolationKind::Orientation, f, "face is wound clockwise from outside");
    }
  }

  if (p.signed_measure() <= 0.0) {
    flag(ViolationKind::Orientation, -1, dim == 2 ? "signed area is not positive" : "signed volume is not positive");
  }

  std::set<int> reported;
  if (dim == 2 && p.signed_measure() > 0.0) {
    // Corner turn: the next vertex must lie strictly left of the incoming edge.
    for (int i = 0; i < n; ++i) {
      const Vec& prev = p.vertex((i + n - 1) % n);
      const Vec& next = p.vertex((i + 1) % n);
      const Vec in = p.vertex(i) - prev;
      const double len = in.norm();
      if (len == 0.0 || cross2(in, next - p.vertex(i)) / len <= tol) {
        reported.insert(i);
        flag(ViolationKind::NonConvexVertex, i, "vertex " + std::to_string(i) + " is a reflex or flat corner");
      }
    }
    if (!reported.empty()) return result;
  }

  // Supporting-plane test: every vertex off a facet lies strictly inside it.
  for (int f = 0; f < p.num_facets(); ++f) {
    if (p.facet_normal(f).norm() == 0.0) continue;
    for (int i = 0; i < n; ++i) {
      if (p.facet_contains(f, i) || reported.count(i)) continue;
      if (p.facet_distance(f, p.vertex(i)) <= tol) {
        reported.insert(i);
        flag(ViolationKind::NonConvexVertex, i,
             "vertex " + std::to_string(i) + " is not strictly inside facet " + std::to_string(f));
      }
    }
  }
  return result;
}

std::vector<Vec> sample_convex_combinations(std::span<const Vec> points, std::size_t count,
                                            std::uint64_t seed) {
  std::vector<Vec> out;
  if (count == 0 || points.empty()) return out;
  out.reserve(count);
  const auto dim = points.front().size();

  Vec centroid = Vec::Zero(dim);
  for (const Vec& q : points) centroid += q;
  out.push_back(centroid / static_cast<double>(points.size()));

  SampleStream rng(seed);
  std::vector<double> w(points.size());
  while (out.size() < count) {
    double total = 0.0;
    for (double& wi : w) total += (wi = rng.exponential());
    Vec x = Vec::Zero(dim);
    for (std::size_t i = 0; i < points.size(); ++i) x += (w[i] / total) * points[i];
    out.push_back(x);
  }
  return out;
}

std::vector<Vec> sample_interior(const Polytope& p, std::size_t count, std::uint64_t seed) {
  return sample_convex_combinations(p.vertices(), count, seed);
}

}  // namespace gbc
