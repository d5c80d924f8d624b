#include <gbc/counting.hpp>
#include <gbc/error.hpp>

#include <numeric>

namespace gbc {

long binomial(long n, long r) {
  if (r < 0 || r > n) return 0;
  long out = 1;
  for (long i = 1; i <= r; ++i) out = out * (n - r + i) / i;
  return out;
}

CountRecord count_2d(int v, int e, int k, Family family) {
  if (v < 3 || v != e) throw Error(ErrorKind::Topology, "a polygon needs v == e >= 3");
  if (k < 0 || k > 2) throw Error(ErrorKind::Domain, "form degree must be 0, 1 or 2 in 2D");
  CountRecord r{2, k, family, 0, 0, 0, std::nullopt};
  const bool p = family == Family::P;
  switch (k) {
    case 0:
      r.constructed = v;
      r.boundary = v;
      r.polynomial = 3;
      break;
    case 1:
      r.constructed = p ? 2 * binomial(v, 2) : binomial(v, 2);
      r.boundary = p ? 2L * e : e;
      r.polynomial = p ? 6 : 3;
      break;
    default:
      r.constructed = p ? 3 * binomial(v, 3) : binomial(v, 3);
      r.boundary = 0;
      r.polynomial = p ? 3 : 1;
      break;
  }
  return r;
}

CountRecord count_3d(int v, int e, const std::vector<int>& face_vertex_counts, int k, Family family) {
  const int f = static_cast<int>(face_vertex_counts.size());
  if (v - e + f != 2) throw Error(ErrorKind::Topology, "Euler relation v - e + f = 2 fails");
  if (std::accumulate(face_vertex_counts.begin(), face_vertex_counts.end(), 0L) != 2L * e) {
    throw Error(ErrorKind::Topology, "face sizes do not sum to twice the edge count");
  }
  if (k < 0 || k > 3) throw Error(ErrorKind::Domain, "form degree must be 0..3 in 3D");

  auto face_sum = [&](auto&& term) {
    long s = 0;
    for (int va : face_vertex_counts) s += term(static_cast<long>(va));
    return s;
  };

  CountRecord r{3, k, family, 0, 0, 0, std::nullopt};
  const bool p = family == Family::P;
  switch (k) {
    case 0:
      r.constructed = v;
      r.boundary = v;
      r.polynomial = 4;
      break;
    case 1:
      r.constructed = p ? 2 * binomial(v, 2) : binomial(v, 2);
      r.boundary = p ? face_sum([](long a) { return a * (a - 1); }) - 2L * e
                     : face_sum([](long a) { return binomial(a, 2); }) - e;
      r.polynomial = p ? 12 : 6;
      break;
    case 2:
      r.constructed = p ? 3 * binomial(v, 3) : binomial(v, 3);
      r.boundary = p ? face_sum([](long a) { return a * (a - 1) * (a - 2) / 2; })
                     : face_sum([](long a) { return binomial(a, 3); });
      r.polynomial = p ? 12 : 4;
      break;
    default:
      r.constructed = p ? 4 * binomial(v, 4) : binomial(v, 4);
      r.boundary = 0;
      r.polynomial = p ? 4 : 1;
      break;
  }
  return r;
}

bool is_combinatorial_hexahedron(const Polytope& p) {
  if (p.dimension() != 3 || p.num_vertices() != 8 || p.num_edges() != 12 || p.num_facets() != 6) return false;
  for (const auto& f : p.facets())
    if (f.size() != 4) return false;
  return true;
}

CountRecord count(const Polytope& p, int k, Family family) {
  if (p.dimension() == 2) return count_2d(p.num_vertices(), p.num_edges(), k, family);

  std::vector<int> sizes;
  for (const auto& f : p.facets()) sizes.push_back(static_cast<int>(f.size()));
  CountRecord r = count_3d(p.num_vertices(), p.num_edges(), sizes, k, family);
  if (k == 1 && family == Family::Pminus && is_combinatorial_hexahedron(p) && r.boundary != hexahedron_text_boundary) {
    r.note = "formula gives " + std::to_string(r.boundary) + "; the hexahedron value usually quoted is " +
             std::to_string(hexahedron_text_boundary);
  }
  return r;
}

std::vector<CountRecord> count_all(const Polytope& p) {
  std::vector<CountRecord> out;
  for (int k = 0; k <= p.dimension(); ++k) {
    if (k == 0) {
      out.push_back(count(p, 0, Family::P));
      continue;
    }
    out.push_back(count(p, k, Family::P));
    out.push_back(count(p, k, Family::Pminus));
  }
  return out;
}

}  // namespace gbc
