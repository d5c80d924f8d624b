#include <gbc/conformity.hpp>
#include <gbc/coordinates.hpp>
#include <gbc/error.hpp>
#include <gbc/random.hpp>

#include <algorithm>
#include <map>

namespace gbc {

HatValue hat_evaluate(const MeshComplex& mesh, int element, int global_vertex, const Vec& x) {
  if (element < 0 || element >= static_cast<int>(mesh.elements().size())) {
    throw Error(ErrorKind::Contract, "element id " + std::to_string(element) + " out of range");
  }
  if (global_vertex < 0 || global_vertex >= static_cast<int>(mesh.vertices().size())) {
    throw Error(ErrorKind::Contract, "vertex id " + std::to_string(global_vertex) + " out of range");
  }
  const Element& el = mesh.element(element);
  const int local = el.local_of(global_vertex);
  if (local < 0) {
    if (!el.shape.contains(x)) throw Error(ErrorKind::Domain, "point lies outside element " + std::to_string(element));
    return {0.0, Vec::Zero(mesh.dimension())};
  }
  const CoordinateSet cs = wachspress(el.shape, x);
  return {cs.values[static_cast<std::size_t>(local)], cs.gradients[static_cast<std::size_t>(local)]};
}

BoundaryReport boundary_vanishing_check(const Polytope& p, int local_facet, const std::vector<Vec>& samples) {
  if (local_facet < 0 || local_facet >= p.num_facets()) throw Error(ErrorKind::Contract, "facet index out of range");
  BoundaryReport r;
  r.facet = local_facet;
  r.min_inward = std::numeric_limits<double>::infinity();
  const Vec& n = p.facet_normal(local_facet);

  for (const Vec& x : samples) {
    const CoordinateSet cs = wachspress(p, x);
    for (int k = 0; k < p.num_vertices(); ++k) {
      if (p.facet_contains(local_facet, k)) continue;
      const auto s = static_cast<std::size_t>(k);
      const Vec& g = cs.gradients[s];
      const double normal = g.dot(n);
      r.max_value = std::max(r.max_value, std::abs(cs.values[s]));
      r.max_tangential = std::max(r.max_tangential, (g - normal * n).norm());
      r.min_inward = std::min(r.min_inward, -normal);
      ++r.checked;
    }
  }
  if (r.checked == 0) r.min_inward = 0.0;
  return r;
}

std::string to_string(TraceKind kind) {
  switch (kind) {
    case TraceKind::Value: return "value";
    case TraceKind::Tangential: return "tangential";
    case TraceKind::Normal: return "normal";
  }
  return "?";
}

TraceKind trace_kind_for(int dimension, const BasisSpec& spec) {
  if (spec.k == 0) return TraceKind::Value;
  if (spec.k == dimension) throw Error(ErrorKind::Contract, "top-degree forms have no trace continuity");
  if (spec.k == 1 && !(dimension == 2 && spec.rot)) return TraceKind::Tangential;
  return TraceKind::Normal;
}

Vec trace_of(const FieldSample& u, const FacetFrame& frame, TraceKind kind) {
  switch (kind) {
    case TraceKind::Value: return u.value;
    case TraceKind::Normal: return Vec::Constant(1, frame.normal.dot(u.value));
    case TraceKind::Tangential: {
      Vec t(static_cast<Eigen::Index>(frame.tangents.size()));
      for (std::size_t a = 0; a < frame.tangents.size(); ++a) t[static_cast<Eigen::Index>(a)] = frame.tangents[a].dot(u.value);
      return t;
    }
  }
  throw Error(ErrorKind::Internal, "unknown trace kind");
}

namespace {

struct Localized {
  BasisDescriptor local;
  double sign = 1.0;
};

/// Rewrite a local descriptor in global ids: Whitney tuples fully sorted,
/// P tuples with the gradient indices sorted. Returns the permutation sign.
std::pair<std::vector<int>, double> global_key(const BasisDescriptor& d, const Element& el) {
  std::vector<int> ids;
  for (int i : d.indices) ids.push_back(el.global_ids[static_cast<std::size_t>(i)]);
  const std::size_t first = (d.family == Family::P && d.k > 0) ? 1 : 0;
  double sign = 1.0;
  for (std::size_t a = first + 1; a < ids.size(); ++a)
    for (std::size_t b = a; b > first && ids[b - 1] > ids[b]; --b) {
      std::swap(ids[b - 1], ids[b]);
      sign = -sign;
    }
  return {ids, sign};
}

using SideMap = std::map<std::vector<int>, Localized>;

SideMap localize(const Element& el, const BasisSpec& spec) {
  SideMap out;
  for (const auto& d : enumerate_basis(el.shape, spec)) {
    auto [key, sign] = global_key(d, el);
    out.emplace(std::move(key), Localized{d, sign});
  }
  return out;
}

std::string describe_key(const BasisSpec& spec, const std::vector<int>& key) {
  return to_string(BasisDescriptor{spec.family, spec.k, key, spec.rot});
}

const Facet& interior_facet(const MeshComplex& mesh, int facet) {
  if (facet < 0 || facet >= static_cast<int>(mesh.facets().size())) throw Error(ErrorKind::Contract, "facet id out of range");
  const Facet& f = mesh.facet(facet);
  if (!f.interior()) throw Error(ErrorKind::Contract, "facet " + std::to_string(facet) + " is on the boundary");
  return f;
}

void record(JumpReport& r, DescriptorJump entry) {
  if (r.worst.empty() || entry.jump > r.max_jump) {
    r.max_jump = entry.jump;
    r.worst = entry.descriptor;
  }
  r.entries.push_back(std::move(entry));
}

JumpReport descriptor_jumps(const MeshComplex& mesh, int facet, const BasisSpec& spec, const std::vector<Vec>& samples,
                            TraceKind expected, const char* caller) {
  const Facet& f = interior_facet(mesh, facet);
  const TraceKind kind = trace_kind_for(mesh.dimension(), spec);
  if (kind != expected) {
    throw Error(ErrorKind::Contract, std::string(caller) + " does not apply to " + to_string(spec));
  }
  const FacetFrame frame = facet_frame(f);
  const int e[2] = {f.sides[0].element, f.sides[1].element};
  const Element* el[2] = {&mesh.element(e[0]), &mesh.element(e[1])};
  const SideMap side[2] = {localize(*el[0], spec), localize(*el[1], spec)};

  std::vector<CoordinateSet> cs[2];
  for (const Vec& x : samples)
    for (int s = 0; s < 2; ++s) cs[s].push_back(wachspress(el[s]->shape, x));

  auto trace = [&](int s, const Localized& l, std::size_t sample) {
    FieldSample u = evaluate(l.local, cs[s][sample]);
    u.value *= l.sign;
    return trace_of(u, frame, kind);
  };

  JumpReport r;
  r.facet = facet;
  r.trace = kind;
  r.spec = spec;

  for (const auto& [key, loc] : side[0]) {
    const auto other = side[1].find(key);
    DescriptorJump entry{describe_key(spec, key), other != side[1].end(), e[0], 0.0};
    for (std::size_t a = 0; a < samples.size(); ++a) {
      const Vec t0 = trace(0, loc, a);
      const double j = entry.shared ? (t0 - trace(1, other->second, a)).norm() : t0.norm();
      entry.jump = std::max(entry.jump, j);
    }
    if (entry.shared) entry.element = -1;
    record(r, std::move(entry));
  }
  for (const auto& [key, loc] : side[1]) {
    if (side[0].count(key)) continue;
    DescriptorJump entry{describe_key(spec, key), false, e[1], 0.0};
    for (std::size_t a = 0; a < samples.size(); ++a) entry.jump = std::max(entry.jump, trace(1, loc, a).norm());
    record(r, std::move(entry));
  }
  return r;
}

double tuple_coefficient(std::uint64_t seed, const std::vector<int>& key) {
  std::uint64_t s = seed;
  for (int id : key) s = SampleStream::derive(s, static_cast<std::uint64_t>(id));
  return SampleStream(s).uniform(-1.0, 1.0);
}

}  // namespace

JumpReport tangential_jump(const MeshComplex& mesh, int facet, const BasisSpec& spec, const std::vector<Vec>& samples) {
  return descriptor_jumps(mesh, facet, spec, samples, TraceKind::Tangential, "tangential_jump");
}

JumpReport normal_jump(const MeshComplex& mesh, int facet, const BasisSpec& spec, const std::vector<Vec>& samples) {
  return descriptor_jumps(mesh, facet, spec, samples, TraceKind::Normal, "normal_jump");
}

JumpReport random_span_jump(const MeshComplex& mesh, int facet, const BasisSpec& spec, std::uint64_t seed,
                            const std::vector<Vec>& samples, bool mismatch) {
  const Facet& f = interior_facet(mesh, facet);
  const TraceKind kind = trace_kind_for(mesh.dimension(), spec);
  const FacetFrame frame = facet_frame(f);

  JumpReport r;
  r.facet = facet;
  r.trace = kind;
  r.spec = spec;

  std::vector<Vec> traces[2];
  for (int s = 0; s < 2; ++s) {
    const Element& el = mesh.element(f.sides[static_cast<std::size_t>(s)].element);
    const std::uint64_t stream = (mismatch && s == 1) ? SampleStream::derive(seed, 0x6d69736d61746368ULL) : seed;
    std::vector<std::pair<BasisDescriptor, double>> terms;
    for (const auto& [key, loc] : localize(el, spec)) terms.emplace_back(loc.local, loc.sign * tuple_coefficient(stream, key));

    for (const Vec& x : samples) {
      const CoordinateSet cs = wachspress(el.shape, x);
      FieldSample u = evaluate(terms.front().first, cs);
      u.value.setZero();
      for (const auto& [d, c] : terms) u.value += c * evaluate(d, cs).value;
      traces[s].push_back(trace_of(u, frame, kind));
    }
  }

  DescriptorJump entry{"span:seed=" + std::to_string(seed) + (mismatch ? ":mismatched" : ""), true, -1, 0.0};
  for (std::size_t a = 0; a < samples.size(); ++a) entry.jump = std::max(entry.jump, (traces[0][a] - traces[1][a]).norm());
  record(r, std::move(entry));
  return r;
}

JumpReport hat_value_jump(const MeshComplex& mesh, int facet, const std::vector<Vec>& samples) {
  const Facet& f = interior_facet(mesh, facet);
  const int e0 = f.sides[0].element;
  const int e1 = f.sides[1].element;
  std::vector<int> ids = mesh.element(e0).global_ids;
  ids.insert(ids.end(), mesh.element(e1).global_ids.begin(), mesh.element(e1).global_ids.end());
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());

  JumpReport r;
  r.facet = facet;
  r.trace = TraceKind::Value;
  r.spec = {Family::P, 0, false};
  for (int g : ids) {
    DescriptorJump entry{"hat:" + std::to_string(g), true, -1, 0.0};
    for (const Vec& x : samples) {
      entry.jump = std::max(entry.jump, std::abs(hat_evaluate(mesh, e0, g, x).value - hat_evaluate(mesh, e1, g, x).value));
    }
    record(r, std::move(entry));
  }
  return r;
}

}  // namespace gbc
