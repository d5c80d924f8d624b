#include <gbc/mesh.hpp>

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

namespace gbc {

int Element::local_of(int global_id) const {
  const auto it = std::find(global_ids.begin(), global_ids.end(), global_id);
  return it == global_ids.end() ? -1 : static_cast<int>(it - global_ids.begin());
}

std::vector<int> MeshComplex::interior_facets() const {
  std::vector<int> ids;
  for (const Facet& f : facets_)
    if (f.interior()) ids.push_back(f.id);
  return ids;
}

namespace {

[[noreturn]] void reject(int element, std::vector<Violation> violations, const std::vector<int>& globals) {
  const Violation& first = violations.front();
  std::ostringstream os;
  os << "element " << element << ": " << to_string(first.kind);
  const bool vertex_kind = first.kind == ViolationKind::NonConvexVertex;
  if (vertex_kind && first.index >= 0 && first.index < static_cast<int>(globals.size())) {
    os << " at vertex " << globals[static_cast<std::size_t>(first.index)];
  } else if (first.index >= 0 && !vertex_kind) {
    os << " (local index " << first.index << ")";
  }
  if (!first.detail.empty()) os << ": " << first.detail;
  throw ValidationError(element, std::move(violations), os.str());
}

struct LocalElement {
  std::vector<int> globals;
  Polytope shape;
};

LocalElement localize(const MeshDescription& d, int e) {
  const ElementSpec& spec = d.elements[static_cast<std::size_t>(e)];
  const int nv = static_cast<int>(d.vertices.size());
  auto check_id = [&](int g) {
    if (g < 0 || g >= nv) {
      reject(e, {{ViolationKind::BadFace, -1, "vertex id " + std::to_string(g) + " out of range"}}, {});
    }
  };

  std::vector<int> globals;
  if (d.dimension == 2) {
    for (int g : spec.vertices) check_id(g);
    globals = spec.vertices;
    std::vector<int> sorted = globals;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
      reject(e, {{ViolationKind::BadFace, -1, "repeated vertex id"}}, globals);
    }
    std::vector<Vec> pts;
    for (int g : globals) pts.push_back(d.vertices[static_cast<std::size_t>(g)]);
    return {globals, Polytope::polygon(std::move(pts))};
  }

  std::vector<std::vector<int>> faces;
  for (const auto& face : spec.faces) {
    std::vector<int> local;
    for (int g : face) {
      check_id(g);
      auto it = std::find(globals.begin(), globals.end(), g);
      if (it == globals.end()) {
        globals.push_back(g);
        it = globals.end() - 1;
      }
      local.push_back(static_cast<int>(it - globals.begin()));
    }
    faces.push_back(std::move(local));
  }
  std::vector<Vec> pts;
  for (int g : globals) pts.push_back(d.vertices[static_cast<std::size_t>(g)]);
  return {globals, Polytope::polyhedron(std::move(pts), std::move(faces))};
}

}  // namespace

MeshComplex build_complex(const MeshDescription& description) {
  if (description.dimension != 2 && description.dimension != 3) {
    throw Error(ErrorKind::Contract, "mesh dimension must be 2 or 3");
  }
  for (const Vec& v : description.vertices) {
    if (v.size() != description.dimension) throw Error(ErrorKind::Contract, "vertex has wrong dimension");
  }

  MeshComplex mesh;
  mesh.dimension_ = description.dimension;
  mesh.vertices_ = description.vertices;

  for (int e = 0; e < static_cast<int>(description.elements.size()); ++e) {
    LocalElement local = localize(description, e);
    ValidationResult check;
    try {
      check = validate_polytope(local.shape);
    } catch (const Error& err) {
      throw ValidationError(e, {}, "element " + std::to_string(e) + ": " + std::string(to_string(err.kind())) +
                                       ": " + err.what());
    }
    if (!check.ok()) reject(e, std::move(check.violations), local.globals);
    mesh.elements_.push_back({std::move(local.shape), std::move(local.globals)});
  }

  std::map<std::vector<int>, int> by_ids;
  for (int e = 0; e < static_cast<int>(mesh.elements_.size()); ++e) {
    const Element& el = mesh.elements_[static_cast<std::size_t>(e)];
    for (int lf = 0; lf < el.shape.num_facets(); ++lf) {
      std::vector<int> ids;
      for (int i : el.shape.facet(lf)) ids.push_back(el.global_ids[static_cast<std::size_t>(i)]);
      std::vector<int> key = ids;
      std::sort(key.begin(), key.end());

      auto [it, inserted] = by_ids.try_emplace(key, static_cast<int>(mesh.facets_.size()));
      if (inserted) {
        Facet f;
        f.id = it->second;
        f.vertex_ids = key;
        for (int g : ids) f.points.push_back(mesh.vertices_[static_cast<std::size_t>(g)]);
        mesh.facets_.push_back(std::move(f));
      }
      Facet& f = mesh.facets_[static_cast<std::size_t>(it->second)];
      if (f.sides.size() == 2) {
        std::ostringstream os;
        os << "facet " << f.id << " is shared by more than two elements (element " << e << ")";
        throw Error(ErrorKind::NonManifold, os.str());
      }
      f.sides.push_back({e, lf, el.shape.facet_normal(lf)});
    }
  }

  for (const Facet& f : mesh.facets_) {
    if (!f.interior()) continue;
    const double gap = (f.sides[0].outward_normal + f.sides[1].outward_normal).norm();
    if (gap > 1e-6) {
      std::ostringstream os;
      os << "facet " << f.id << ": elements " << f.sides[0].element << " and " << f.sides[1].element
         << " share vertex ids but lie on the same side";
      throw Error(ErrorKind::Inconsistent, os.str());
    }
  }
  return mesh;
}

MeshDescription describe(const Polytope& p) {
  MeshDescription d;
  d.dimension = p.dimension();
  d.vertices.assign(p.vertices().begin(), p.vertices().end());
  ElementSpec spec;
  if (p.dimension() == 2) {
    spec.vertices.resize(static_cast<std::size_t>(p.num_vertices()));
    std::iota(spec.vertices.begin(), spec.vertices.end(), 0);
  } else {
    spec.faces = p.facets();
  }
  d.elements.push_back(std::move(spec));
  return d;
}

FacetFrame facet_frame(const Facet& f) {
  if (f.sides.empty() || f.points.size() < 2) throw Error(ErrorKind::Contract, "facet has no incident element");
  FacetFrame frame;
  frame.normal = f.sides.front().outward_normal;
  if (frame.normal.norm() == 0.0) throw Error(ErrorKind::Degenerate, "facet has zero measure");

  if (frame.normal.size() == 2) {
    frame.tangents.push_back(rot(frame.normal));
    return frame;
  }
  Vec t = f.points[1] - f.points[0];
  t -= t.dot(frame.normal) * frame.normal;
  const double len = t.norm();
  if (len == 0.0) throw Error(ErrorKind::Degenerate, "facet edge has zero length");
  t /= len;
  frame.tangents.push_back(t);
  frame.tangents.push_back(cross(frame.normal, t));
  return frame;
}

std::vector<Vec> sample_facet(const Facet& f, std::size_t count, std::uint64_t seed) {
  return sample_convex_combinations(f.points, count, seed);
}

}  // namespace gbc
