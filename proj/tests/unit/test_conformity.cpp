#include "test_helpers.hpp"

#include <gbc/conformity.hpp>
#include <gbc/corpus.hpp>
#include <gbc/error.hpp>

using namespace gbc;
using gbc::test::v2;

namespace {

MeshComplex mesh(const std::string& name) { return build_complex(corpus_entry(name).mesh); }

int shared_facet(const MeshComplex& m) { return m.interior_facets().at(0); }

}  // namespace

TEST(TraceKind, Table) {
  EXPECT_EQ(trace_kind_for(2, {Family::P, 0}), TraceKind::Value);
  EXPECT_EQ(trace_kind_for(2, {Family::Pminus, 1}), TraceKind::Tangential);
  EXPECT_EQ(trace_kind_for(2, {Family::Pminus, 1, true}), TraceKind::Normal);
  EXPECT_EQ(trace_kind_for(3, {Family::P, 1}), TraceKind::Tangential);
  EXPECT_EQ(trace_kind_for(3, {Family::Pminus, 2}), TraceKind::Normal);
  EXPECT_THROW(trace_kind_for(3, {Family::P, 3}), Error);
  EXPECT_THROW(trace_kind_for(2, {Family::Pminus, 2}), Error);
}

TEST(Hat, ZeroOffElement) {
  const MeshComplex m = mesh("two-squares");
  const HatValue h = hat_evaluate(m, 1, 0, v2(1.5, 0.5));
  EXPECT_EQ(h.value, 0.0);
  EXPECT_EQ(h.gradient, Vec::Zero(2));
  EXPECT_NEAR(hat_evaluate(m, 0, 4, v2(0.5, 0.5)).value, 0.25, 1e-15);
}

TEST(Hat, SingleValuedAcrossFacets) {
  for (const char* name : {"two-squares", "square-pentagon", "two-cubes", "cube-prism"}) {
    const MeshComplex m = mesh(name);
    const Facet& f = m.facet(shared_facet(m));
    const JumpReport r = hat_value_jump(m, f.id, sample_facet(f, 20, 42));
    EXPECT_LT(r.max_jump, 1e-13) << name;
  }
}

TEST(Jumps, EveryFamilyConformsOnSharedFacets) {
  for (const char* name : {"two-squares", "square-pentagon", "two-cubes", "cube-prism"}) {
    const MeshComplex m = mesh(name);
    const Facet& f = m.facet(shared_facet(m));
    const auto xs = sample_facet(f, 20, 42);
    for (const BasisSpec& spec : all_specs(m.dimension())) {
      if (spec.k == 0 || spec.k == m.dimension()) continue;
      const TraceKind kind = trace_kind_for(m.dimension(), spec);
      const JumpReport r =
          kind == TraceKind::Normal ? normal_jump(m, f.id, spec, xs) : tangential_jump(m, f.id, spec, xs);
      EXPECT_LT(r.max_jump, 1e-12) << name << ' ' << to_string(spec) << " worst " << r.worst;
      EXPECT_FALSE(r.entries.empty());
      const JumpReport s = random_span_jump(m, f.id, spec, 42, xs);
      EXPECT_LT(s.max_jump, 1e-12) << name << ' ' << to_string(spec);
    }
  }
}

TEST(Jumps, OneSidedDescriptorsVanishOnFacet) {
  const MeshComplex m = mesh("two-squares");
  const Facet& f = m.facet(shared_facet(m));
  const JumpReport r = tangential_jump(m, f.id, {Family::P, 1}, sample_facet(f, 20, 42));
  int one_sided = 0, shared = 0;
  for (const auto& e : r.entries) {
    if (e.shared) {
      ++shared;
    } else {
      ++one_sided;
      EXPECT_LT(e.jump, 1e-12) << e.descriptor;
    }
  }
  // P k=1 on the shared edge {1, 4}: (1,4) and (4,1)
  EXPECT_EQ(shared, 2);
  EXPECT_GT(one_sided, 0);
}

TEST(Jumps, TraceMustMatchFamily) {
  const MeshComplex m = mesh("square-pentagon");
  const Facet& f = m.facet(shared_facet(m));
  const auto xs = sample_facet(f, 5, 42);
  EXPECT_THROW(tangential_jump(m, f.id, {Family::P, 1, true}, xs), Error);
  EXPECT_THROW(normal_jump(m, f.id, {Family::Pminus, 1}, xs), Error);
}

TEST(Jumps, RotTangentialComponentIsOneSided) {
  // rot(lambda_i grad lambda_j) with i on the facet and j off it: the normal
  // component vanishes on the facet but the tangential one does not
  const MeshComplex m = mesh("two-squares");
  const Facet& f = m.facet(shared_facet(m));
  const FacetFrame fr = facet_frame(f);
  const int e = f.sides[0].element;
  const BasisDescriptor d{Family::P, 1, {m.element(e).local_of(1), m.element(e).local_of(0)}, true};
  double normal = 0.0, tangential = 0.0;
  for (const Vec& x : sample_facet(f, 10, 42)) {
    const FieldSample u = evaluate(d, wachspress(m.element(e).shape, x));
    normal = std::max(normal, std::abs(trace_of(u, fr, TraceKind::Normal)[0]));
    tangential = std::max(tangential, std::abs(trace_of(u, fr, TraceKind::Tangential)[0]));
  }
  EXPECT_LT(normal, 1e-14);
  EXPECT_GT(tangential, 1e-2);
}

TEST(Jumps, MismatchedCoefficientsAreDetected) {
  const MeshComplex m = mesh("two-squares");
  const Facet& f = m.facet(shared_facet(m));
  const JumpReport r = random_span_jump(m, f.id, {Family::P, 1}, 42, sample_facet(f, 20, 42), true);
  EXPECT_GT(r.max_jump, 1e-3);
}

TEST(Boundary, OffFacetCoordinatesVanish) {
  for (const Polytope& p : {regular_pentagon(), skewed_hexahedron(), square_pyramid(), triangular_prism()}) {
    for (int f = 0; f < p.num_facets(); ++f) {
      std::vector<Vec> pts;
      for (int i : p.facet(f)) pts.push_back(p.vertex(i));
      const BoundaryReport r = boundary_vanishing_check(p, f, sample_convex_combinations(pts, 20, 42));
      EXPECT_TRUE(r.pass()) << "facet " << f << " value " << r.max_value << " tangential " << r.max_tangential
                            << " inward " << r.min_inward;
      EXPECT_GT(r.checked, 0);
    }
  }
}

TEST(Boundary, InteriorSamplesFail) {
  const Polytope p = unit_square();
  const BoundaryReport r = boundary_vanishing_check(p, 0, {v2(0.5, 0.5)});
  EXPECT_FALSE(r.pass());
  EXPECT_NEAR(r.max_value, 0.25, 1e-15);
}

TEST(Trace, Components) {
  FacetFrame fr{v2(1, 0), {v2(0, 1)}};
  const FieldSample u = FieldSample::vector(v2(3, -2));
  EXPECT_EQ(trace_of(u, fr, TraceKind::Tangential)[0], -2.0);
  EXPECT_EQ(trace_of(u, fr, TraceKind::Normal)[0], 3.0);
  EXPECT_EQ(trace_of(FieldSample::scalar(7.0), fr, TraceKind::Value)[0], 7.0);
}
