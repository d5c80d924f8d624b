#include "test_helpers.hpp"

#include <gbc/corpus.hpp>
#include <gbc/error.hpp>
#include <gbc/polytope.hpp>

#include <algorithm>
#include <cmath>

using namespace gbc;
using gbc::test::v2;
using gbc::test::v3;

namespace {

bool has(const ValidationResult& r, ViolationKind kind, int index = -2) {
  for (const auto& v : r.violations)
    if (v.kind == kind && (index == -2 || v.index == index)) return true;
  return false;
}

}  // namespace

TEST(Polytope, SquareBasics) {
  const Polytope sq = unit_square();
  EXPECT_EQ(sq.dimension(), 2);
  EXPECT_EQ(sq.num_facets(), 4);
  EXPECT_EQ(sq.num_edges(), 4);
  EXPECT_DOUBLE_EQ(sq.signed_measure(), 1.0);
  EXPECT_DOUBLE_EQ(sq.diameter(), std::sqrt(2.0));
  // edge (0,1) lies on y = 0, outward normal points down
  test::expect_vec_near(sq.facet_normal(0), v2(0, -1), 1e-15);
  EXPECT_DOUBLE_EQ(sq.facet_distance(0, v2(0.5, 0.25)), 0.25);
  EXPECT_TRUE(sq.contains(v2(1, 1)));
  EXPECT_FALSE(sq.contains(v2(1.01, 0.5)));
  EXPECT_TRUE(validate_polytope(sq).ok());
}

TEST(Polytope, CubeCombinatorics) {
  const Polytope c = unit_cube();
  EXPECT_EQ(c.num_vertices(), 8);
  EXPECT_EQ(c.num_edges(), 12);
  EXPECT_EQ(c.num_facets(), 6);
  EXPECT_NEAR(c.signed_measure(), 1.0, 1e-14);
  for (int i = 0; i < 8; ++i) EXPECT_EQ(c.vertex_star(i).size(), 3u);
  EXPECT_TRUE(validate_polytope(c).ok());
}

TEST(Polytope, PyramidApexHasFourFaceStar) {
  const Polytope p = square_pyramid();
  EXPECT_EQ(p.vertex_star(4).size(), 4u);
  EXPECT_TRUE(validate_polytope(p).ok());
  EXPECT_NEAR(p.signed_measure(), 1.0 / 3.0, 1e-14);
}

TEST(Polytope, NonConvexVertexIsNamed) {
  // vertex 2 is a reflex corner
  const Polytope p = Polytope::polygon({v2(0, 0), v2(2, 0), v2(1, 0.5), v2(2, 2), v2(0, 2)});
  const auto r = validate_polytope(p);
  EXPECT_FALSE(r.ok());
  EXPECT_TRUE(has(r, ViolationKind::NonConvexVertex, 2));
}

TEST(Polytope, CollinearCornerRejected) {
  const Polytope p = Polytope::polygon({v2(0, 0), v2(1, 0), v2(2, 0), v2(2, 1), v2(0, 1)});
  EXPECT_TRUE(has(validate_polytope(p), ViolationKind::NonConvexVertex, 1));
}

TEST(Polytope, ClockwiseRejected) {
  const Polytope p = Polytope::polygon({v2(0, 0), v2(0, 1), v2(1, 1), v2(1, 0)});
  EXPECT_TRUE(has(validate_polytope(p), ViolationKind::Orientation));
}

TEST(Polytope, ZeroAreaIsDegenerate) {
  const Polytope p = Polytope::polygon({v2(0, 0), v2(1, 1), v2(2, 2)});
  try {
    validate_polytope(p);
    FAIL() << "expected Degenerate";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::Degenerate);
  }
}

TEST(Polytope, PerturbedCubeFaceIsNonPlanar) {
  const Polytope cube = unit_cube();
  std::vector<Vec> vs(cube.vertices().begin(), cube.vertices().end());
  vs[6][2] += 1e-3;  // lifts one corner of the top face
  const std::vector<std::vector<int>> faces = cube.facets();
  const auto r = validate_polytope(Polytope::polyhedron(vs, faces));
  EXPECT_TRUE(has(r, ViolationKind::NonPlanarFace));
}

TEST(Polytope, InwardFaceWindingRejected) {
  const Polytope cube = unit_cube();
  std::vector<std::vector<int>> faces = cube.facets();
  std::reverse(faces[1].begin(), faces[1].end());
  std::vector<Vec> vs(cube.vertices().begin(), cube.vertices().end());
  const auto r = validate_polytope(Polytope::polyhedron(vs, faces));
  EXPECT_FALSE(r.ok());
}

TEST(Polytope, MissingFaceBreaksIncidence) {
  const Polytope cube = unit_cube();
  std::vector<std::vector<int>> faces = cube.facets();
  faces.pop_back();
  std::vector<Vec> vs(cube.vertices().begin(), cube.vertices().end());
  const auto r = validate_polytope(Polytope::polyhedron(vs, faces));
  EXPECT_TRUE(has(r, ViolationKind::BadEdgeIncidence) || has(r, ViolationKind::EulerCharacteristic));
}

TEST(Polytope, EveryCorpusShapeValidates) {
  for (const Polytope& p : {reference_triangle(), unit_square(), regular_pentagon(), reference_tetrahedron(),
                            unit_cube(), skewed_hexahedron(), triangular_prism(), square_pyramid()}) {
    EXPECT_TRUE(validate_polytope(p).ok());
    EXPECT_GT(p.signed_measure(), 0.0);
  }
}

TEST(Sampling, DeterministicAndInterior) {
  const Polytope p = regular_pentagon();
  const auto a = sample_interior(p, 50, 42);
  const auto b = sample_interior(p, 50, 42);
  const auto c = sample_interior(p, 50, 43);
  ASSERT_EQ(a.size(), 50u);
  test::expect_vec_near(a[0], p.vertex_centroid(), 0.0);
  bool differs = false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    EXPECT_EQ(a[i], b[i]);
    EXPECT_GT(p.boundary_distance(a[i]), 0.0);
    if (i > 0 && a[i] != c[i]) differs = true;
  }
  EXPECT_TRUE(differs);
}

TEST(Sampling, ConvexCombinationsStayInHull) {
  const std::vector<Vec> seg{v3(0, 0, 0), v3(1, 2, 3)};
  for (const Vec& x : sample_convex_combinations(seg, 20, 7)) {
    const double t = x[0];
    EXPECT_GT(t, 0.0);
    EXPECT_LT(t, 1.0);
    test::expect_vec_near(x, v3(t, 2 * t, 3 * t), 1e-15);
  }
}
