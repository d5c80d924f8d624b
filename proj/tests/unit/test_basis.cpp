#include "test_helpers.hpp"

#include <gbc/basis.hpp>
#include <gbc/corpus.hpp>
#include <gbc/counting.hpp>
#include <gbc/error.hpp>

using namespace gbc;
using gbc::test::v2;
using gbc::test::v3;

namespace {

BasisDescriptor D(Family f, std::vector<int> idx, bool rot = false) {
  const int k = static_cast<int>(idx.size()) - 1;
  return {f, k, std::move(idx), rot};
}

Vec value(const BasisDescriptor& d, const Polytope& p, const Vec& x) { return evaluate(d, wachspress(p, x)).value; }

}  // namespace

TEST(Basis, EnumerationSizes) {
  // v = 5 polygon
  EXPECT_EQ(enumerate_basis(5, 2, {Family::P, 0}).size(), 5u);
  EXPECT_EQ(enumerate_basis(5, 2, {Family::P, 1}).size(), 20u);
  EXPECT_EQ(enumerate_basis(5, 2, {Family::P, 1, true}).size(), 20u);
  EXPECT_EQ(enumerate_basis(5, 2, {Family::Pminus, 1}).size(), 10u);
  EXPECT_EQ(enumerate_basis(5, 2, {Family::P, 2}).size(), 30u);
  EXPECT_EQ(enumerate_basis(5, 2, {Family::Pminus, 2}).size(), 10u);
  // v = 8 polyhedron
  EXPECT_EQ(enumerate_basis(8, 3, {Family::P, 3}).size(), 280u);
  EXPECT_EQ(enumerate_basis(8, 3, {Family::Pminus, 3}).size(), 70u);
}

TEST(Basis, EnumerationIsCanonical) {
  const auto w = enumerate_basis(4, 3, {Family::Pminus, 2});
  ASSERT_EQ(w.size(), 4u);
  EXPECT_EQ(w[0].indices, (std::vector<int>{0, 1, 2}));
  EXPECT_EQ(w[3].indices, (std::vector<int>{1, 2, 3}));
  for (const auto& d : enumerate_basis(5, 3, {Family::P, 2})) {
    EXPECT_LT(d.indices[1], d.indices[2]);
    EXPECT_NE(d.indices[0], d.indices[1]);
    EXPECT_NE(d.indices[0], d.indices[2]);
  }
}

TEST(Basis, BadSpecsThrow) {
  auto kind = [](auto&& fn) {
    try {
      fn();
    } catch (const Error& e) {
      return e.kind();
    }
    return ErrorKind::Internal;
  };
  EXPECT_EQ(kind([] { enumerate_basis(4, 2, {Family::P, 3}); }), ErrorKind::Domain);
  EXPECT_EQ(kind([] { enumerate_basis(4, 3, {Family::P, 1, true}); }), ErrorKind::Contract);
  EXPECT_EQ(kind([] { enumerate_basis(4, 2, {Family::P, 2, true}); }), ErrorKind::Contract);
}

TEST(Basis, AllSpecs) {
  const auto s2 = all_specs(2);
  ASSERT_EQ(s2.size(), 7u);
  EXPECT_EQ(s2[0], (BasisSpec{Family::P, 0, false}));
  EXPECT_EQ(s2[2], (BasisSpec{Family::P, 1, true}));
  EXPECT_EQ(all_specs(3).size(), 7u);
}

TEST(Basis, DescriptorText) {
  EXPECT_EQ(to_string(D(Family::Pminus, {0, 1})), "W:0,1");
  EXPECT_EQ(to_string(D(Family::P, {0, 1}, true)), "P:0,1:rot");
  EXPECT_EQ(to_string(D(Family::P, {2, 0, 1})), "P:2,0,1");
}

TEST(Basis, WhitneyEdgeAtTriangleBarycenter) {
  const Vec w = value(D(Family::Pminus, {0, 1}), reference_triangle(), v2(1.0 / 3, 1.0 / 3));
  test::expect_vec_near(w, v2(2.0 / 3, 1.0 / 3), 1e-15);
  const Vec r = value(D(Family::Pminus, {0, 1}, true), reference_triangle(), v2(1.0 / 3, 1.0 / 3));
  test::expect_vec_near(r, v2(-1.0 / 3, 2.0 / 3), 1e-15);
}

TEST(Basis, TetGradientCross) {
  const Vec u = value(D(Family::P, {0, 1, 2}), reference_tetrahedron(), v3(0.25, 0.25, 0.25));
  test::expect_vec_near(u, v3(0, 0, 0.25), 1e-15);
}

TEST(Basis, TopWhitneyFormsOnSimplices) {
  // on the reference triangle W_012 is the constant 1, on the reference
  // tetrahedron W_0123 carries the 3! factor and equals 6
  for (const Vec& x : sample_interior(reference_triangle(), 10, 3))
    EXPECT_NEAR(value(D(Family::Pminus, {0, 1, 2}), reference_triangle(), x)[0], 1.0, 1e-14);
  for (const Vec& x : sample_interior(reference_tetrahedron(), 10, 3))
    EXPECT_NEAR(value(D(Family::Pminus, {0, 1, 2, 3}), reference_tetrahedron(), x)[0], 6.0, 1e-13);
}

TEST(Basis, WhitneyAntisymmetry) {
  const Polytope p = regular_pentagon();
  const Vec x = v2(0.1, -0.2);
  test::expect_vec_near(value(D(Family::Pminus, {3, 1}), p, x), -value(D(Family::Pminus, {1, 3}), p, x), 1e-15);
  test::expect_vec_near(value(D(Family::Pminus, {2, 2}), p, x), Vec::Zero(2), 0.0);

  const Polytope c = skewed_hexahedron();
  const Vec y = c.vertex_centroid();
  const Vec w012 = value(D(Family::Pminus, {0, 1, 2}), c, y);
  test::expect_vec_near(value(D(Family::Pminus, {1, 0, 2}), c, y), -w012, 1e-15);
  test::expect_vec_near(value(D(Family::Pminus, {1, 2, 0}), c, y), w012, 1e-15);
  test::expect_vec_near(value(D(Family::P, {4, 2, 1}), c, y), -value(D(Family::P, {4, 1, 2}), c, y), 1e-15);
}

TEST(Basis, SimplexRecoveryForEveryFamily) {
  for (const Polytope& p : {reference_triangle(), reference_tetrahedron()}) {
    const auto xs = sample_interior(p, 50, 42);
    for (const BasisSpec& spec : all_specs(p.dimension())) {
      for (const BasisDescriptor& d : enumerate_basis(p, spec)) {
        for (const Vec& x : xs) {
          const FieldSample a = evaluate(d, wachspress(p, x));
          const FieldSample b = whitney_simplex_reference(d, p, x);
          ASSERT_EQ(a.kind, b.kind);
          test::expect_vec_near(a.value, b.value, 1e-12);
        }
      }
    }
  }
}

TEST(Basis, SimplexRecoveryOnSkewedTriangle) {
  const Polytope t = Polytope::polygon({v2(0.3, -0.2), v2(2.1, 0.4), v2(0.7, 1.9)});
  for (const Vec& x : sample_interior(t, 20, 5)) {
    for (const BasisSpec& spec : all_specs(2))
      for (const BasisDescriptor& d : enumerate_basis(t, spec))
        test::expect_vec_near(evaluate(d, wachspress(t, x)).value, whitney_simplex_reference(d, t, x).value, 1e-12);
  }
}

TEST(Basis, RotIsRotation) {
  const Polytope p = regular_pentagon();
  const Vec x = v2(-0.2, 0.15);
  for (const auto& d : enumerate_basis(p, {Family::P, 1, false})) {
    BasisDescriptor r = d;
    r.rot = true;
    test::expect_vec_near(value(r, p, x), rot(value(d, p, x)), 0.0);
  }
}

TEST(Basis, EnumerationMatchesCounts) {
  for (const Polytope& p : {reference_triangle(), unit_square(), regular_pentagon(), reference_tetrahedron(),
                            unit_cube(), triangular_prism(), square_pyramid()}) {
    for (const CountRecord& c : count_all(p)) {
      EXPECT_EQ(static_cast<long>(enumerate_basis(p, {c.family, c.k, false}).size()), c.constructed);
    }
  }
}
