#include "test_helpers.hpp"

#include <gbc/corpus.hpp>
#include <gbc/error.hpp>
#include <gbc/random.hpp>
#include <gbc/reproduction.hpp>

#include <cmath>

using namespace gbc;
using gbc::test::v2;
using gbc::test::v3;

namespace {

double coeff_of(const CoefficientVector& cv, std::vector<int> indices, bool rot = false) {
  for (std::size_t a = 0; a < cv.size(); ++a)
    if (cv.basis[a].indices == indices && cv.basis[a].rot == rot) return cv.coeffs[a];
  ADD_FAILURE() << "descriptor not found";
  return NAN;
}

std::vector<Polytope> shapes(int n) {
  if (n == 2) return {reference_triangle(), unit_square(), regular_pentagon(),
                      Polytope::polygon({v2(0, 0), v2(2, -0.3), v2(3.1, 0.8), v2(2.7, 2.2), v2(1, 2.6), v2(-0.4, 1.3)})};
  return {reference_tetrahedron(), unit_cube(), skewed_hexahedron(), triangular_prism(), square_pyramid()};
}

}  // namespace

TEST(Coefficients, GradPairConstantOnTriangle) {
  Vec c = v2(1.0, 0.0);
  const CoefficientVector cv = coefficients_for(PolyField::constant(c), reference_triangle(), {Family::P, 1});
  ASSERT_EQ(cv.size(), 6u);
  EXPECT_DOUBLE_EQ(coeff_of(cv, {0, 1}), 1.0);
  EXPECT_DOUBLE_EQ(coeff_of(cv, {1, 0}), -1.0);
  EXPECT_DOUBLE_EQ(coeff_of(cv, {0, 2}), 0.0);
  EXPECT_DOUBLE_EQ(coeff_of(cv, {1, 2}), -1.0);
}

TEST(Coefficients, WhitneyEdgeConstantOnSquare) {
  const CoefficientVector cv = coefficients_for(PolyField::constant(v2(0.0, 1.0)), unit_square(), {Family::Pminus, 1});
  ASSERT_EQ(cv.size(), 6u);
  EXPECT_DOUBLE_EQ(coeff_of(cv, {0, 3}), 1.0);
  EXPECT_DOUBLE_EQ(coeff_of(cv, {1, 2}), 1.0);
  EXPECT_DOUBLE_EQ(coeff_of(cv, {0, 1}), 0.0);
  EXPECT_DOUBLE_EQ(coeff_of(cv, {0, 2}), 1.0);
}

TEST(Coefficients, ScalarLinearIsVertexValues) {
  const Polytope p = regular_pentagon();
  const Vec a = v2(0.3, -1.1);
  const CoefficientVector cv = coefficients_for(PolyField::scalar_linear(a), p, {Family::P, 0});
  for (int i = 0; i < 5; ++i) EXPECT_DOUBLE_EQ(cv.coeffs[i], a.dot(p.vertex(i)));
}

TEST(Coefficients, UnsupportedTargets) {
  auto kind = [](auto&& fn) {
    try {
      fn();
    } catch (const Error& e) {
      return e.kind();
    }
    return ErrorKind::Internal;
  };
  // symmetric matrix field is outside the trimmed 1-form span
  Mat sym(2, 2);
  sym << 1, 2, 2, 3;
  EXPECT_EQ(kind([&] { coefficients_for(PolyField::linear(sym), unit_square(), {Family::Pminus, 1}); }),
            ErrorKind::UnsupportedTarget);
  EXPECT_EQ(kind([] { coefficients_for(PolyField::scalar_one(2), unit_square(), {Family::Pminus, 2}); }),
            ErrorKind::UnsupportedTarget);
  EXPECT_EQ(kind([] { coefficients_for(PolyField::scalar_one(3), unit_cube(), {Family::P, 3}); }),
            ErrorKind::UnsupportedTarget);
}

TEST(Reproduction, IdentityCasesEveryShape) {
  for (int n : {2, 3}) {
    for (const Polytope& p : shapes(n)) {
      const auto xs = sample_interior(p, 100, 42);
      for (const ReproductionCase& c : identity_cases(n)) {
        const ResidualReport r = verify_reproduction(p, c.spec, c.target, xs);
        EXPECT_LT(r.max_residual, 1e-12) << c.id << " v=" << p.num_vertices();
        EXPECT_GE(r.worst_sample, 0);
      }
    }
  }
}

TEST(Reproduction, LinearCasesEveryShape) {
  for (int n : {2, 3}) {
    for (const Polytope& p : shapes(n)) {
      const auto xs = sample_interior(p, 60, 7);
      for (const ReproductionCase& c : linear_cases(n, 42, 5)) {
        const ResidualReport r = verify_reproduction(p, c.spec, c.target, xs);
        EXPECT_LT(r.max_residual, 1e-12) << c.id << " v=" << p.num_vertices();
      }
    }
  }
}

TEST(Reproduction, IdentityCaseIds) {
  EXPECT_EQ(identity_cases(2).size(), 5u);
  EXPECT_EQ(identity_cases(3).size(), 4u);
  const auto lin = linear_cases(3, 42, 5);
  EXPECT_EQ(lin.size(), 20u);
  EXPECT_EQ(lin[0].id.back(), '0');
  // same seed, same payloads
  EXPECT_EQ(linear_cases(3, 42, 5)[3].target.matrix, lin[3].target.matrix);
}

TEST(Reproduction, WrongTargetLeavesResidual) {
  // coefficients for c, checked against c + (1e-3, 0)
  const Polytope p = regular_pentagon();
  const CoefficientVector cv = coefficients_for(PolyField::constant(v2(0.5, 0.25)), p, {Family::P, 1});
  double worst = 0.0;
  for (const Vec& x : sample_interior(p, 20, 1)) {
    worst = std::max(worst, field_distance(combine(cv, wachspress(p, x)), FieldSample::vector(v2(0.501, 0.25))));
  }
  EXPECT_NEAR(worst, 1e-3, 1e-12);
}

TEST(ExpandToP, WhitneyCombinationUnchanged) {
  for (int n : {2, 3}) {
    for (const Polytope& p : shapes(n)) {
      for (int k = 1; k <= n; ++k) {
        CoefficientVector w{enumerate_basis(p, {Family::Pminus, k}), {}};
        SampleStream s(static_cast<std::uint64_t>(17 * k + n));
        for (std::size_t a = 0; a < w.basis.size(); ++a) w.coeffs.push_back(s.uniform(-1, 1));
        const CoefficientVector full = expand_to_p(w, p.num_vertices(), n);
        for (const Vec& x : sample_interior(p, 10, 3)) {
          const CoordinateSet cs = wachspress(p, x);
          EXPECT_LT(field_distance(combine(w, cs), combine(full, cs)), 1e-12) << "n=" << n << " k=" << k;
        }
      }
    }
  }
}

TEST(Span, TopWhitneyContainsConstants) {
  for (const Polytope& p : {regular_pentagon(), unit_square()}) {
    const auto xs = sample_interior(p, 40, 42);
    const SpanResult r = span_contains(p, {Family::Pminus, 2}, PolyField::scalar_one(2), xs);
    EXPECT_LT(r.residual, 1e-10);
    EXPECT_GE(r.rank, 1);
  }
  const Polytope c = unit_cube();
  const auto xs = sample_interior(c, 600, 42);
  EXPECT_LT(span_contains(c, {Family::P, 3}, PolyField::scalar_linear(v3(1, 1, 1)), xs).residual, 1e-10);
}

TEST(Span, QuadraticRejected) {
  const Polytope p = unit_square();
  const auto xs = sample_interior(p, 40, 42);
  const SpanResult r = span_contains(
      p, {Family::P, 0}, [](const Vec& x) { return FieldSample::scalar(x[0] * x[0]); }, xs);
  EXPECT_GT(r.residual, 1e-3);
}

TEST(Span, TooFewSamplesIsContract) {
  const Polytope p = unit_cube();
  try {
    span_contains(p, {Family::P, 3}, PolyField::scalar_one(3), sample_interior(p, 5, 1));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::Contract);
  }
}
