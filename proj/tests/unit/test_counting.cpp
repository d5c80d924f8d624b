#include "test_helpers.hpp"

#include <gbc/corpus.hpp>
#include <gbc/counting.hpp>
#include <gbc/error.hpp>

using namespace gbc;

namespace {

std::tuple<long, long, long> triple(const CountRecord& r) { return {r.constructed, r.boundary, r.polynomial}; }

}  // namespace

TEST(Binomial, Values) {
  EXPECT_EQ(binomial(8, 4), 70);
  EXPECT_EQ(binomial(5, 0), 1);
  EXPECT_EQ(binomial(3, 4), 0);
}

TEST(Count2d, Pentagon) {
  EXPECT_EQ(triple(count_2d(5, 5, 1, Family::P)), std::make_tuple(20L, 10L, 6L));
  EXPECT_EQ(triple(count_2d(5, 5, 1, Family::Pminus)), std::make_tuple(10L, 5L, 3L));
  EXPECT_EQ(triple(count_2d(5, 5, 2, Family::P)), std::make_tuple(30L, 0L, 3L));
}

TEST(Count2d, TriangleAndSquare) {
  EXPECT_EQ(triple(count_2d(3, 3, 1, Family::Pminus)), std::make_tuple(3L, 3L, 3L));
  EXPECT_EQ(triple(count_2d(4, 4, 2, Family::Pminus)), std::make_tuple(4L, 0L, 1L));
  EXPECT_EQ(triple(count_2d(3, 3, 0, Family::P)), std::make_tuple(3L, 3L, 3L));
}

TEST(Count3d, Hexahedron) {
  const Polytope c = unit_cube();
  EXPECT_EQ(triple(count(c, 1, Family::P)), std::make_tuple(56L, 48L, 12L));
  EXPECT_EQ(triple(count(c, 2, Family::P)), std::make_tuple(168L, 72L, 12L));
  EXPECT_EQ(triple(count(c, 2, Family::Pminus)), std::make_tuple(56L, 24L, 4L));
  const CountRecord trimmed = count(c, 1, Family::Pminus);
  EXPECT_EQ(triple(trimmed), std::make_tuple(28L, 24L, 6L));
  ASSERT_TRUE(trimmed.note.has_value());
  EXPECT_NE(trimmed.note->find("20"), std::string::npos);
  EXPECT_FALSE(count(c, 1, Family::P).note.has_value());
}

TEST(Count3d, SkewedHexahedronIsFlaggedToo) {
  EXPECT_TRUE(count(skewed_hexahedron(), 1, Family::Pminus).note.has_value());
  EXPECT_FALSE(count(triangular_prism(), 1, Family::Pminus).note.has_value());
}

TEST(Count3d, Tetrahedron) {
  const Polytope t = reference_tetrahedron();
  EXPECT_EQ(triple(count(t, 1, Family::Pminus)), std::make_tuple(6L, 6L, 6L));
  EXPECT_EQ(triple(count(t, 2, Family::Pminus)), std::make_tuple(4L, 4L, 4L));
  EXPECT_EQ(triple(count(t, 1, Family::P)), std::make_tuple(12L, 12L, 12L));
  EXPECT_EQ(triple(count(t, 3, Family::Pminus)), std::make_tuple(1L, 0L, 1L));
}

TEST(Count3d, PrismAndPyramidFaceSums) {
  // prism faces 3,3,4,4,4; pyramid faces 4,3,3,3,3
  EXPECT_EQ(count(triangular_prism(), 2, Family::Pminus).boundary, 1 + 1 + 4 + 4 + 4);
  EXPECT_EQ(count(square_pyramid(), 1, Family::Pminus).boundary, 6 + 4 * 3 - 8);
}

TEST(Count3d, TopologyChecks) {
  EXPECT_THROW(count_3d(8, 12, {4, 4, 4, 4, 4}, 1, Family::P), Error);       // Euler
  EXPECT_THROW(count_3d(8, 12, {4, 4, 4, 4, 4, 3, 1}, 1, Family::P), Error);  // Euler again
  EXPECT_THROW(count_3d(4, 6, {3, 3, 3, 4}, 1, Family::P), Error);           // face sum
  EXPECT_THROW(count_2d(4, 5, 1, Family::P), Error);
}

TEST(CountAll, Shape) {
  const auto rows = count_all(unit_cube());
  ASSERT_EQ(rows.size(), 7u);
  EXPECT_EQ(rows[0].k, 0);
  EXPECT_EQ(triple(rows[0]), std::make_tuple(8L, 8L, 4L));
  EXPECT_EQ(rows[6].family, Family::Pminus);
  EXPECT_EQ(rows[6].k, 3);
}
