#include <gtest/gtest.h>

#include "hypertoric/abelian_group.hpp"
#include "hypertoric/error.hpp"
#include "hypertoric/int_matrix.hpp"

namespace hypertoric {
namespace {

TEST(IntMatrix, KeepsShapeWithZeroRows) {
  IntMatrix m(0, 5);
  EXPECT_EQ(m.rows(), 0u);
  EXPECT_EQ(m.cols(), 5u);
  EXPECT_NE(m, IntMatrix(0, 0));
  EXPECT_EQ(m.transpose().rows(), 5u);
}

TEST(IntMatrix, RaggedRowsThrow) {
  std::vector<IntVector> rows{{1, 2}, {3}};
  try {
    IntMatrix::from_rows(rows);
    FAIL() << "expected ShapeMismatch";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::ShapeMismatch);
  }
}

TEST(IntMatrix, ProductAndTranspose) {
  const IntMatrix a = IntMatrix::from_rows({{1, 2}, {3, 4}});
  const IntMatrix b = IntMatrix::from_rows({{0, 1}, {1, 0}});
  EXPECT_EQ(a * b, IntMatrix::from_rows({{2, 1}, {4, 3}}));
  EXPECT_EQ(a.transpose(), IntMatrix::from_rows({{1, 3}, {2, 4}}));
  EXPECT_EQ(a * IntVector({1, 1}), (IntVector{3, 7}));
}

TEST(IntMatrix, SelectOutOfRangeThrows) {
  const IntMatrix a = IntMatrix::identity(2);
  std::vector<std::size_t> idx{2};
  EXPECT_THROW(a.select_columns(idx), Error);
  EXPECT_THROW(a.select_rows(idx), Error);
}

TEST(IntMatrix, ToStringAndMaxAbs) {
  const IntMatrix a = IntMatrix::from_rows({{1, -7}, {0, 3}});
  EXPECT_EQ(a.to_string(), "1 -7\n0 3");
  EXPECT_EQ(a.max_abs(), 7);
}

TEST(IntMatrix, Int64Bounds) {
  Integer big("9223372036854775808");
  EXPECT_FALSE(fits_int64(big));
  EXPECT_TRUE(fits_int64(big - 1));
  EXPECT_EQ(to_int64(Integer(-42)), -42);
}

TEST(AbelianGroup, NormalizesDiagonal) {
  const auto g = AbelianGroup::from_diagonal({Integer(4), Integer(6), Integer(1), Integer(0)});
  EXPECT_EQ(g.free_rank(), 1u);
  ASSERT_EQ(g.torsion().size(), 2u);
  EXPECT_EQ(g.torsion()[0], 2);
  EXPECT_EQ(g.torsion()[1], 12);
  EXPECT_FALSE(g.order().has_value());
  EXPECT_EQ(g.to_string(), "Z x Z/2 x Z/12");
}

TEST(AbelianGroup, Trivial) {
  const auto g = AbelianGroup::from_diagonal({Integer(1), Integer(-1)});
  EXPECT_TRUE(g.is_trivial());
  EXPECT_EQ(g.to_string(), "0");
  EXPECT_EQ(*g.order(), 1);
}

TEST(AbelianGroup, CoprimeFactorsMerge) {
  const auto g = AbelianGroup::from_diagonal({Integer(2), Integer(3), Integer(5)});
  ASSERT_EQ(g.torsion().size(), 1u);
  EXPECT_EQ(g.torsion()[0], 30);
}

}  // namespace
}  // namespace hypertoric
