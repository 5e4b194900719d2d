#include <gtest/gtest.h>

#include <random>

#include "corpus.hpp"
#include "hypertoric/linalg.hpp"
#include "oracles.hpp"

namespace hypertoric {
namespace {

using linalg::cokernel;
using linalg::hnf_column;
using linalg::kernel_basis;
using linalg::snf;

bool is_column_hermite(const IntMatrix& H) {
  std::size_t col = 0;
  for (std::size_t i = 0; i < H.rows(); ++i) {
    if (col >= H.cols() || H(i, col) == 0) {
      // No pivot in this row: everything from `col` onward must vanish.
      for (std::size_t j = col; j < H.cols(); ++j)
        if (H(i, j) != 0) return false;
      continue;
    }
    if (H(i, col) < 0) return false;
    for (std::size_t j = 0; j < col; ++j)
      if (H(i, j) < 0 || H(i, j) >= H(i, col)) return false;
    for (std::size_t j = col + 1; j < H.cols(); ++j)
      if (H(i, j) != 0) return false;
    ++col;
  }
  return true;
}

bool is_smith_diagonal(const IntMatrix& S) {
  Integer prev = 1;
  bool seen_zero = false;
  for (std::size_t i = 0; i < S.rows(); ++i)
    for (std::size_t j = 0; j < S.cols(); ++j) {
      if (i != j && S(i, j) != 0) return false;
      if (i != j) continue;
      const Integer& d = S(i, i);
      if (d < 0) return false;
      if (d == 0) {
        seen_zero = true;
        continue;
      }
      if (seen_zero || d % prev != 0) return false;
      prev = d;
    }
  return true;
}

bool is_unit(const Integer& det) { return det == 1 || det == -1; }

TEST(Hnf, Identity) {
  const auto r = hnf_column(IntMatrix::identity(3));
  EXPECT_EQ(r.H, IntMatrix::identity(3));
  EXPECT_EQ(r.U, IntMatrix::identity(3));
}

TEST(Hnf, SmallExample) {
  const IntMatrix M = IntMatrix::from_rows({{2, 4}, {6, 8}});
  const auto r = hnf_column(M);
  EXPECT_EQ(M * r.U, r.H);
  EXPECT_TRUE(is_unit(oracle::det_rational(r.U)));
  EXPECT_TRUE(is_column_hermite(r.H));
  EXPECT_EQ(r.H(0, 0), 2);  // gcd of the first row
  EXPECT_EQ(oracle::det_rational(r.H), 8);
}

TEST(Hnf, ZeroMatrix) {
  const IntMatrix M(2, 3);
  const auto r = hnf_column(M);
  EXPECT_TRUE(r.H.is_zero());
  EXPECT_EQ(r.U.rows(), 3u);
  EXPECT_TRUE(is_unit(oracle::det_rational(r.U)));
}

TEST(Hnf, RandomPropertiesAndIdempotence) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t r = 1 + rng() % 5, c = 1 + rng() % 6;
    const IntMatrix M = testing::random_matrix(r, c, -9, 9, rng);
    const auto h = hnf_column(M);
    ASSERT_EQ(M * h.U, h.H);
    ASSERT_TRUE(is_unit(oracle::det_rational(h.U)));
    ASSERT_TRUE(is_column_hermite(h.H)) << M.to_string() << "\n->\n" << h.H.to_string();
    ASSERT_EQ(hnf_column(h.H).H, h.H);
  }
}

TEST(Snf, Examples) {
  EXPECT_EQ(snf(IntMatrix::from_rows({{2, 4}, {6, 8}})).S, IntMatrix::from_rows({{2, 0}, {0, 4}}));
  EXPECT_EQ(snf(IntMatrix::identity(4)).S, IntMatrix::identity(4));
  EXPECT_EQ(snf(IntMatrix(2, 2)).S, IntMatrix(2, 2));
}

TEST(Snf, RandomProperties) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t r = 1 + rng() % 5, c = 1 + rng() % 5;
    const IntMatrix M = testing::random_matrix(r, c, -20, 20, rng);
    const auto s = snf(M);
    ASSERT_EQ(s.P * M * s.Q, s.S);
    ASSERT_TRUE(is_unit(oracle::det_rational(s.P)));
    ASSERT_TRUE(is_unit(oracle::det_rational(s.Q)));
    ASSERT_TRUE(is_smith_diagonal(s.S)) << s.S.to_string();
    const auto diag = linalg::smith_diagonal(M);
    for (std::size_t i = 0; i < diag.size(); ++i) ASSERT_EQ(diag[i], s.S(i, i));
  }
}

TEST(Snf, LargeEntriesDoNotOverflow) {
  std::mt19937_64 rng(13);
  const IntMatrix M = testing::random_matrix(8, 8, -100, 100, rng);
  const auto s = snf(M);
  EXPECT_EQ(s.P * M * s.Q, s.S);
  Integer prod = 1;
  for (std::size_t i = 0; i < 8; ++i) prod *= s.S(i, i);
  EXPECT_EQ(abs(prod), abs(oracle::det_rational(M)));
}

TEST(Kernel, Examples) {
  const IntMatrix K = kernel_basis(IntMatrix::from_rows({{1, 1, 1}}));
  EXPECT_EQ(K.rows(), 3u);
  EXPECT_EQ(K.cols(), 2u);
  EXPECT_TRUE((IntMatrix::from_rows({{1, 1, 1}}) * K).is_zero());
  EXPECT_TRUE(cokernel(K).free_rank() == 1 && cokernel(K).torsion().empty());

  const IntMatrix A = IntMatrix::from_rows({{1, 0, 0, -1}, {0, 1, 0, -1}, {0, 0, 1, -1}});
  const IntMatrix k = kernel_basis(A);
  ASSERT_EQ(k.cols(), 1u);
  const Integer s = k(0, 0);
  EXPECT_TRUE(s == 1 || s == -1);
  for (std::size_t i = 0; i < 4; ++i) EXPECT_EQ(k(i, 0), s);

  const IntMatrix e = kernel_basis(IntMatrix::identity(3));
  EXPECT_EQ(e.rows(), 3u);
  EXPECT_EQ(e.cols(), 0u);
}

TEST(Kernel, RandomSaturated) {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t r = 1 + rng() % 4, c = 1 + rng() % 6;
    const IntMatrix M = testing::random_matrix(r, c, -4, 4, rng);
    const IntMatrix K = kernel_basis(M);
    ASSERT_TRUE((M * K).is_zero());
    ASSERT_EQ(K.cols(), c - oracle::rank_q(M));
    ASSERT_EQ(oracle::rank_q(K), K.cols());
    for (const auto& d : linalg::smith_diagonal(K)) ASSERT_EQ(d, 1);
  }
}

TEST(Rank, Examples) {
  EXPECT_EQ(linalg::rank(IntMatrix::identity(5)), 5u);
  EXPECT_EQ(linalg::rank(IntMatrix::from_rows({{1, 1, 1}})), 1u);
  EXPECT_EQ(linalg::rank(IntMatrix(3, 4)), 0u);
  EXPECT_EQ(linalg::rank(IntMatrix(0, 4)), 0u);
}

TEST(Rank, AgreesWithRationalElimination) {
  std::mt19937_64 rng(19);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t r = 1 + rng() % 6, c = 1 + rng() % 6;
    IntMatrix M = testing::random_matrix(r, c, -3, 3, rng);
    if (r > 1 && rng() % 2) {
      for (std::size_t j = 0; j < c; ++j) M(r - 1, j) = M(0, j) * 2 - M(r - 2, j);
    }
    ASSERT_EQ(linalg::rank(M), oracle::rank_q(M));
  }
}

TEST(Determinant, AgreesWithRationalElimination) {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + rng() % 6;
    const IntMatrix M = testing::random_matrix(n, n, -9, 9, rng);
    ASSERT_EQ(linalg::determinant(M), oracle::det_rational(M));
  }
}

TEST(Unimodular, Examples) {
  EXPECT_TRUE(linalg::is_unimodular(IntMatrix::from_rows({{1, 1, 1, 1, 1}})));
  EXPECT_TRUE(linalg::is_unimodular(IntMatrix::from_rows({{1, 0, -1}, {0, 1, -1}})));
  EXPECT_FALSE(linalg::is_unimodular(IntMatrix::from_rows({{2}})));
  // Rank deficient.
  EXPECT_FALSE(linalg::is_unimodular(IntMatrix::from_rows({{1, 1}, {1, 1}})));
  const auto bad = linalg::find_bad_minor(IntMatrix::from_rows({{1, 1, 0}, {0, 1, 2}}));
  ASSERT_TRUE(bad.has_value());
  EXPECT_EQ(*bad, (std::vector<std::size_t>{0, 2}));
  EXPECT_FALSE(linalg::find_bad_minor(IntMatrix::from_rows({{1, 0, -1}, {0, 1, -1}})));
}

TEST(Unimodular, TallMatrixUsesRows) {
  const IntMatrix B = IntMatrix::from_rows({{1, 0}, {0, 1}, {1, 3}});
  const auto bad = linalg::find_bad_minor(B);
  ASSERT_TRUE(bad.has_value());
  EXPECT_EQ(*bad, (std::vector<std::size_t>{0, 2}));
}

TEST(SolveIntegral, Examples) {
  const IntMatrix ones = IntMatrix::from_rows({{1, 1, 1}});
  const auto x = linalg::solve_integral(ones, {Integer(1)});
  ASSERT_TRUE(x.has_value());
  EXPECT_EQ(ones * *x, IntVector{Integer(1)});
  EXPECT_FALSE(linalg::solve_integral(IntMatrix::from_rows({{2, 0}, {0, 2}}), {1, 0}));
  const IntVector v{3, -4, 5};
  EXPECT_EQ(linalg::solve_integral(IntMatrix::identity(3), v), v);
}

TEST(SolveIntegral, RandomBySubstitution) {
  std::mt19937_64 rng(29);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t r = 1 + rng() % 4, c = 1 + rng() % 5;
    const IntMatrix M = testing::random_matrix(r, c, -5, 5, rng);
    IntVector x0(c);
    for (auto& v : x0) v = static_cast<long>(rng() % 7) - 3;
    const IntVector b = M * x0;
    const auto x = linalg::solve_integral(M, b);
    ASSERT_TRUE(x.has_value());
    ASSERT_EQ(M * *x, b);
  }
}

TEST(Cokernel, Examples) {
  const auto g = cokernel(IntMatrix::from_rows({{2, 0, 0, 1}, {0, 2, 0, 1}, {0, 0, 2, 1}}));
  EXPECT_EQ(g, AbelianGroup::from_diagonal({Integer(2), Integer(2)}));
  EXPECT_TRUE(cokernel(IntMatrix::identity(3)).is_trivial());
  EXPECT_EQ(cokernel(IntMatrix::from_rows({{7}})).to_string(), "Z/7");
  EXPECT_EQ(cokernel(IntMatrix(2, 0)).free_rank(), 2u);
}

TEST(Cokernel, AgreesWithCosetEnumeration) {
  std::mt19937_64 rng(31);
  int compared = 0;
  for (int trial = 0; trial < 600 && compared < 150; ++trial) {
    const std::size_t r = 1 + rng() % 3, c = r + rng() % 3;
    const IntMatrix M = testing::random_matrix(r, c, -6, 6, rng);
    const auto brute = oracle::cokernel_by_cosets(M, 10000);
    if (!brute) continue;
    ++compared;
    const auto g = cokernel(M);
    ASSERT_EQ(g.free_rank(), 0u);
    ASSERT_EQ(*g.order(), brute->order) << M.to_string();
    ASSERT_EQ(g.torsion(), brute->invariant_factors) << M.to_string();
  }
  EXPECT_GE(compared, 100);
}

TEST(RowLattice, CanonicalUnderUnimodularChange) {
  std::mt19937_64 rng(37);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t r = 1 + rng() % 4, c = r + rng() % 3;
    const IntMatrix M = testing::random_matrix(r, c, -5, 5, rng);
    const IntMatrix P = testing::random_unimodular(r, rng);
    ASSERT_EQ(linalg::row_lattice_canonical(P * M), linalg::row_lattice_canonical(M));
  }
}

}  // namespace
}  // namespace hypertoric
