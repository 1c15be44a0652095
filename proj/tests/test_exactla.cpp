#include <gtest/gtest.h>

#include <random>

#include "repsmooth/error.hpp"
#include "repsmooth/linalg.hpp"
#include "repsmooth/sparse.hpp"

using namespace repsmooth;

namespace {

Mat random_mat(std::mt19937_64& rng, std::size_t r, std::size_t c, int range, int zero_pct) {
  std::uniform_int_distribution<int> val(-range, range);
  std::uniform_int_distribution<int> pct(0, 99);
  Mat m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j)
      if (pct(rng) >= zero_pct) m(i, j) = Rational(val(rng), std::uniform_int_distribution<int>(1, 4)(rng));
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j).canonicalize();
  return m;
}

}  // namespace

TEST(Rational, ParseAndPrint) {
  EXPECT_EQ(to_string(parse_rational("6/4")), "3/2");
  EXPECT_EQ(to_string(parse_rational("-7")), "-7");
  EXPECT_EQ(to_string(parse_rational("0/5")), "0");
  EXPECT_THROW(parse_rational("4/-2"), ParseError);
  EXPECT_THROW(parse_rational("1/0"), ParseError);
  EXPECT_THROW(parse_rational("x"), ParseError);
  EXPECT_THROW(parse_rational(""), ParseError);
}

TEST(Rank, Examples) {
  EXPECT_EQ(rank(Mat::identity(2)), 2u);
  EXPECT_EQ(rank(Mat(3, 4)), 0u);
  EXPECT_EQ(rank(Mat{{1, 2}, {2, 4}}), 1u);
  EXPECT_EQ(rank(Mat(0, 3)), 0u);
}

TEST(Nullspace, Examples) {
  EXPECT_TRUE(nullspace(Mat::identity(2)).empty());
  EXPECT_EQ(nullspace(Mat(2, 3)).size(), 3u);
  const auto k = nullspace(Mat{{1, 1}});
  ASSERT_EQ(k.size(), 1u);
  EXPECT_EQ(k[0][0], -k[0][1]);
  EXPECT_NE(k[0][0], 0);
  EXPECT_EQ(nullspace(Mat(0, 2)).size(), 2u);
}

TEST(Solve, Examples) {
  const Vec b{3, 5};
  EXPECT_EQ(*solve(Mat::identity(2), b), b);
  const Mat row{{1, 1}};
  const Vec two{2};
  auto x = solve(row, two);
  ASSERT_TRUE(x);
  EXPECT_EQ(row * *x, two);
  EXPECT_FALSE(solve(Mat{{1}, {0}}, Vec{0, 1}));
  EXPECT_THROW(solve(row, Vec{1, 2}), DimensionMismatch);
}

TEST(Linalg, RankNullityRandom) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t r = 1 + rng() % 7;
    const std::size_t c = 1 + rng() % 7;
    Mat m = random_mat(rng, r, c, 3, 40);
    if (trial % 3 == 0 && r > 1)
      for (std::size_t j = 0; j < c; ++j) m(r - 1, j) = m(0, j) * Rational(2, 3) - m(r / 2, j);
    const auto k = nullspace(m);
    EXPECT_EQ(rank(m) + k.size(), c);
    for (const auto& v : k) EXPECT_TRUE(is_zero(m * v));
    Vec b(r);
    for (auto& e : b) e = Rational(static_cast<long>(rng() % 7) - 3);
    if (auto x = solve(m, b)) EXPECT_EQ(m * *x, b);
    // consistency of solve with rank of the augmented matrix
    Mat aug(r, c + 1);
    for (std::size_t i = 0; i < r; ++i) {
      for (std::size_t j = 0; j < c; ++j) aug(i, j) = m(i, j);
      aug(i, c) = b[i];
    }
    EXPECT_EQ(solve(m, b).has_value(), rank(aug) == rank(m));
  }
}

TEST(Linalg, SparseMatchesDense) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t r = 5 + rng() % 30;
    const std::size_t c = 5 + rng() % 30;
    const Mat m = random_mat(rng, r, c, 5, 85);
    std::vector<SparseRow> rows;
    for (std::size_t i = 0; i < r; ++i) rows.push_back(sparse_row(m.row(i)));
    EXPECT_EQ(sparse_rank(c, rows), dense_rank(m));
    EXPECT_EQ(echelon(m).rank(), dense_rank(m));
  }
}

TEST(Linalg, ColumnSpaceSpansImage) {
  const Mat m{{1, 2, 3}, {2, 4, 6}, {0, 1, 1}};
  const auto cs = column_space(m);
  EXPECT_EQ(cs.size(), 2u);
  EXPECT_EQ(rank(from_columns(cs, 3)), 2u);
}

TEST(Matrix, KronAndCommutator) {
  const Mat e{{0, 1}, {0, 0}};
  const Mat f{{0, 0}, {1, 0}};
  EXPECT_EQ(commutator(e, f), (Mat{{1, 0}, {0, -1}}));
  const Mat k = kron(Mat::identity(2), e);
  EXPECT_EQ(k.rows(), 4u);
  EXPECT_EQ(k(0, 1), 1);
  EXPECT_EQ(k(2, 3), 1);
  EXPECT_EQ(unflatten(flatten(e), 2, 2), e);
}
