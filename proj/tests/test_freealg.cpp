#include <gtest/gtest.h>

#include <random>

#include "repsmooth/cpoly.hpp"
#include "repsmooth/error.hpp"
#include "repsmooth/ncpoly.hpp"

using namespace repsmooth;

namespace {

NCPoly random_poly(std::mt19937_64& rng, std::uint32_t m) {
  NCPoly f(m);
  const int terms = 1 + static_cast<int>(rng() % 4);
  for (int t = 0; t < terms; ++t) {
    NCWord w(rng() % 4);
    for (auto& l : w) l = static_cast<std::uint32_t>(rng() % m);
    Rational c(static_cast<long>(rng() % 7) - 3, 1 + static_cast<long>(rng() % 2));
    c.canonicalize();
    f.add_term(w, c);
  }
  return f;
}

std::vector<Mat> random_point(std::mt19937_64& rng, std::uint32_t m, std::size_t n) {
  std::vector<Mat> out;
  for (std::uint32_t l = 0; l < m; ++l) {
    Mat x(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) x(i, j) = static_cast<long>(rng() % 5) - 2;
    out.push_back(x);
  }
  return out;
}

}  // namespace

TEST(NCPoly, ParseAndPrint) {
  const NCPoly f = NCPoly::parse("3/2*x1*x2*x1 - x2 + 1", 2);
  EXPECT_EQ(to_string(f), "3/2*x1*x2*x1 - x2 + 1");
  EXPECT_EQ(to_string(NCPoly::parse("x1^2 - 2*x2", 2)), "x1*x1 - 2*x2");
  EXPECT_EQ(to_string(NCPoly(2)), "0");
  EXPECT_EQ(to_string(NCPoly::parse("x1*x2 - x1*x2", 2)), "0");
  EXPECT_THROW(NCPoly::parse("x3", 2), ParseError);
  EXPECT_THROW(NCPoly::parse("x1 +", 2), ParseError);
  EXPECT_THROW(NCPoly::parse("y1", 2), ParseError);
}

TEST(NCPoly, Arithmetic) {
  const NCPoly x = NCPoly::generator(2, 0);
  const NCPoly y = NCPoly::generator(2, 1);
  const NCPoly one = NCPoly::constant(2, 1);
  EXPECT_EQ(nc_mul(x, one), x);
  EXPECT_NE(nc_mul(x, y), nc_mul(y, x));
  const NCPoly s = nc_add(x, y);
  EXPECT_EQ(nc_mul(s, s), NCPoly::parse("x1*x1 + x1*x2 + x2*x1 + x2*x2", 2));
}

TEST(Evaluate, Examples) {
  const NCPoly comm = NCPoly::parse("x1*x2 - x2*x1", 2);
  const std::vector<Mat> diag{Mat{{1, 0}, {0, 2}}, Mat{{3, 0}, {0, 4}}};
  EXPECT_TRUE(evaluate(comm, diag).is_zero());
  const std::vector<Mat> ef{Mat{{0, 1}, {0, 0}}, Mat{{0, 0}, {1, 0}}};
  EXPECT_EQ(evaluate(comm, ef), (Mat{{1, 0}, {0, -1}}));
  EXPECT_EQ(evaluate(NCPoly::constant(2, 1), ef), Mat::identity(2));
  const std::vector<Mat> bad{Mat::identity(2), Mat::identity(3)};
  EXPECT_THROW(evaluate(comm, bad), DimensionMismatch);
}

TEST(Evaluate, HomomorphismRandom) {
  std::mt19937_64 rng(3);
  for (int t = 0; t < 100; ++t) {
    const std::uint32_t m = 1 + static_cast<std::uint32_t>(rng() % 3);
    const auto f = random_poly(rng, m);
    const auto g = random_poly(rng, m);
    const auto x = random_point(rng, m, 1 + rng() % 3);
    EXPECT_EQ(evaluate(nc_mul(f, g), x), evaluate(f, x) * evaluate(g, x));
    EXPECT_EQ(evaluate(nc_add(f, g), x), evaluate(f, x) + evaluate(g, x));
  }
}

TEST(Leibniz, Examples) {
  const Mat a{{1, 2}, {3, 4}};
  const Mat e{{0, 1}, {5, 0}};
  const std::vector<Mat> xa{a};
  const std::vector<Mat> de{e};
  EXPECT_EQ(leibniz(NCPoly::generator(1, 0), xa, de), e);
  EXPECT_EQ(leibniz(NCPoly::parse("x1^2", 1), xa, de), a * e + e * a);
  EXPECT_TRUE(leibniz(NCPoly::constant(1, 7), xa, de).is_zero());
  const std::vector<Mat> x{Mat{{1, 0}, {0, 2}}, Mat{{3, 0}, {0, 4}}};
  const std::vector<Mat> d{Mat{{1, 2}, {0, 1}}, Mat{{0, 1}, {1, 1}}};
  EXPECT_EQ(leibniz(NCPoly::parse("x1*x2 - x2*x1", 2), x, d), d[0] * x[1] + x[0] * d[1] - d[1] * x[0] - x[1] * d[0]);
}

TEST(Leibniz, ProductRuleRandom) {
  std::mt19937_64 rng(5);
  for (int t = 0; t < 100; ++t) {
    const std::uint32_t m = 1 + static_cast<std::uint32_t>(rng() % 3);
    const std::size_t n = 1 + rng() % 3;
    const auto f = random_poly(rng, m);
    const auto g = random_poly(rng, m);
    const auto x = random_point(rng, m, n);
    const auto d = random_point(rng, m, n);
    EXPECT_EQ(leibniz(nc_mul(f, g), x, d), evaluate(f, x) * leibniz(g, x, d) + leibniz(f, x, d) * evaluate(g, x));
  }
}

TEST(Symbolic, Examples) {
  const GenericLayout layout{2, 2};
  const auto gen = symbolic_entries(NCPoly::generator(2, 0), 2);
  for (std::uint32_t i = 0; i < 2; ++i)
    for (std::uint32_t j = 0; j < 2; ++j) EXPECT_EQ(gen[i * 2 + j], CPoly::variable(layout.index(0, i, j)));
  const auto comm = symbolic_entries(NCPoly::parse("x1*x2 - x2*x1", 2), 2);
  // xi_{1,1,2} xi_{2,2,1} - xi_{2,1,2} xi_{1,2,1}
  const CPoly expected = CPoly::variable(layout.index(0, 0, 1)) * CPoly::variable(layout.index(1, 1, 0)) -
                         CPoly::variable(layout.index(1, 0, 1)) * CPoly::variable(layout.index(0, 1, 0));
  EXPECT_EQ(comm[0], expected);
  const VarNamer name = [&](std::uint32_t v) { return layout.name(v); };
  EXPECT_EQ(to_string(comm[0], name), "xi_{1,1,2}*xi_{2,2,1} - xi_{1,2,1}*xi_{2,1,2}");
  const auto one = symbolic_entries(NCPoly::constant(2, 1), 2);
  EXPECT_EQ(one[0], CPoly::constant(1));
  EXPECT_TRUE(one[1].is_zero());
  EXPECT_EQ(one[3], CPoly::constant(1));
}

TEST(Symbolic, CommutingSquareRandom) {
  std::mt19937_64 rng(9);
  for (int t = 0; t < 60; ++t) {
    const std::uint32_t m = 1 + static_cast<std::uint32_t>(rng() % 3);
    const std::uint32_t n = 1 + static_cast<std::uint32_t>(rng() % 3);
    const auto f = random_poly(rng, m);
    const auto x = random_point(rng, m, n);
    const auto entries = symbolic_entries(f, n);
    const Vec values = flatten_point(x);
    const Mat direct = evaluate(f, x);
    for (std::uint32_t i = 0; i < n; ++i)
      for (std::uint32_t j = 0; j < n; ++j) EXPECT_EQ(entries[i * n + j].evaluate(values), direct(i, j));
  }
}
