#include <gtest/gtest.h>

#include "repsmooth/error.hpp"
#include "repsmooth/linalg.hpp"
#include "repsmooth/repscheme.hpp"

using namespace repsmooth;

namespace {

AlgebraPresentation commuting() {
  const std::vector<std::string> rel{"x1*x2 - x2*x1"};
  return AlgebraPresentation::parse("commuting", 2, rel);
}

AlgebraPresentation weyl() {
  const std::vector<std::string> rel{"x1*x2 - x2*x1 - 1"};
  return AlgebraPresentation::parse("weyl-1", 2, rel);
}

RepPoint diag_pair() { return RepPoint({Mat{{1, 0}, {0, 2}}, Mat{{3, 0}, {0, 4}}}); }

}  // namespace

TEST(BuildVn, Free) {
  const auto v = build_vn(AlgebraPresentation::free(3), 2);
  EXPECT_TRUE(v.generators.empty());
  EXPECT_EQ(v.num_vars(), 12u);
}

TEST(BuildVn, CommutingN1FlagsZero) {
  const auto v = build_vn(commuting(), 1);
  ASSERT_EQ(v.generators.size(), 1u);
  EXPECT_TRUE(v.generators[0].zero);
  EXPECT_TRUE(v.generators[0].poly.is_zero());
}

TEST(BuildVn, CommutingN2) {
  const auto v = build_vn(commuting(), 2);
  ASSERT_EQ(v.generators.size(), 4u);
  const GenericLayout& l = v.layout;
  const CPoly expected = CPoly::variable(l.index(0, 0, 1)) * CPoly::variable(l.index(1, 1, 0)) -
                         CPoly::variable(l.index(1, 0, 1)) * CPoly::variable(l.index(0, 1, 0));
  EXPECT_EQ(v.generators[0].poly, expected);
  EXPECT_EQ(v.generators[0].relation, 0u);
  EXPECT_EQ(v.generators[3].row, 1u);
  EXPECT_EQ(v.generators[3].col, 1u);
  EXPECT_FALSE(v.generators[0].zero);
}

TEST(IsPoint, Examples) {
  EXPECT_TRUE(is_point(commuting(), diag_pair()));
  const RepPoint ef({Mat{{0, 1}, {0, 0}}, Mat{{0, 0}, {1, 0}}});
  EXPECT_FALSE(is_point(commuting(), ef));
  EXPECT_TRUE(is_point(AlgebraPresentation::free(2), ef));
  EXPECT_THROW(require_point(commuting(), ef), NotOnScheme);
  EXPECT_THROW(is_point(commuting(), RepPoint({Mat::identity(2)})), DimensionMismatch);
}

TEST(Tangent, Examples) {
  const RepPoint z = RepPoint::zero(3, 2);
  EXPECT_EQ(jacobian_tangent_dim(build_vn(AlgebraPresentation::free(3), 2), z), 12u);
  const RepPoint ab({Mat{{Rational(5, 3)}}, Mat{{-2}}});
  EXPECT_EQ(jacobian_tangent_dim(build_vn(commuting(), 1), ab), 2u);
  const auto v2 = build_vn(commuting(), 2);
  EXPECT_EQ(jacobian_rank(v2, diag_pair()), 2u);
  EXPECT_EQ(jacobian_tangent_dim(v2, diag_pair()), 6u);
  EXPECT_EQ(jacobian_tangent_dim(v2, RepPoint::zero(2, 2)), 8u);
  const RepPoint ef({Mat{{0, 1}, {0, 0}}, Mat{{0, 0}, {1, 0}}});
  EXPECT_THROW(jacobian_tangent_dim(v2, ef), NotOnScheme);
}

TEST(Jacobian, MatchesDifferenceQuotientOnPolynomials) {
  // For quadratic generators, g(X + tE) = g(X) + t J E + t^2 g(E) - exact check at t = 1 and t = 2.
  const auto v = build_vn(commuting(), 2);
  const RepPoint x({Mat{{1, 2}, {0, 1}}, Mat{{3, 1}, {0, 5}}});
  const Mat j = jacobian(v, x);
  const Vec base = flatten_point(x.span());
  for (std::uint32_t var = 0; var < v.num_vars(); ++var) {
    Vec p1 = base, p2 = base;
    p1[var] += 1;
    p2[var] += 2;
    for (std::size_t g = 0; g < v.generators.size(); ++g) {
      const Rational g0 = v.generators[g].poly.evaluate(base);
      const Rational g1 = v.generators[g].poly.evaluate(p1);
      const Rational g2 = v.generators[g].poly.evaluate(p2);
      // quadratic in t: derivative at 0 = (4 g1 - g2 - 3 g0) / 2
      EXPECT_EQ(j(g, var), (4 * g1 - g2 - 3 * g0) / 2);
    }
  }
}

TEST(DetectUnit, Weyl) {
  for (std::uint32_t n = 1; n <= 3; ++n) {
    const auto v = build_vn(weyl(), n);
    const auto cert = detect_unit(v, 0);
    ASSERT_TRUE(cert) << n;
    EXPECT_EQ(cert->value, -Rational(n));
    EXPECT_EQ(certificate_polynomial(v, *cert), CPoly::constant(-Rational(n)));
    // trace combination: the diagonal generators with coefficient 1
    EXPECT_EQ(cert->terms.size(), n);
    for (const auto& t : cert->terms) {
      EXPECT_EQ(t.coeff, 1);
      EXPECT_EQ(v.generators[t.generator].row, v.generators[t.generator].col);
    }
  }
}

TEST(DetectUnit, NoneForSchemesWithPoints) {
  EXPECT_FALSE(detect_unit(build_vn(AlgebraPresentation::free(2), 2), 3));
  EXPECT_FALSE(detect_unit(build_vn(commuting(), 2), 2));
  EXPECT_FALSE(detect_unit(build_vn(commuting(), 1), 1));
}

TEST(Truncate, FatPoint) {
  const std::vector<std::string> rel{"x1^2"};
  const auto a = AlgebraPresentation::parse("fat-point", 1, rel);
  const auto t = truncate(a, RepPoint({Mat{{0}}}), 4);
  // k[u]/(u^2)
  ASSERT_EQ(t.algebra.dim(), 2u);
  t.algebra.validate();
  EXPECT_EQ(t.algebra.c(1, 1, 0), 0);
  EXPECT_EQ(t.algebra.c(1, 1, 1), 0);
  EXPECT_EQ(t.eta[0](0, 0), (Vec{0, 1}));
}

TEST(Truncate, FreeLineAndCommutingPlane) {
  const auto t = truncate(AlgebraPresentation::free(1), RepPoint({Mat{{3}}}), 2);
  ASSERT_EQ(t.algebra.dim(), 2u);
  EXPECT_EQ(t.eta[0](0, 0), (Vec{3, 1}));
  const auto c = truncate(commuting(), RepPoint({Mat{{1}}, Mat{{2}}}), 3);
  EXPECT_EQ(c.algebra.dim(), 6u);  // 1, u1, u2, u1^2, u1u2, u2^2
  c.algebra.validate();
  EXPECT_TRUE(c.algebra.is_commutative());
}

TEST(Truncate, CommutingN2IsPointed) {
  const auto t = truncate(commuting(), diag_pair(), 2);
  // (I + m^2) / m^2 at a point with tangent dim 6 leaves 1 + 6 basis vectors.
  EXPECT_EQ(t.algebra.dim(), 7u);
  t.algebra.validate();
}
