#include <gtest/gtest.h>

#include "repsmooth/catalog.hpp"
#include "repsmooth/cohomology.hpp"
#include "repsmooth/deform.hpp"
#include "repsmooth/error.hpp"
#include "repsmooth/lie.hpp"
#include "repsmooth/linalg.hpp"

using namespace repsmooth;

namespace {

AlgebraPresentation pres(const char* name) { return *load(name).presentation; }

std::vector<Mat> random_combination(const Subspace& s, std::size_t m, std::size_t n, Rng& rng) {
  std::uniform_int_distribution<int> dist(-2, 2);
  Vec v(m * n * n);
  for (const auto& b : s.basis) {
    const Rational c = dist(rng);
    for (std::size_t k = 0; k < v.size(); ++k) v[k] += c * b[k];
  }
  return as_matrices(v, m, n);
}

RepPoint diag_pair() { return RepPoint({Mat{{1, 0}, {0, 2}}, Mat{{3, 0}, {0, 4}}}); }

}  // namespace

TEST(Tangent, Examples) {
  EXPECT_EQ(tangent_vectors(pres("free-2"), RepPoint::zero(2, 2)).dim, 8u);
  EXPECT_EQ(tangent_vectors(pres("fat-point"), RepPoint::zero(1, 1)).dim, 1u);
  EXPECT_EQ(tangent_vectors(pres("commuting"), diag_pair()).dim, 6u);
  const auto a = pres("commuting");
  EXPECT_EQ(tangent_vectors(a, diag_pair()).basis, derivation_space(a, diag_pair()).basis);
  EXPECT_THROW(tangent_vectors(pres("fat-point"), RepPoint({Mat{{1}}})), NotOnScheme);
}

TEST(Lift, FreeAlwaysLiftsWithZeros) {
  Rng rng(1);
  const auto a = pres("free-2");
  const RepPoint x({Mat{{1, 2}, {3, 4}}, Mat{{0, 1}, {1, 0}}});
  const auto d = random_combination(tangent_vectors(a, x), 2, 2, rng);
  const auto r = integrate(a, x, d, 10);
  EXPECT_EQ(r.achieved_order, 10u);
  EXPECT_FALSE(r.obstruction.has_value());
  for (std::size_t s = 2; s < 10; ++s)
    for (std::size_t l = 0; l < 2; ++l) EXPECT_TRUE(r.arc.coefficient(s, l).is_zero());
}

TEST(Lift, FatPointObstructedAtOrderTwo) {
  const auto a = pres("fat-point");
  const RepPoint x = RepPoint::zero(1, 1);
  const auto step = lift_step(a, first_order(x, {Mat{{1}}}));
  ASSERT_TRUE(std::holds_alternative<ObstructionResidual>(step));
  const auto& obs = std::get<ObstructionResidual>(step);
  EXPECT_EQ(obs.order, 2u);
  ASSERT_EQ(obs.residual.size(), 1u);
  EXPECT_EQ(obs.residual[0], (Mat{{1}}));
  EXPECT_TRUE(obs.linearization_span.empty());

  const auto r = integrate(a, x, {Mat{{1}}}, 3);
  EXPECT_EQ(r.achieved_order, 2u);
  ASSERT_TRUE(r.obstruction.has_value());
  // Soundness: every Ext^2 backend sees a nonzero group here.
  const auto entry = load("fat-point");
  EXPECT_GT(*ext2_resolution(*entry.resolution, a, x).e2, 0u);
  const FDAlgebra& b = entry.fd_model->algebra;
  EXPECT_GT(h_bar(b, Bimodule::character(Vec{1, 0}), 2), 0u);
}

TEST(Lift, ZeroTangentOfFatPointIntegrates) {
  const auto r = integrate(pres("fat-point"), RepPoint::zero(1, 1), {Mat{{0}}}, 6);
  EXPECT_EQ(r.achieved_order, 6u);
}

TEST(Lift, CommutingPlaneNeverObstructs) {
  // k[x,y] at n = 1: e2 = 1 but the point is regular.
  const auto a = pres("commuting");
  for (const RepPoint& x : {RepPoint::zero(2, 1), RepPoint({Mat{{2}}, Mat{{-1}}})}) {
    EXPECT_EQ(ext2_koszul(2, x), 1u);
    for (const auto& v : tangent_vectors(a, x).basis) {
      const auto r = integrate(a, x, as_matrices(v, 2, 1), 6);
      EXPECT_EQ(r.achieved_order, 6u);
    }
  }
}

TEST(Lift, CommutingDiagonalPairRandomTangent) {
  Rng rng(9);
  const auto a = pres("commuting");
  const auto d = random_combination(tangent_vectors(a, diag_pair()), 2, 2, rng);
  const auto r = integrate(a, diag_pair(), d, 6);
  EXPECT_EQ(r.achieved_order, 6u);
  r.arc.validate(a);
}

TEST(Lift, Sl2IrrepsLiftAllBasisTangents) {
  const auto a = pres("usl2");
  const LieStructure g = LieStructure::sl2();
  for (std::size_t dim = 2; dim <= 4; ++dim) {
    const RepPoint x(sl2_irrep(dim));
    EXPECT_EQ(*ce_report(g, x).e2, 0u);
    for (const auto& v : tangent_vectors(a, x).basis) {
      const auto r = integrate(a, x, as_matrices(v, 3, dim), 6);
      EXPECT_EQ(r.achieved_order, 6u) << dim;
    }
  }
}

TEST(Deformation, OrderTwoIsAffineOverTangents) {
  const auto a = pres("commuting");
  const auto t = tangent_vectors(a, diag_pair());
  Vec sum = t.basis[0];
  for (std::size_t k = 0; k < sum.size(); ++k) sum[k] += t.basis[1][k];
  EXPECT_NO_THROW(first_order(diag_pair(), as_matrices(sum, 2, 2)).validate(a));
  // An off-diagonal entry in one coordinate only breaks [X, Y] = 0 at order 1.
  std::vector<Mat> bad{Mat{{0, 1}, {0, 0}}, Mat(2, 2)};
  EXPECT_THROW(first_order(diag_pair(), bad).validate(a), ValidationError);
  EXPECT_THROW(integrate(a, diag_pair(), bad, 3), ValidationError);
}

TEST(Deformation, MalformedInputRejected) {
  const auto a = pres("commuting");
  TruncatedDeformation d{diag_pair(), 3, {}};
  EXPECT_THROW(lift_step(a, d), ValidationError);
}
