#include <gtest/gtest.h>

#include "repsmooth/catalog.hpp"
#include "repsmooth/cohomology.hpp"
#include "repsmooth/error.hpp"
#include "repsmooth/linalg.hpp"
#include "repsmooth/repscheme.hpp"
#include "repsmooth/sampler.hpp"

using namespace repsmooth;

namespace {

const AlgebraPresentation& commuting() {
  static const AlgebraPresentation a = *load("commuting").presentation;
  return a;
}

RepPoint diag_pair() { return RepPoint({Mat{{1, 0}, {0, 2}}, Mat{{3, 0}, {0, 4}}}); }

// Brute-force Hochschild H^2 from unnormalized cochains: C^i = Hom(B^{(x)i}, N),
// every coefficient an unknown, ranks of the full coboundary matrices.
std::size_t unnormalized_h(const FDAlgebra& b, const Bimodule& n, std::size_t degree) {
  const std::size_t d = b.dim(), p = n.dim;
  auto delta = [&](std::size_t k) {
    // C^k -> C^{k+1}, k in {0, 1, 2}
    std::size_t src = p, dst = p * d;
    for (std::size_t i = 0; i < k; ++i) src *= d;
    for (std::size_t i = 0; i < k; ++i) dst *= d;
    Mat m(dst, src);
    for (std::size_t col = 0; col < src; ++col) {
      // cochain f = basis vector: decode (args..., q)
      std::vector<std::size_t> args(k);
      std::size_t rest = col;
      const std::size_t q = rest % p;
      rest /= p;
      for (std::size_t i = k; i-- > 0;) {
        args[i] = rest % d;
        rest /= d;
      }
      auto f = [&](const std::vector<Vec>& xs) {
        // multilinear evaluation of the basis cochain
        Rational coef = 1;
        for (std::size_t i = 0; i < k; ++i) coef *= xs[i][args[i]];
        Vec out(p);
        out[q] = coef;
        return out;
      };
      std::vector<std::size_t> idx(k + 1, 0);
      for (std::size_t row = 0; row < dst / p; ++row) {
        std::size_t r = row;
        for (std::size_t i = k + 1; i-- > 0;) {
          idx[i] = r % d;
          r /= d;
        }
        std::vector<Vec> xs;
        for (auto i : idx) xs.push_back(b.basis(i));
        Vec acc = n.left_action(xs[0]) * f(std::vector<Vec>(xs.begin() + 1, xs.end()));
        for (std::size_t i = 0; i < k; ++i) {
          std::vector<Vec> ys;
          for (std::size_t j = 0; j < xs.size(); ++j) {
            if (j == i) {
              ys.push_back(b.mul(xs[i], xs[i + 1]));
              ++j;
            } else {
              ys.push_back(xs[j]);
            }
          }
          const Vec t = f(ys);
          for (std::size_t s = 0; s < p; ++s) acc[s] += (i % 2 == 0 ? -1 : 1) * t[s];
        }
        const Vec last = n.right_action(xs.back()) * f(std::vector<Vec>(xs.begin(), xs.end() - 1));
        for (std::size_t s = 0; s < p; ++s) acc[s] += (k % 2 == 0 ? -1 : 1) * last[s];
        for (std::size_t s = 0; s < p; ++s) m(row * p + s, col) = acc[s];
      }
    }
    return m;
  };
  std::size_t dims[3] = {p, p * d, p * d * d};
  std::size_t r[3];
  for (std::size_t k = 0; k <= degree; ++k) r[k] = rank(delta(k));
  if (degree == 0) return dims[0] - r[0];
  return dims[degree] - r[degree] - r[degree - 1];
}

}  // namespace

TEST(Ext0, Examples) {
  EXPECT_EQ(ext0(commuting(), diag_pair()).dim, 2u);
  const auto usl2 = load("usl2");
  EXPECT_EQ(ext0(*usl2.presentation, RepPoint(sl2_irrep(2))).dim, 1u);
  EXPECT_EQ(ext0(AlgebraPresentation::free(2), RepPoint::zero(2, 2)).dim, 4u);
  const RepPoint ef({Mat{{0, 1}, {0, 0}}, Mat{{0, 0}, {1, 0}}});
  EXPECT_THROW(ext0(commuting(), ef), NotOnScheme);
}

TEST(Derivations, Examples) {
  const RepPoint z = RepPoint::zero(3, 2);
  EXPECT_EQ(derivation_space(AlgebraPresentation::free(3), z).dim, 12u);
  EXPECT_EQ(ext1(AlgebraPresentation::free(3), z), 12u - 4u + 4u);
  const RepPoint x({Mat{{1, 1}, {0, 1}}, Mat{{0, 0}, {0, 2}}, Mat::identity(2)});
  EXPECT_EQ(ext1(AlgebraPresentation::free(3), x), 12u - 4u + ext0(AlgebraPresentation::free(3), x).dim);
  EXPECT_EQ(derivation_space(commuting(), diag_pair()).dim, 6u);
  EXPECT_EQ(ext1(commuting(), diag_pair()), 4u);
  const RepPoint ab({Mat{{2}}, Mat{{-1}}});
  EXPECT_EQ(derivation_space(commuting(), ab).dim, 2u);
  EXPECT_EQ(ext1(commuting(), ab), 2u);
  for (const auto& d : derivation_space(commuting(), diag_pair()).basis) {
    const std::vector<Mat> dm{unflatten(std::span(d).subspan(0, 4), 2, 2), unflatten(std::span(d).subspan(4, 4), 2, 2)};
    EXPECT_TRUE(leibniz(commuting().relations[0], diag_pair().span(), dm).is_zero());
  }
}

TEST(Bar, Examples) {
  const auto kz2 = load("kZ2");
  Rng rng(1);
  for (int t = 0; t < 3; ++t) {
    const Bimodule n = random_bimodule(*kz2.algebra, kz2.modules, rng);
    EXPECT_EQ(h_bar(*kz2.algebra, n, 1), 0u);
    EXPECT_EQ(h_bar(*kz2.algebra, n, 2), 0u);
  }
  const FDAlgebra kx2 = truncated_polynomial(2);
  const Bimodule triv = Bimodule::character(Vec{1, 0});
  EXPECT_EQ(h_bar(kx2, triv, 2), 1u);
  const auto k = load("k");
  EXPECT_EQ(h_bar(*k.algebra, Bimodule::character(Vec{1}), 1), 0u);
  EXPECT_EQ(h_bar(*k.algebra, Bimodule::character(Vec{1}), 2), 0u);
}

TEST(Bar, MatchesUnnormalizedComplex) {
  Rng rng(2);
  for (const std::string name : {"kx2", "kx3", "kxk", "path-A2", "kZ2", "kronecker"}) {
    const auto e = load(name);
    for (int t = 0; t < 2; ++t) {
      const Bimodule n = random_bimodule(*e.algebra, e.modules, rng);
      for (std::size_t deg = 0; deg <= 2; ++deg)
        EXPECT_EQ(h_bar(*e.algebra, n, deg), unnormalized_h(*e.algebra, n, deg)) << name << " degree " << deg;
    }
  }
}

TEST(Bar, HappelFormula) {
  // HH^1 of a path algebra of a tree-free quiver: 1 - #vertices + sum over arrows of dim e_t kQ e_s.
  EXPECT_EQ(h_bar(path_algebra_a2(), Bimodule::regular(path_algebra_a2()), 1), 0u);
  EXPECT_EQ(h_bar(path_algebra_kronecker(), Bimodule::regular(path_algebra_kronecker()), 1), 3u);
  EXPECT_EQ(h_bar(path_algebra_kronecker(), Bimodule::regular(path_algebra_kronecker()), 2), 0u);
}

TEST(Bar, BudgetEnforced) {
  const FDAlgebra m3 = matrix_algebra(3);
  const Bimodule reg = Bimodule::regular(m3);
  EXPECT_THROW(h_bar(m3, reg, 2, 100), BudgetExceeded);
}

TEST(Koszul, Examples) {
  EXPECT_EQ(ext2_koszul(2, RepPoint({Mat{{3}}, Mat{{Rational(1, 2)}}})), 1u);
  EXPECT_EQ(ext2_koszul(2, diag_pair()), 2u);
  EXPECT_EQ(ext2_koszul(1, RepPoint({Mat{{1, 1}, {0, 1}}})), 0u);
  const RepPoint ef({Mat{{0, 1}, {0, 0}}, Mat{{0, 0}, {1, 0}}});
  EXPECT_THROW(ext2_koszul(2, ef), NotOnScheme);
}

TEST(CE, Whitehead) {
  const LieStructure g = LieStructure::sl2();
  for (std::size_t d = 2; d <= 4; ++d) {
    const CEReport r = ce_cohomology(g, sl2_irrep(d));
    EXPECT_EQ(r.h0, 1u);
    EXPECT_EQ(r.h1, 0u);
    EXPECT_EQ(r.h2, 0u);
  }
  EXPECT_EQ(ext2_ce(LieStructure::abelian(1), std::vector<Mat>{Mat{{0}}}), 0u);
  const std::vector<Mat> bad{Mat{{0, 1}, {0, 0}}, Mat{{0, 0}, {1, 0}}, Mat::identity(2)};
  EXPECT_THROW(ext2_ce(g, bad), ValidationError);
  LieStructure broken = LieStructure::sl2();
  broken.at(0, 1, 2) = 2;
  EXPECT_THROW(broken.validate(), ValidationError);
}

TEST(Resolution, Examples) {
  const auto r1 = ext2_resolution(koszul_resolution(2), commuting(), RepPoint({Mat{{2}}, Mat{{5}}}));
  EXPECT_EQ(*r1.z1, 2u);
  EXPECT_EQ(*r1.z2, 1u);
  EXPECT_EQ(*r1.e2, 1u);
  const auto usl2 = load("usl2");
  const auto r2 = ext2_resolution(*usl2.resolution, *usl2.presentation, RepPoint(sl2_irrep(2)));
  EXPECT_EQ(*r2.z1, 3u);
  EXPECT_EQ(*r2.z2, 9u);
  EXPECT_EQ(*r2.e2, 0u);
  const auto free2 = AlgebraPresentation::free(2);
  const auto r3 = ext2_resolution(fox_resolution(free2), free2, RepPoint::zero(2, 2));
  EXPECT_EQ(*r3.z1, 8u);
  EXPECT_EQ(*r3.z2, 0u);
  EXPECT_EQ(*r3.e2, 0u);
}

TEST(Resolution, DerivationsEqualZ1) {
  const auto r = ext2_resolution(fox_resolution(commuting()), commuting(), diag_pair());
  EXPECT_EQ(*r.z1, derivation_space(commuting(), diag_pair()).dim);
  EXPECT_FALSE(r.e2.has_value());
}

TEST(Resolution, PeriodicMatchesBar) {
  for (std::uint32_t p = 2; p <= 4; ++p) {
    const std::vector<std::string> rel{"x1^" + std::to_string(p)};
    const auto a = AlgebraPresentation::parse("t", 1, rel);
    const FDAlgebra b = truncated_polynomial(p);
    for (std::size_t n = 1; n <= 3; ++n)
      for (const auto& parts : partitions(n, p)) {
        const RepPoint x({jordan_nilpotent(parts)});
        const auto res = ext2_resolution(periodic_resolution(p), a, x);
        std::vector<Mat> rho;
        for (std::uint32_t i = 0; i < p; ++i) rho.push_back(evaluate_word(NCWord(i, 0), x.span()));
        const auto bar = bar_report(b, Bimodule::endomorphisms(rho));
        EXPECT_EQ(*res.e2, *bar.e2);
        EXPECT_EQ(res.e1, bar.e1);
        EXPECT_EQ(res.e0, bar.e0);
      }
  }
}

TEST(Resolution, RejectsBrokenDifferential) {
  BimoduleResolution r = periodic_resolution(2);
  r.d2->at(0, 0).push_back({1, {}, {}});
  EXPECT_THROW(validate_at(r, RepPoint({jordan_nilpotent({2})})), ValidationError);
}
