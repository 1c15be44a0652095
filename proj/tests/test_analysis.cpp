#include <gtest/gtest.h>

#include "repsmooth/analysis.hpp"
#include "repsmooth/error.hpp"
#include "repsmooth/lie.hpp"
#include "repsmooth/scan.hpp"

using namespace repsmooth;

namespace {

const CohomologyReport* find_backend(const PointAnalysis& a, Backend b) {
  for (const auto& r : a.backends)
    if (r.backend == b) return &r;
  return nullptr;
}

RepPoint diag_pair() { return RepPoint({Mat{{1, 0}, {0, 2}}, Mat{{3, 0}, {0, 4}}}); }

}  // namespace

TEST(Analyze, Sl2TwoDimensionalIrrep) {
  const PointAnalysis a = analyze_point(load("usl2"), RepPoint(sl2_irrep(2)));
  EXPECT_EQ(a.e0, 1u);
  EXPECT_EQ(a.e1, 0u);
  EXPECT_EQ(a.tangent_jacobian, 3u);
  EXPECT_EQ(a.tangent_derivations, 3u);
  EXPECT_TRUE(a.euler_holds);
  const auto* ce = find_backend(a, Backend::CE);
  ASSERT_NE(ce, nullptr);
  EXPECT_EQ(*ce->e2, 0u);
  const auto* res = find_backend(a, Backend::Resolution);
  ASSERT_NE(res, nullptr);
  EXPECT_EQ(*res->z1, 3u);
  EXPECT_EQ(*res->z2, 9u);
  EXPECT_EQ(a.verdict, Verdict::RegularCertified);
}

TEST(Analyze, CommutingDiagonalPair) {
  const PointAnalysis a = analyze_point(load("commuting"), diag_pair());
  EXPECT_EQ(a.tangent_jacobian, 6u);
  EXPECT_EQ(a.jacobian_rank, 2u);
  const auto* k = find_backend(a, Backend::Koszul);
  ASSERT_NE(k, nullptr);
  EXPECT_EQ(*k->e2, 2u);
  EXPECT_EQ(a.verdict, Verdict::Undecided);
}

TEST(Analyze, CommutingOriginShowsSingularEvidence) {
  const PointAnalysis a = analyze_point(load("commuting"), RepPoint::zero(2, 2));
  EXPECT_EQ(a.tangent_jacobian, 8u);
  EXPECT_EQ(a.verdict, Verdict::SingularEvidence);
}

TEST(Analyze, PlaneIsRegularWithStrictEmbedding) {
  const PointAnalysis a = analyze_point(load("commuting"), RepPoint({Mat{{Rational(1, 2)}}, Mat{{-3}}}));
  EXPECT_EQ(a.tangent_jacobian, 2u);
  EXPECT_EQ(a.ambient, 2u);
  EXPECT_EQ(*find_backend(a, Backend::Koszul)->e2, 1u);
  EXPECT_EQ(a.verdict, Verdict::RegularCertified);
  EXPECT_EQ(a.embedding.rfind("strict", 0), 0u);
}

TEST(Analyze, FreeIsRegular) {
  const PointAnalysis a = analyze_point(load("free-2"), RepPoint({Mat{{1, 2}, {3, 4}}, Mat{{5, 6}, {7, 8}}}));
  EXPECT_EQ(a.tangent_jacobian, 8u);
  EXPECT_EQ(a.verdict, Verdict::RegularCertified);
}

TEST(Analyze, FatPointBackendsAgree) {
  const PointAnalysis a = analyze_point(load("fat-point"), RepPoint::zero(1, 1));
  EXPECT_EQ(a.tangent_jacobian, 1u);
  EXPECT_EQ(*find_backend(a, Backend::Bar)->e2, 1u);
  EXPECT_EQ(*find_backend(a, Backend::Resolution)->e2, 1u);
  EXPECT_NE(a.verdict, Verdict::RegularCertified);
}

TEST(Analyze, BackendFilterAndErrors) {
  AnalysisOptions opt;
  opt.only = Backend::Koszul;
  const PointAnalysis a = analyze_point(load("commuting"), diag_pair(), opt);
  ASSERT_EQ(a.backends.size(), 1u);
  EXPECT_EQ(a.backends[0].backend, Backend::Koszul);
  EXPECT_THROW(analyze_point(load("weyl-1"), RepPoint::zero(2, 1)), NotOnScheme);
  const RepPoint off({Mat{{0, 1}, {0, 0}}, Mat{{0, 0}, {1, 0}}});
  EXPECT_THROW(analyze_point(load("commuting"), off), NotOnScheme);
}

TEST(Analyze, BareRepresentationUsesFoxResolution) {
  const auto a = AlgebraPresentation::parse("cusp", 2, std::vector<std::string>{"x1*x2 - x2*x1", "x1*x1"});
  const PointAnalysis r = analyze_point(entry_for_presentation(a), RepPoint::zero(2, 1));
  ASSERT_EQ(r.backends.size(), 1u);
  EXPECT_FALSE(r.backends[0].e2.has_value());
  EXPECT_EQ(r.skipped.size(), 1u);
}

TEST(Scan, FreeSingleStratum) {
  ScanConfig c;
  c.n = 2;
  c.samples = 100;
  const ScanReport r = scan(load("free-2"), c);
  ASSERT_EQ(r.strata.size(), 1u);
  EXPECT_EQ(r.strata[0].tangent, 8u);
  EXPECT_TRUE(r.violations.empty());
}

TEST(Scan, CommutingGenericAndSpecial) {
  ScanConfig c;
  c.n = 2;
  c.samples = 100;
  c.include_special = false;
  const ScanReport generic = scan(load("commuting"), c);
  ASSERT_EQ(generic.strata.size(), 1u);
  EXPECT_EQ(generic.strata[0].tangent, 6u);
  c.samples = 20;
  c.include_special = true;
  const ScanReport all = scan(load("commuting"), c);
  bool origin_seen = false;
  for (const auto& rec : all.records)
    if (rec.special && rec.point == RepPoint::zero(2, 2)) {
      origin_seen = true;
      EXPECT_EQ(rec.tangent, 8u);
    }
  EXPECT_TRUE(origin_seen);
  EXPECT_TRUE(all.violations.empty());
  EXPECT_EQ(all.strata.front().tangent, 6u);
  EXPECT_EQ(strata_csv(all).substr(0, 23), "tangent,count,families\n");
}

TEST(Scan, DeterministicForSeed) {
  ScanConfig c;
  c.n = 2;
  c.samples = 10;
  c.seed = 42;
  const ScanReport a = scan(load("usl2"), c);
  const ScanReport b = scan(load("usl2"), c);
  ASSERT_EQ(a.records.size(), b.records.size());
  for (std::size_t k = 0; k < a.records.size(); ++k) EXPECT_EQ(a.records[k].point, b.records[k].point);
}

TEST(Scan, LiftHeuristicAndErrors) {
  ScanConfig c;
  c.n = 1;
  c.samples = 5;
  c.lift_order = 4;
  const ScanReport r = scan(load("commuting"), c);
  for (const auto& rec : r.records) EXPECT_EQ(*rec.lift_order, 4u);
  const ScanReport fat = scan(load("fat-point"), c);
  for (const auto& rec : fat.records) EXPECT_EQ(*rec.lift_order, 2u);
  EXPECT_THROW(scan(load("weyl-1"), c), SamplerExhausted);
  c.n = 7;
  EXPECT_THROW(scan(load("free-2"), c), SamplerExhausted);
}
