#include <gtest/gtest.h>

#include <filesystem>

#include "repsmooth/catalog.hpp"
#include "repsmooth/error.hpp"
#include "repsmooth/serialize.hpp"

using namespace repsmooth;

TEST(Json, RationalsAndMatrices) {
  const Mat m{{Rational(1), Rational(-3, 4)}, {Rational(0), Rational(7)}};
  const Json j = to_json(m);
  EXPECT_EQ(j.dump(), R"([["1","-3/4"],["0","7"]])");
  EXPECT_EQ(mat_from_json(j), m);
  EXPECT_EQ(mat_from_json(Json::parse("[[1, \"2/6\"]]")), (Mat{{Rational(1), Rational(1, 3)}}));
  EXPECT_THROW(mat_from_json(Json::parse("[[1, 2], [3]]")), ParseError);
  EXPECT_THROW(rational_from_json(Json(0.5)), ParseError);
  EXPECT_THROW(rational_from_json(Json("1/-2")), ParseError);
}

TEST(Json, Points) {
  const RepPoint x({Mat{{1, 2}, {3, 4}}, Mat{{0, 0}, {1, 0}}});
  EXPECT_EQ(point_from_json(to_json(x)), x);
  EXPECT_THROW(point_from_json(Json::parse(R"({"matrices": [[[1, 2]]]})")), DimensionMismatch);
  EXPECT_THROW(point_from_json(Json::parse(R"({"n": 3, "matrices": [[[1]]]})")), DimensionMismatch);
  EXPECT_THROW(point_from_json(Json::parse(R"({"mats": []})")), ParseError);
}

TEST(Json, Presentation) {
  const Json j = Json::parse(R"({"name": "weyl", "generators": 2, "relations": ["x1*x2 - x2*x1 - 1"]})");
  const AlgebraPresentation a = presentation_from_json(j);
  EXPECT_EQ(a.m, 2u);
  EXPECT_EQ(presentation_from_json(to_json(a)).relations, a.relations);
  EXPECT_THROW(presentation_from_json(Json::parse(R"({"name": "bad", "generators": 1, "relations": ["x2"]})")),
               Error);
}

TEST(Json, CochainAndExtension) {
  const FDAlgebra b = truncated_polynomial(2);
  const Bimodule k = Bimodule::character(Vec{1, 0});
  TwoCochain w = TwoCochain::zero(b, k);
  w.at(1, 1) = Vec{Rational(5, 2)};
  EXPECT_EQ(cochain_from_json(to_json(w), b, k), w);
  const HochschildExtension e = build_extension(w);
  const HochschildExtension back = extension_from_json(to_json(e));
  EXPECT_EQ(to_json(back), to_json(e));
  EXPECT_EQ(classify_extension(back), w);
  EXPECT_THROW(cochain_from_json(to_json(w), truncated_polynomial(3), k), DimensionMismatch);
}

TEST(Json, Deformation) {
  TruncatedDeformation d{RepPoint({Mat{{0}}}), 2, {{Mat{{1}}}}};
  const TruncatedDeformation back = deformation_from_json(to_json(d));
  EXPECT_EQ(back.base, d.base);
  EXPECT_EQ(back.order, 2u);
  EXPECT_EQ(back.coeffs, d.coeffs);
}

TEST(Digest, KnownVectors) {
  // Published FNV-1a 64-bit test vectors.
  EXPECT_EQ(fnv1a_hex(""), "cbf29ce484222325");
  EXPECT_EQ(fnv1a_hex("a"), "af63dc4c8601ec8c");
  EXPECT_EQ(fnv1a_hex("foobar"), "85944171f73967e8");
}

TEST(Catalog, ShippedFilesMatchBuiltins) {
  const std::filesystem::path dir(REPSMOOTH_CATALOG_DIR);
  std::size_t files = 0;
  for (const auto& entry : std::filesystem::directory_iterator(dir))
    if (entry.path().extension() == ".json") ++files;
  EXPECT_EQ(files, catalog_names().size());
  for (const auto& name : catalog_names()) {
    const auto path = dir / (name + ".json");
    ASSERT_TRUE(std::filesystem::exists(path)) << name;
    const Json shipped = read_json_file(path.string());
    EXPECT_EQ(shipped, to_json(load(name))) << name;
    EXPECT_EQ(to_json(entry_from_json(shipped)), shipped) << name;
    EXPECT_EQ(to_json(load_entry(path.string())), shipped) << name;
  }
}

TEST(Catalog, BrokenFileRejected) {
  Json j = to_json(load("kx2"));
  j["algebra"]["products"][0]["value"] = Json::array({"0", "2"});  // 1 * 1 = 2x breaks the unit
  EXPECT_THROW(entry_from_json(j), ValidationError);
  Json u = to_json(load("usl2"));
  u["lie"]["brackets"][0]["value"] = Json::array({"1", "0", "0"});
  EXPECT_THROW(entry_from_json(u), ValidationError);
}

TEST(Report, EnvelopeIsDeterministic) {
  const Json in = {{"a", 1}};
  const Json r1 = make_report("x", in, {{"v", 2}}, 7);
  const Json r2 = make_report("x", in, {{"v", 2}}, 7);
  EXPECT_EQ(r1.dump(), r2.dump());
  EXPECT_EQ(r1["inputs_digest"], fnv1a_hex(in.dump()));
  EXPECT_FALSE(r1.contains("timing_ms"));
}
