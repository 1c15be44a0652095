#include <gtest/gtest.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <string>
#include <sys/wait.h>

#include "repsmooth/serialize.hpp"

using namespace repsmooth;

namespace {

struct CliRun {
  int code = -1;
  std::string out;
  Json json() const { return Json::parse(out); }
};

CliRun run(const std::string& args) {
  const std::string cmd = std::string(REPSMOOTH_CLI) + " " + args + " 2>/dev/null";
  CliRun r;
  FILE* p = popen(cmd.c_str(), "r");
  if (!p) return r;
  std::array<char, 4096> buf;
  std::size_t k;
  while ((k = fread(buf.data(), 1, buf.size(), p)) > 0) r.out.append(buf.data(), k);
  const int status = pclose(p);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string data(const std::string& name) { return std::string(REPSMOOTH_TEST_DATA) + "/" + name; }

std::string temp(const std::string& name) {
  return (std::filesystem::temp_directory_path() / ("repsmooth_cli_" + name)).string();
}

}  // namespace

TEST(Cli, HarrisonOfDualNumbers) {
  const CliRun r = run("cocycle harrison --algebra kx2");
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(r.json()["results"]["dim"], 1);
}

TEST(Cli, FatPointIntegrationStopsAtOrderTwo) {
  const CliRun r = run("deform integrate --catalog fat-point --order 3");
  EXPECT_EQ(r.code, 2);
  const Json res = r.json()["results"];
  EXPECT_EQ(res["achieved_order"], 2);
  EXPECT_EQ(res["obstruction"]["residual"][0][0][0], "1");
}

TEST(Cli, FreeScanSingleStratum) {
  const CliRun r = run("scan --catalog free-2 --n 2 --samples 100");
  ASSERT_EQ(r.code, 0);
  const Json strata = r.json()["results"]["strata"];
  ASSERT_EQ(strata.size(), 1u);
  EXPECT_EQ(strata[0]["tangent"], 8);
}

TEST(Cli, BuildScheme) {
  EXPECT_EQ(run("build-scheme --catalog free-2 --n 2").json()["results"]["generator_count"], 0);
  const Json c = run("build-scheme --catalog commuting --n 2").json()["results"];
  EXPECT_EQ(c["generator_count"], 4);
  EXPECT_EQ(c["generators"][0]["poly"], "xi_{1,1,2}*xi_{2,2,1} - xi_{1,2,1}*xi_{2,1,2}");
  EXPECT_EQ(c["empty"], false);
  const Json w = run("build-scheme --catalog weyl-1 --n 2 --degree-bound 0").json()["results"];
  EXPECT_EQ(w["generator_count"], 4);
  EXPECT_EQ(w["empty"], true);
  EXPECT_EQ(w["unit_certificate"]["value"], "-2");
}

TEST(Cli, AnalyzePoint) {
  const CliRun s = run("analyze-point --catalog usl2 --point " + data("sl2_irrep2.json"));
  ASSERT_EQ(s.code, 0);
  EXPECT_EQ(s.json()["results"]["verdict"], "REGULAR-CERTIFIED");
  const Json p = run("analyze-point --catalog commuting --point " + data("plane_point.json")).json()["results"];
  EXPECT_EQ(p["embedding"].get<std::string>().rfind("strict", 0), 0u);
  const Json d = run("analyze-point --catalog commuting --backend koszul --point " + data("commuting_diag.json")).json();
  EXPECT_EQ(d["results"]["ext2"].size(), 1u);
  EXPECT_EQ(d["results"]["ext2"][0]["e2"], 2);
  EXPECT_EQ(d["results"]["verdict"], "UNDECIDED");
}

TEST(Cli, PresentationFile) {
  const CliRun r = run("analyze-point --presentation " + data("cusp.json") + " --point '{\"matrices\": [[[0]], [[0]]]}'");
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(r.json()["results"]["tangent"]["jacobian"], 2);
}

TEST(Cli, ErrorsExitOne) {
  EXPECT_EQ(run("analyze-point --catalog commuting --point " + data("commuting_off.json")).code, 1);
  EXPECT_EQ(run("analyze-point --catalog nowhere --point " + data("commuting_diag.json")).code, 1);
  EXPECT_EQ(run("scan --catalog free-2 --bogus").code, 1);
  EXPECT_EQ(run("").code, 1);
  EXPECT_EQ(run("scan --catalog weyl-1").code, 1);
}

TEST(Cli, ReportsAreByteIdentical) {
  const std::string args = "scan --catalog commuting --n 2 --samples 15 --seed 5";
  const CliRun a = run(args);
  const CliRun b = run(args);
  ASSERT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
  EXPECT_FALSE(a.json().contains("timing_ms"));
  EXPECT_NE(run("scan --catalog commuting --n 2 --samples 15 --seed 6").out, a.out);
  EXPECT_TRUE(run(args + " --timing").json().contains("timing_ms"));
}

TEST(Cli, CocyclePipeline) {
  const std::string w = temp("w.json"), e = temp("e.json"), csv = temp("strata.csv");
  write_text_file(w, R"({"values": [{"pair": [1, 1], "value": ["1"]}]})");
  EXPECT_EQ(run("cocycle check --algebra kx2 --cochain " + w).code, 0);
  EXPECT_EQ(run("cocycle solve --algebra kx2 --cochain " + w).code, 2);
  EXPECT_EQ(run("cocycle lift --algebra kx2 --cochain " + w).code, 2);
  ASSERT_EQ(run("cocycle extend --algebra kx2 --cochain " + w + " --out " + e).code, 0);
  const Json ext = read_json_file(e)["results"];
  EXPECT_EQ(ext["total"]["dim"], 3);
  write_text_file(e, ext.dump());
  const CliRun c = run("cocycle classify --extension " + e);
  ASSERT_EQ(c.code, 0);
  EXPECT_EQ(c.json()["results"]["cochain"]["values"][0]["value"][0], "1");

  write_text_file(w, R"({"values": [{"pair": [0, 1], "value": ["1"]}]})");
  EXPECT_EQ(run("cocycle check --algebra kx2 --cochain " + w).code, 2);
  EXPECT_EQ(run("cocycle extend --algebra kx2 --cochain " + w).code, 1);

  const CliRun amp = run("cocycle amplify --catalog fat-point --order 2 --degree-bound 2");
  ASSERT_EQ(amp.code, 0);
  EXPECT_EQ(amp.json()["results"]["bounded_coboundary"], false);

  ASSERT_EQ(run("scan --catalog commuting --n 2 --samples 5 --csv " + csv).code, 0);
  EXPECT_TRUE(std::filesystem::exists(csv));
}

TEST(Cli, DeformLiftAndTangent) {
  const Json t = run("deform tangent --catalog commuting --point " + data("commuting_diag.json")).json();
  EXPECT_EQ(t["results"]["dim"], 6);
  const std::string arc = temp("arc.json");
  write_text_file(arc, R"({"base": {"matrices": [[[0]]]}, "order": 2, "coefficients": [[[[1]]]]})");
  EXPECT_EQ(run("deform lift --catalog fat-point --arc " + arc).code, 2);
  EXPECT_EQ(run("deform lift --catalog free-1 --arc " + arc).code, 0);
  EXPECT_EQ(run("deform integrate --catalog commuting --n 1 --order 5").json()["results"]["achieved_order"], 5);
}

TEST(Cli, CatalogListAndShow) {
  const Json l = run("catalog list").json()["results"]["entries"];
  EXPECT_EQ(l.size(), 25u);
  EXPECT_EQ(run("catalog show usl2").json()["results"]["name"], "usl2");
  EXPECT_EQ(run("catalog show " + std::string(REPSMOOTH_CATALOG_DIR) + "/kS3.json").code, 0);
}
