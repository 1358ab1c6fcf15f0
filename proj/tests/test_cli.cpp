#include <gtest/gtest.h>

#include <fstream>

#include "support/fixtures.hpp"

using namespace torickit;

namespace {

cli::RunConfig config(std::string command, std::string fixture, std::string sub = "") {
  cli::RunConfig c;
  c.command = std::move(command);
  c.subcommand = std::move(sub);
  c.fixture = std::move(fixture);
  c.fixture_dir = TORICKIT_FIXTURE_DIR;
  return c;
}

std::string temp_file(const std::string& name, const std::string& content) {
  auto p = std::filesystem::temp_directory_path() / name;
  std::ofstream(p) << content;
  return p.string();
}

}  // namespace

TEST(CliPolygon, HexagonReport) {
  auto rep = cli::run(config("polygon", "paper-P"));
  ASSERT_EQ(rep.exit_code, 0);
  const auto& r = rep.body["result"];
  EXPECT_EQ(r["polar_normalized_volume"], "22/15");
  EXPECT_EQ(r["singular_points"].size(), 6u);
  EXPECT_EQ(r["symmetry_order"], 2);
  EXPECT_EQ(r["qg_dimension"], 2);
  EXPECT_EQ(r["k_polystable"], true);
}

TEST(CliPolygon, SmoothQuadric) {
  auto rep = cli::run(config("polygon", "square"));
  ASSERT_EQ(rep.exit_code, 0);
  EXPECT_TRUE(rep.body["result"]["singular_points"].empty());
  EXPECT_EQ(rep.body["result"]["symmetry_order"], 8);
}

TEST(CliPolygon, NonPrimitiveVertex) {
  auto rep = cli::run(config("polygon", "bad"));
  EXPECT_EQ(rep.exit_code, 3);
  EXPECT_EQ(rep.body["result"]["error"]["kind"], "NonPrimitiveVertex");
}

TEST(CliPolygon, MalformedJson) {
  auto c = config("polygon", "");
  c.fixture.reset();
  c.in = temp_file("torickit-malformed.json", "{\"vertices\": [[1, 0]");
  auto rep = cli::run(c);
  EXPECT_EQ(rep.exit_code, 2);
  EXPECT_EQ(rep.body["result"]["error"]["kind"], "InvalidInput");
}

TEST(CliPolygon, NonIntegerVertex) {
  auto c = config("polygon", "");
  c.fixture.reset();
  c.in = temp_file("torickit-rational.json", R"({"vertices": [[1, 0], [0, "1/2"], [-1, -1]]})");
  EXPECT_EQ(cli::run(c).exit_code, 2);
}

TEST(CliPolygon, UnknownFixture) { EXPECT_EQ(cli::run(config("polygon", "no-such-fixture")).exit_code, 2); }

TEST(CliScaffold, HexagonRun) {
  auto c = config("scaffold", "paper-scaffolding");
  c.check_hull = true;
  auto rep = cli::run(c);
  ASSERT_EQ(rep.exit_code, 0) << rep.body.dump();
  const auto& r = rep.body["result"];
  EXPECT_EQ(r["equation"], "z1*z2 - y1*y2*x1^2*x2^2");
  EXPECT_EQ(r["charts"].size(), 8u);
  EXPECT_EQ(r["hull"]["equals_target"], true);
  EXPECT_EQ(r["fiber_avoidance"]["verdict"], "Verified");
  EXPECT_EQ(r["unstable_locus_matches_given_ideal"], true);
}

TEST(CliScaffold, MissingStrutField) {
  auto c = config("scaffold", "");
  c.fixture.reset();
  c.in = temp_file("torickit-missing.json", R"({"shape": {"projective_dims": [1]}, "n_u_rank": 1,
    "struts": [{"name": "x1", "divisor": [1, 1]}]})");
  auto rep = cli::run(c);
  EXPECT_EQ(rep.exit_code, 2);
  EXPECT_NE(rep.body["result"]["error"]["message"].get<std::string>().find("chi"), std::string::npos);
}

TEST(CliPeriods, SymbolicClassical) {
  auto c = config("periods", "paper-f", "classical");
  c.symbolic = true;
  c.order = 3;
  auto rep = cli::run(c);
  ASSERT_EQ(rep.exit_code, 0);
  auto s = io::param_series_from_json(rep.body["result"]["series"]);
  EXPECT_EQ(s[2], ParamPoly::parse("2*(a1*a2 + b1*b2 + c1*c2 + 7)"));
  EXPECT_EQ(s[3], ParamPoly::parse("6*(a1*b1 + 2*a1*c2 + a2*b2 + 2*a2*c1 + 4*b1 + 4*b2 + c1 + c2)"));
}

TEST(CliPeriods, SymbolicDefaultOrder) {
  auto c = config("periods", "paper-f", "classical");
  c.symbolic = true;
  auto rep = cli::run(c);
  EXPECT_EQ(rep.body["provenance"]["order"], 6);
  EXPECT_EQ(rep.body["result"]["series"]["order"], 6);
}

TEST(CliPeriods, NumericNeedsAllParameters) {
  auto c = config("periods", "paper-f", "classical");
  c.assignments = {"a1=1"};
  c.order = 2;
  EXPECT_EQ(cli::run(c).exit_code, 2);
}

TEST(CliPeriods, Quantum) {
  auto c = config("periods", "paper", "quantum");
  c.order = 4;
  auto rep = cli::run(c);
  ASSERT_EQ(rep.exit_code, 0);
  auto s = io::rat_series_from_json(rep.body["result"]["regularized"]);
  EXPECT_EQ(s, (RatSeries(4, {BigRat(1), BigRat(0), BigRat(16), BigRat(0), BigRat(936)})));
}

TEST(CliPeriods, CompareEqual) {
  auto c = config("periods", "paper", "compare");
  c.order = 12;
  auto rep = cli::run(c);
  EXPECT_EQ(rep.exit_code, 0);
  EXPECT_EQ(rep.body["result"]["verdict"], "EQUAL through t^12");
}

TEST(CliPeriods, CompareMismatch) {
  auto c = config("periods", "paper", "compare");
  c.order = 4;
  c.assignments = {"a1=2"};
  auto rep = cli::run(c);
  EXPECT_EQ(rep.exit_code, 4);
  EXPECT_EQ(rep.body["result"]["first_mismatch"], 2);
}

TEST(CliReport, DeterministicAndRoundTrips) {
  for (auto c : {config("polygon", "paper-P"), config("scaffold", "paper-scaffolding"),
                 config("periods", "paper", "compare")}) {
    auto a = cli::run(c).render("json");
    auto b = cli::run(c).render("json");
    EXPECT_EQ(a, b);
    auto parsed = io::Json::parse(a);
    EXPECT_EQ(parsed, cli::run(c).body);
  }
}

TEST(CliReport, TimingOnlyOnRequest) {
  auto c = config("polygon", "paper-P");
  EXPECT_FALSE(cli::run(c).body["provenance"].contains("elapsed_us"));
  c.timing = true;
  EXPECT_TRUE(cli::run(c).body["provenance"].contains("elapsed_us"));
}

TEST(CliReport, TextFormat) {
  auto text = cli::run(config("polygon", "paper-P")).render("text");
  EXPECT_NE(text.find("result.polar_normalized_volume: 22/15"), std::string::npos);
  EXPECT_NE(text.find("result.qg_dimension: 2"), std::string::npos);
}

TEST(CliReport, ProvenanceHashDependsOnInput) {
  auto a = cli::run(config("polygon", "paper-P")).body["provenance"]["input_hash"];
  auto b = cli::run(config("polygon", "square")).body["provenance"]["input_hash"];
  EXPECT_NE(a, b);
}

TEST(Serialization, SeriesAndLaurentRoundTrip) {
  auto f = fixtures::f();
  EXPECT_EQ(io::laurent_from_json(io::to_json(f)), f);
  RatSeries s(3, {BigRat(1), BigRat(-1, 2), BigRat(0), BigRat(22, 15)});
  EXPECT_EQ(io::rat_series_from_json(io::series_to_json(s)), s);
}
