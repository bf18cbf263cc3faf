#include <cstdio>
#include <fstream>
#include <sstream>

#include <gtest/gtest.h>
#include <nlohmann/json.hpp>

#include "app.hpp"

namespace {

struct Run {
  int code;
  nlohmann::json doc;
  std::string text;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = dunklkit::run(args, out, err);
  Run r{code, {}, out.str()};
  if (std::find(args.begin(), args.end(), "text") == args.end()) r.doc = nlohmann::json::parse(out.str());
  return r;
}

std::string temp_file(const std::string& name, const std::string& body) {
  const std::string path = ::testing::TempDir() + name;
  std::ofstream(path) << body;
  return path;
}

}  // namespace

TEST(Cli, ClassifyParabolic) {
  const auto r = run({"lauricella", "classify", "--mu", "0.25,0.25,0.25,0.25"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.doc["schema"], "dunklkit/1");
  EXPECT_EQ(r.doc["result"]["type"], "parabolic");
  EXPECT_EQ(r.doc["result"]["signature"]["zero"], 1);
}

TEST(Cli, FlatnessNegativeControl) {
  const auto r = run({"dunkl", "flat", "--catalog", "random:2,3", "--seed", "7"});
  EXPECT_EQ(r.code, 2);
  EXPECT_FALSE(r.doc["result"]["flat"].get<bool>());
  EXPECT_FALSE(r.doc["result"]["violations"].empty());
}

TEST(Cli, SingleHyperplaneLattice) {
  const auto path = temp_file("one.json", R"({"dim": 1, "hyperplanes": [{"normal": [[2, 0]], "kappa": 0.5}]})");
  const auto r = run({"arr", "lattice", "--input", path});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.doc["result"]["count"], 2);
}

TEST(Cli, InvalidInputExitsTwo) {
  const auto path = temp_file("bad.json", R"({"dim": 2, "hyperplanes": [{"normal": [1, 0], "kappa": 0.5}]})");
  const auto r = run({"arr", "lattice", "--input", path});
  EXPECT_EQ(r.code, 2);
  EXPECT_EQ(r.doc["error"]["code"], "NotEssential");
  EXPECT_EQ(run({"arr", "lattice", "--input", "/nonexistent/file.json"}).code, 2);
  EXPECT_EQ(run({"lauricella", "classify", "--mu", "0.5,1.5,0.2"}).code, 2);
  EXPECT_EQ(run({"lauricella", "classify"}).code, 2);
  EXPECT_EQ(run({"bogus"}).code, 2);
  EXPECT_EQ(run({"lauricella", "classify", "--mu", "0.3,0.3,0.3", "--tol", "-1"}).code, 2);
}

TEST(Cli, StrataPlanHypothesisViolated) {
  const auto r = run({"strata", "plan", "--catalog", "lauricella:0.3,0.3,0.4,0.5", "--type", "elliptic"});
  EXPECT_EQ(r.code, 2);
  EXPECT_EQ(r.doc["error"]["code"], "HypothesisViolated");
}

TEST(Cli, StrataReportWithSymmetry) {
  const auto r = run({"strata", "report", "--catalog", "lauricella:0.25,0.25,0.25,0.25", "--type", "parabolic"});
  ASSERT_EQ(r.code, 0);
  const auto& strata = r.doc["result"]["strata"];
  ASSERT_EQ(strata.size(), 14u);
  EXPECT_EQ(strata[0]["p"], 2);
  EXPECT_EQ(strata[0]["N_Q"], 2);
  EXPECT_DOUBLE_EQ(strata[0]["complex_fraction"].get<double>(), 0.5);
  EXPECT_EQ(strata.back()["action"], "apex");
}

TEST(Cli, PeriodsAndMonodromy) {
  const auto p = run({"lauricella", "periods", "--mu", "0.3,0.45,0.5", "--config", "0,1,2"});
  ASSERT_EQ(p.code, 0);
  EXPECT_EQ(p.doc["result"]["F"].size(), 2u);
  EXPECT_LE(p.doc["result"]["relation_residual"].get<double>(), 1e-8);
  const auto m = run({"lauricella", "monodromy", "--mu", "0.3,0.45,0.5", "--config", "0,1,2", "--loop", "1,0"});
  ASSERT_EQ(m.code, 0);
  EXPECT_LE(m.doc["result"]["unitarity_defect"].get<double>(), 1e-6);
  EXPECT_EQ(run({"lauricella", "periods", "--mu", "0.3,0.45,0.5", "--config", "0,1"}).code, 2);
  EXPECT_EQ(run({"lauricella", "monodromy", "--mu", "0.3,0.45,0.5", "--config", "0,1,2"}).code, 2);
}

TEST(Cli, ComplexConfiguration) {
  const auto p = run({"lauricella", "periods", "--mu", "0.3,0.45,0.5", "--config", "0,1:0.5,2"});
  ASSERT_EQ(p.code, 0);
  EXPECT_TRUE(p.doc["result"]["relation_residual"].is_null());
}

TEST(Cli, Deterministic) {
  const std::vector<std::string> args{"dunkl", "exponents", "--catalog", "random:3,5", "--seed", "4"};
  EXPECT_EQ(run(args).text, run(args).text);
  const std::vector<std::string> other{"dunkl", "exponents", "--catalog", "random:3,5", "--seed", "5"};
  EXPECT_NE(run(args).text, run(other).text);
}

TEST(Cli, TextFormat) {
  const auto r = run({"dunkl", "exponents", "--catalog", "coxeter_a:2,0.4", "--format", "text"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.text.find("kappa_0: "), std::string::npos);
}

TEST(Cli, VerifyAndIrreducible) {
  const auto v = run({"dunkl", "verify", "--catalog", "lauricella:0.2,0.3,0.4,0.5"});
  EXPECT_EQ(v.code, 0);
  EXPECT_LE(v.doc["result"]["max_residual"].get<double>(), 1e-10);
  const auto red = run({"dunkl", "verify", "--catalog", "boolean:0.3,0.4", "--flat", "3"});
  EXPECT_EQ(red.code, 2);
  EXPECT_EQ(red.doc["error"]["code"], "FlatReducible");
  const auto i = run({"arr", "irreducible", "--catalog", "boolean:0.3,0.4"});
  EXPECT_EQ(i.doc["result"]["components"].size(), 2u);
}
