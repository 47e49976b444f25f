#include <gtest/gtest.h>

#include <sstream>

#include "fixtures.hpp"
#include "gpab/cli.hpp"
#include "gpab/report.hpp"
#include "json.hpp"

using namespace gpab;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string data(const std::string& name) { return std::string(GPAB_TEST_DATA) + "/" + name; }

}  // namespace

TEST(CliAnalyze, Examples) {
  const auto f1 = run({"analyze", data("F1.json")});
  ASSERT_EQ(f1.code, kExitOk) << f1.err;
  const auto j1 = nlohmann::json::parse(f1.out);
  EXPECT_EQ(j1["schema"], kReportSchema);
  EXPECT_EQ(j1["classification"]["type"], "FreeSubgroup");
  EXPECT_EQ(j1["classification"]["reason"], "ClassSize2");

  const auto f6 = run({"analyze", data("F6.json")});
  ASSERT_EQ(f6.code, kExitOk) << f6.err;
  const auto j6 = nlohmann::json::parse(f6.out);
  EXPECT_EQ(j6["classification"]["type"], "VirtuallyNilpotent");
  EXPECT_EQ(j6["classification"]["depth"], 1);

  const auto bad = run({"analyze", data("malformed.json")});
  EXPECT_EQ(bad.code, kExitUsage);
  EXPECT_TRUE(bad.out.empty());
  EXPECT_FALSE(bad.err.empty());
  EXPECT_EQ(run({"analyze", data("missing.json")}).code, kExitUsage);
}

TEST(CliAnalyze, VerificationSection) {
  const auto r = run({"analyze", data("F3.json"), "--verify"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  ASSERT_TRUE(j.contains("verification"));
  EXPECT_EQ(j["verification"]["passed"], true);
}

TEST(CliVerify, ExitCodes) {
  for (const auto& [name, g] : gpab::testing::all_fixtures()) {
    const auto r = run({"verify", data(name + ".json")});
    EXPECT_EQ(r.code, kExitOk) << name << r.out;
    EXPECT_NE(r.out.find("pc by transvection, x in C"), std::string::npos);
  }
  EXPECT_EQ(run({"verify", data("F3.json"), "--corrupt-first"}).code, kExitVerificationFailed);
  const auto zero = run({"verify", data("path4.json"), "--bound", "0"});
  EXPECT_EQ(zero.code, kExitVerificationFailed);
  EXPECT_NE(zero.out.find("not-found: transvection-pc commutator, y in C"), std::string::npos);
  EXPECT_EQ(run({"verify", data("F3.json"), "--bound", "-1"}).code, kExitUsage);
}

TEST(CliNormalForm, Examples) {
  EXPECT_EQ(run({"nf", data("F1.json"), "u u^-1"}).out, "(identity)\n");
  EXPECT_EQ(run({"nf", data("F2.json"), "b a b"}).out, "a b^2\n");
  const auto unknown = run({"nf", data("F2.json"), "a q"});
  EXPECT_EQ(unknown.code, kExitUsage);
  EXPECT_NE(unknown.err.find("UnknownVertex"), std::string::npos);
}

TEST(CliCensus, DeterministicAndExamples) {
  const std::vector<std::string> args = {"census", "--vertices", "5", "--edge-prob", "0.4", "--orders", "inf,2,3",
                                         "--count", "20", "--seed", "7"};
  const auto a = run(args), b = run(args);
  ASSERT_EQ(a.code, kExitOk) << a.err;
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(a.out.substr(0, a.out.find('\n')), "seed,index,vertices,edges,classification,reason,depth");

  const auto single = run({"census", "--vertices", "1", "--count", "5", "--seed", "3"});
  std::istringstream lines(single.out);
  std::string line;
  std::getline(lines, line);
  int rows = 0;
  while (std::getline(lines, line)) {
    ++rows;
    EXPECT_NE(line.find(",VirtuallyNilpotent,,1"), std::string::npos) << line;
  }
  EXPECT_EQ(rows, 5);

  const auto full = run({"census", "--vertices", "4", "--edge-prob", "1", "--orders", "inf", "--count", "3"});
  std::istringstream flines(full.out);
  std::getline(flines, line);
  while (std::getline(flines, line)) EXPECT_NE(line.find(",FreeSubgroup,ClassSize2,"), std::string::npos) << line;

  EXPECT_EQ(run({"census", "--orders", "6"}).code, kExitUsage);
}

TEST(CliCensus, RowsDoNotDependOnCount) {
  const auto few = run({"census", "--count", "3", "--seed", "11"});
  const auto many = run({"census", "--count", "6", "--seed", "11"});
  EXPECT_EQ(many.out.substr(0, few.out.size()), few.out);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run({}).code, kExitUsage);
  EXPECT_EQ(run({"frobnicate"}).code, kExitUsage);
  EXPECT_EQ(run({"nf", data("F1.json")}).code, kExitUsage);
  EXPECT_EQ(run({"--help"}).code, kExitOk);
}

TEST(Cli, AnalyzeIsStableUnderReserialization) {
  for (const auto& [name, g] : gpab::testing::all_fixtures()) {
    const auto direct = analysis_report(g);
    const auto again = analysis_report(parse_graph(serialize_graph(g)));
    EXPECT_EQ(direct.dump(), again.dump()) << name;
    EXPECT_EQ(run({"analyze", data(name + ".json")}).out, direct.dump(2) + "\n") << name;
  }
}
