#include "inselim/cli.hpp"

#include <gtest/gtest.h>

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

namespace inselim {
namespace {

struct RunResult {
  int code;
  std::string out;
  std::string err;
};

RunResult run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = run_cli(std::move(args), out, err);
  return {code, out.str(), err.str()};
}

TEST(CliTrees, EnumerateSizeFour) {
  auto r = run({"trees", "enumerate", "--n", "4"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "[\"(((())))\",\"((()()))\",\"((())())\",\"(()()())\"]\n");
}

TEST(CliTrees, EnumerateWithStats) {
  auto r = run({"trees", "enumerate", "--n", "2", "--stats"});
  EXPECT_EQ(r.code, 0);
  auto j = nlohmann::ordered_json::parse(r.out);
  ASSERT_EQ(j.size(), 1u);
  EXPECT_EQ(j[0]["tree"], "(())");
  EXPECT_EQ(j[0]["size"], 2);
  EXPECT_EQ(j[0]["depth"], 1);
  EXPECT_EQ(j[0]["rdeg"], 1);
  EXPECT_EQ(j[0]["compsize"], 1);
}

TEST(CliTrees, EnumerateRejectsNonPositive) {
  auto r = run({"trees", "enumerate", "--n", "0"});
  EXPECT_EQ(r.code, 2);
  EXPECT_TRUE(r.out.empty());
  EXPECT_FALSE(r.err.empty());
}

TEST(CliTrees, XiOfPicturedTree) {
  auto r = run({"trees", "xi", "((()())()()())"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "{\"tree\":\"((()())()()())\",\"xi\":\"12\"}\n");
}

TEST(CliTrees, XiCanonicalizesInput) {
  auto r = run({"trees", "xi", "(()(()))"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "{\"tree\":\"((())())\",\"xi\":\"1\"}\n");
}

TEST(CliTrees, ParseErrorReportsOffset) {
  auto r = run({"trees", "xi", "(()"});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("byte 3"), std::string::npos) << r.err;
}

TEST(CliBracket, PaperExample) {
  auto r = run({"bracket", "+()", "+(()())"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "{\"plus\":{\"((()()))\":\"-1\",\"((())())\":\"2\",\"(()()())\":\"1\"}}\n");
}

TEST(CliBracket, LatexOutput) {
  auto r = run({"bracket", "+()", "+(())", "--format", "latex"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "D^{+}_{(()())}\n");
  auto mixed = run({"--format", "latex", "bracket", "-()", "-(()())"});
  EXPECT_EQ(mixed.code, 0);
  EXPECT_EQ(mixed.out,
            "D^{-}_{((()()))} - D^{-}_{((())())} - 3 D^{-}_{(()()())}\n");
}

TEST(CliBracket, RejectsMalformedBasis) {
  EXPECT_EQ(run({"bracket", "+()", "nonsense"}).code, 2);
  EXPECT_EQ(run({"bracket", "+()"}).code, 2);
}

TEST(CliSigma, BasisAndJsonInputsAgree) {
  auto from_basis = run({"sigma", "+(()())"});
  EXPECT_EQ(from_basis.code, 0);
  EXPECT_EQ(from_basis.out, "{\"minus\":{\"(()())\":\"2\"}}\n");
  auto from_json = run({"sigma", "{\"plus\":{\"(()())\":\"1\"}}"});
  EXPECT_EQ(from_json.code, 0);
  EXPECT_EQ(from_json.out, from_basis.out);
}

TEST(CliTau, ZetaAndZero) {
  auto scaled = run({"tau", "--zeta", "2", "+(()())"});
  EXPECT_EQ(scaled.code, 0);
  EXPECT_EQ(scaled.out, "{\"plus\":{\"(()())\":\"8\"}}\n");
  auto zero = run({"tau", "--zero", "d"});
  EXPECT_EQ(zero.code, 0);
  EXPECT_EQ(zero.out, "{\"d\":\"-1\"}\n");
  EXPECT_EQ(run({"tau", "d"}).code, 2);
  EXPECT_EQ(run({"tau", "--zeta", "0", "d"}).code, 2);
}

TEST(CliDecompose, CherryAndCheck) {
  auto r = run({"decompose", "+(()())"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "{\"bracket\":[{\"gen\":\"+()\"},{\"gen\":\"+(())\"}]}\n");
  auto checked = run({"decompose", "+(()()())", "--check"});
  EXPECT_EQ(checked.code, 0);
  EXPECT_EQ(run({"decompose", "d"}).code, 2);
  EXPECT_EQ(run({"decompose", "-(())"}).code, 2);
}

TEST(CliVerify, XiIdentitySmall) {
  auto r = run({"verify", "xi-identity", "--max-degree", "4"});
  EXPECT_EQ(r.code, 0);
  auto j = nlohmann::ordered_json::parse(r.out);
  EXPECT_EQ(j["suite"], "xi-identity");
  EXPECT_EQ(j["pass"], true);
  EXPECT_TRUE(j["violations"].empty());
  EXPECT_FALSE(j.contains("elapsed_ms"));
}

TEST(CliVerify, ByteIdenticalAcrossRunsAndJobs) {
  auto a = run({"verify", "jacobi", "--max-degree", "4", "--jobs", "1"});
  auto b = run({"verify", "jacobi", "--max-degree", "4", "--jobs", "3"});
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
}

TEST(CliVerify, TimingsAreOptIn) {
  auto timed = run({"verify", "grading", "--max-degree", "3", "--timings"});
  EXPECT_EQ(timed.code, 0);
  auto j = nlohmann::ordered_json::parse(timed.out);
  EXPECT_TRUE(j.contains("elapsed_ms"));
}

TEST(CliVerify, SelfCentralizingSeedRecorded) {
  auto r = run({"verify", "self-centralizing", "--max-degree", "2", "--trials", "3"});
  EXPECT_EQ(r.code, 0);
  auto j = nlohmann::ordered_json::parse(r.out);
  EXPECT_EQ(j["params"]["seed"], 42);
  EXPECT_EQ(j["pass"], true);
}

TEST(CliVerify, LadderFreeRunsUnderVerify) {
  auto r = run({"verify", "ladder-free", "--max-degree", "3"});
  EXPECT_EQ(r.code, 0);
  auto j = nlohmann::ordered_json::parse(r.out);
  EXPECT_EQ(j["pass"], true);
}

TEST(CliVerify, UnknownSuiteIsUsageError) {
  EXPECT_EQ(run({"verify", "bogus", "--max-degree", "3"}).code, 2);
}

TEST(CliVerify, OutWritesTheSameBytes) {
  std::string path = "cli_report_out.json";
  auto r = run({"verify", "antisymmetry", "--max-degree", "3", "--out", path});
  EXPECT_EQ(r.code, 0);
  std::ifstream f(path);
  ASSERT_TRUE(f.good());
  std::stringstream content;
  content << f.rdbuf();
  EXPECT_EQ(content.str(), r.out);
  f.close();
  std::remove(path.c_str());
}

TEST(CliDerivations, TruncationOne) {
  auto r = run({"derivations", "--truncate", "1"});
  EXPECT_EQ(r.code, 0);
  auto j = nlohmann::ordered_json::parse(r.out);
  EXPECT_EQ(j["truncate"], 1);
  EXPECT_EQ(j["dimension"], 1);
  ASSERT_EQ(j["basis"].size(), 1u);
}

TEST(CliVirasoro, BracketFixture) {
  auto r = run({"virasoro", "bracket", "--q", "1", "--alpha", "1", "--beta", "-1"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "{\"z\":\"-1\",\"e\":{\"0\":\"-2\"}}\n");
}

TEST(CliVirasoro, VerifyAndErrors) {
  auto r = run({"virasoro", "verify", "jacobi", "--q", "2", "--bound", "3"});
  EXPECT_EQ(r.code, 0);
  auto j = nlohmann::ordered_json::parse(r.out);
  EXPECT_EQ(j["pass"], true);
  EXPECT_EQ(run({"virasoro", "verify", "bogus", "--q", "1", "--bound", "3"}).code, 2);
  EXPECT_EQ(
      run({"virasoro", "verify", "kappa_hom", "--q", "1", "--bound", "3", "--zeta", "2"}).code,
      2);
  EXPECT_EQ(run({"virasoro", "bracket", "--q", "2", "--alpha", "1/3", "--beta", "1"}).code, 2);
}

TEST(CliUsage, UnknownVerbAndHelp) {
  EXPECT_EQ(run({"frobnicate"}).code, 2);
  EXPECT_EQ(run({}).code, 2);
  auto help = run({"--help"});
  EXPECT_EQ(help.code, 0);
  EXPECT_NE(help.out.find("verify"), std::string::npos);
}

TEST(CliUsage, LatexRestrictedToElementOutput) {
  EXPECT_EQ(run({"trees", "enumerate", "--n", "2", "--format", "latex"}).code, 2);
  EXPECT_EQ(run({"verify", "jacobi", "--max-degree", "2", "--format", "latex"}).code, 2);
}

}  // namespace
}  // namespace inselim
