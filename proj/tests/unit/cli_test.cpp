/*
   Copyright 2026 The rulelab Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

       http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
 */

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "oracles.hpp"
#include "rulelab/cli.hpp"
#include "rulelab/report.hpp"
#include "rulelab/rule_io.hpp"

namespace rulelab {
namespace {

namespace fs = std::filesystem;

struct Invocation {
  int code = 0;
  std::string out;
  std::string err;
};

Invocation invoke(std::vector<std::string> args) {
  std::ostringstream out, err;
  Invocation r;
  r.code = cli::run(args, out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("rulelab_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string path(const std::string& name) const { return (dir_ / name).string(); }
  std::string weather() const { return testing::data_path("weather.csv"); }

  fs::path dir_;
};

TEST_F(CliTest, HelpAndVersionExitZero) {
  EXPECT_EQ(invoke({"--help"}).code, cli::kExitOk);
  const auto v = invoke({"--version"});
  EXPECT_EQ(v.code, cli::kExitOk);
  EXPECT_NE(v.out.find("0.1.0"), std::string::npos);
}

TEST_F(CliTest, UsageErrorsExitOne) {
  EXPECT_EQ(invoke({}).code, cli::kExitUsage);
  EXPECT_EQ(invoke({"frobnicate"}).code, cli::kExitUsage);
  EXPECT_EQ(invoke({"mine"}).code, cli::kExitUsage);
  EXPECT_EQ(invoke({"mine", "-i", weather(), "--min-support", "1.5"}).code, cli::kExitUsage);
  const auto bad = invoke({"experiment", "-i", weather(), "-m", "lift,bogus", "-d", path("r")});
  EXPECT_EQ(bad.code, cli::kExitUsage);
  EXPECT_NE(bad.err.find("bogus"), std::string::npos);
  EXPECT_EQ(invoke({"experiment", "-d", path("r")}).code, cli::kExitUsage);
  EXPECT_EQ(invoke({"experiment", "--synthetic", "-i", weather(), "-d", path("r")}).code,
            cli::kExitUsage);
  EXPECT_EQ(invoke({"cover", "-r", path("x"), "--mode", "by_color"}).code, cli::kExitUsage);
  EXPECT_EQ(invoke({"experiment", "-i", weather(), "--top", "0%", "-d", path("r")}).code,
            cli::kExitUsage);
}

TEST_F(CliTest, DataErrorsExitTwo) {
  const auto missing = invoke({"mine", "-i", path("nope.csv")});
  EXPECT_EQ(missing.code, cli::kExitData);
  EXPECT_EQ(missing.err.rfind("error: ", 0), 0u);
  std::ofstream(path("bad.jsonl")) << "{not json\n";
  EXPECT_EQ(invoke({"measures", "-r", path("bad.jsonl")}).code, cli::kExitData);
  const auto none = invoke(
      {"experiment", "-i", weather(), "--min-support", "0.9", "-d", path("r")});
  EXPECT_EQ(none.code, cli::kExitData);
  EXPECT_NE(none.err.find("no rules"), std::string::npos);
}

TEST_F(CliTest, MineWeatherWritesSeventeenRules) {
  const auto r = invoke({"mine", "-i", weather(), "--min-support", "0.2", "--min-confidence",
                         "0.7", "-o", path("rules.jsonl")});
  ASSERT_EQ(r.code, cli::kExitOk) << r.err;
  EXPECT_EQ(r.err, "17 rules written\n");
  std::ifstream in(path("rules.jsonl"));
  const RuleSet rs = read_rules(in);
  EXPECT_EQ(rs.rules.size(), 17u);
  EXPECT_EQ(rs.n_records, 14u);

  const auto stdout_run =
      invoke({"mine", "-i", weather(), "--min-support", "0.2", "--min-confidence", "0.7"});
  EXPECT_EQ(stdout_run.out, slurp(path("rules.jsonl")));
}

TEST_F(CliTest, DumpItemsListsCatalog) {
  const auto r = invoke({"dump-items", "-i", weather()});
  ASSERT_EQ(r.code, cli::kExitOk) << r.err;
  EXPECT_NE(r.out.find("1\tOutlook=overcast\t4"), std::string::npos);
  EXPECT_NE(r.out.find("11\tPlay=yes\t9"), std::string::npos);
}

TEST_F(CliTest, GenIsDeterministic) {
  const std::vector<std::string> args{"gen", "--records", "50", "--attributes", "6", "--seed", "9"};
  const auto a = invoke(args);
  const auto b = invoke(args);
  ASSERT_EQ(a.code, cli::kExitOk);
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(a.err, "50 records written\n");
  auto other = args;
  other.back() = "10";
  EXPECT_NE(invoke(other).out, a.out);
}

TEST_F(CliTest, MeasuresSubsetHeader) {
  ASSERT_EQ(invoke({"mine", "-i", weather(), "--min-support", "0.2", "--min-confidence", "0.7",
                    "-o", path("rules.jsonl")})
                .code,
            0);
  const auto r = invoke({"measures", "-r", path("rules.jsonl"), "-m", "confidence,conviction"});
  ASSERT_EQ(r.code, cli::kExitOk) << r.err;
  EXPECT_EQ(r.out.substr(0, r.out.find('\n')), "mining_index,confidence,conviction");
}

// The step-by-step commands and the one-shot experiment agree byte for byte.
TEST_F(CliTest, PipelineMatchesExperimentIntermediates) {
  const std::vector<std::string> mining{"--min-support", "0.2", "--min-confidence", "0.7"};
  auto mine_args = std::vector<std::string>{"mine", "-i", weather(), "-o", path("rules.jsonl")};
  mine_args.insert(mine_args.end(), mining.begin(), mining.end());
  ASSERT_EQ(invoke(mine_args).code, 0);
  ASSERT_EQ(invoke({"measures", "-r", path("rules.jsonl"), "-o", path("measures.csv")}).code, 0);
  ASSERT_EQ(invoke({"cover", "-r", path("rules.jsonl"), "-o", path("cover.txt")}).code, 0);

  auto exp_args = std::vector<std::string>{"experiment", "-i", weather(), "-d", path("exp"),
                                           "--keep-intermediates"};
  exp_args.insert(exp_args.end(), mining.begin(), mining.end());
  const auto r = invoke(exp_args);
  ASSERT_EQ(r.code, cli::kExitOk) << r.err;
  EXPECT_NE(r.err.find("17 rules, 6 clusters, 39 measures"), std::string::npos) << r.err;
  for (const char* f : {"rules.jsonl", "measures.csv", "cover.txt"}) {
    EXPECT_EQ(slurp(path(f)), slurp(dir_ / "exp" / f)) << f;
  }
  for (const char* f : {"appendix.csv", "summary.csv", "figure_by_cluster.csv",
                        "figure_by_common.csv", "summary.md"}) {
    EXPECT_TRUE(fs::exists(dir_ / "exp" / f)) << f;
  }
}

TEST_F(CliTest, ExperimentIdentityPruningFromCli) {
  const auto r = invoke({"experiment", "-i", weather(), "--min-support", "0.2",
                         "--min-confidence", "0.7", "--top", "100%", "-d", path("exp")});
  ASSERT_EQ(r.code, cli::kExitOk) << r.err;
  std::ifstream in(dir_ / "exp" / "appendix.csv");
  const AppendixTable t = read_appendix_csv(in);
  ASSERT_GE(t.rows.size(), 2u);
  for (std::size_t i = 2; i < t.rows.size(); ++i) {
    EXPECT_EQ(t.rows[i].counts, t.rows[i % 2].counts) << t.rows[i].measure;
    EXPECT_EQ(t.rows[i].total, t.rows[i % 2].total) << t.rows[i].measure;
  }
}

TEST_F(CliTest, SyntheticExperimentRecordsSeed) {
  const auto r = invoke({"experiment", "--synthetic", "--records", "300", "--attributes", "12",
                         "--seed", "5", "-m", "lift,confidence", "-d", path("exp")});
  ASSERT_EQ(r.code, cli::kExitOk) << r.err;
  const std::string md = slurp(dir_ / "exp" / "summary.md");
  EXPECT_NE(md.find("seed: 5"), std::string::npos) << md;
}

}  // namespace
}  // namespace rulelab
