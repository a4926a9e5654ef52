#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "commands.hpp"
#include "test_support.hpp"

using namespace subsidy;
using namespace subsidy::cli;
using namespace subsidy::testing;

namespace {

std::string data(const char* name) { return std::string(SUBSIDY_DATA_DIR) + "/" + name; }

std::string solve(const char* file, Algorithm a, int* code = nullptr) {
  std::ostringstream out;
  const int rc = cmd_solve({data(file), a, std::nullopt, false}, out);
  if (code) *code = rc;
  return out.str();
}

bool has_line(const std::string& text, const std::string& line) {
  std::istringstream in(text);
  for (std::string l; std::getline(in, l);)
    if (l == line) return true;
  return false;
}

}  // namespace

TEST(Solve, StaircaseMovingKnife) {
  int rc = -1;
  const std::string out = solve("staircase.json", Algorithm::MovingKnifeRoundBest, &rc);
  EXPECT_EQ(rc, kPass);
  EXPECT_TRUE(has_line(out, "total: 51/100")) << out;
  EXPECT_TRUE(has_line(out, "ido total: 51/100")) << out;
  EXPECT_TRUE(has_line(out, "bound: 1")) << out;
  EXPECT_TRUE(has_line(out, "PASS")) << out;
}

TEST(Solve, LoadBalanceLowerBound) {
  int rc = -1;
  const std::string out = solve("lb4.json", Algorithm::LoadBalance, &rc);
  EXPECT_EQ(rc, kPass);
  EXPECT_TRUE(has_line(out, "total: 1")) << out;
  EXPECT_TRUE(has_line(out, "bound: 1")) << out;
}

TEST(Solve, EfsLowerBound) {
  int rc = -1;
  const std::string out = solve("efs_n3.json", Algorithm::Efs, &rc);
  EXPECT_EQ(rc, kPass);
  EXPECT_TRUE(has_line(out, "total: 2")) << out;
  EXPECT_TRUE(has_line(out, "bound: 2")) << out;
}

TEST(Solve, BidAndTakeWeightedPair) {
  const std::string out = solve("weighted_pair.json", Algorithm::BidAndTake);
  EXPECT_TRUE(has_line(out, "total: 0")) << out;
  EXPECT_TRUE(has_line(out, "bound: 1/2")) << out;
}

TEST(Solve, Incompatible) {
  EXPECT_THROW(solve("staircase.json", Algorithm::LoadBalance), Error);
  EXPECT_THROW(solve("weighted_pair.json", Algorithm::MovingKnifeRoundBest), Error);
  std::ostringstream out;
  EXPECT_THROW(cmd_solve({data("efs_n3.json"), Algorithm::Efs, Mode::Goods, false}, out), Error);
  EXPECT_THROW(cmd_solve({data("missing.json"), Algorithm::Efs, std::nullopt, false}, out), Error);
}

TEST(Solve, Decimal) {
  std::ostringstream out;
  cmd_solve({data("staircase.json"), Algorithm::MovingKnifeRoundBest, std::nullopt, true}, out);
  EXPECT_TRUE(has_line(out.str(), "total: 51/100 (0.510000)")) << out.str();
}

TEST(Solve, GeneralInstanceGoesThroughIdo) {
  const std::string path = (std::filesystem::temp_directory_path() / "subsidy_cli_general.json").string();
  std::ofstream(path) << R"({"mode":"chores","costs":[["1","0","1/2"],["0","1","1/2"]]})";
  std::ostringstream out;
  EXPECT_EQ(cmd_solve({path, Algorithm::MovingKnifeRoundBest, std::nullopt, false}, out), kPass);
  EXPECT_NE(out.str().find("ido total: "), std::string::npos);
  std::filesystem::remove(path);
}

TEST(Bench, HeaderOnly) {
  BenchOptions o;
  o.trials = 0;
  std::ostringstream out;
  EXPECT_EQ(cmd_bench(o, out), kPass);
  EXPECT_EQ(out.str(), std::string(kBenchHeader) + "\n");
}

TEST(Bench, MovingKnifeRatio) {
  BenchOptions o;
  o.n = {4, 8};
  o.trials = 100;
  std::ostringstream out;
  EXPECT_EQ(cmd_bench(o, out), kPass);
  std::istringstream in(out.str());
  std::string line;
  std::getline(in, line);
  int rows = 0;
  while (std::getline(in, line)) {
    ++rows;
    std::vector<std::string> cols;
    std::stringstream ss(line);
    for (std::string c; std::getline(ss, c, ',');) cols.push_back(c);
    ASSERT_EQ(cols.size(), 13u);
    EXPECT_LE(Rational::parse(cols[7]), q(1)) << line;
    const auto n = std::stoul(cols[1]);
    EXPECT_GE(n, 4u);
    EXPECT_LE(n, 8u);
  }
  EXPECT_EQ(rows, 100);
}

TEST(Bench, WeightedBidAndTake) {
  BenchOptions o;
  o.algorithm = Algorithm::BidAndTake;
  o.family = Family::WeightedDirichletLike;
  o.trials = 100;
  o.seed = 1000;
  std::ostringstream out;
  EXPECT_EQ(cmd_bench(o, out), kPass);
  std::istringstream in(out.str());
  std::string line;
  std::getline(in, line);
  while (std::getline(in, line)) {
    std::vector<std::string> cols;
    std::stringstream ss(line);
    for (std::string c; std::getline(ss, c, ',');) cols.push_back(c);
    const auto n = static_cast<std::int64_t>(std::stoul(cols[1]));
    EXPECT_LE(Rational::parse(cols[5]), Rational(n - 1, 2)) << line;
  }
}

TEST(Bench, Deterministic) {
  BenchOptions o;
  o.trials = 20;
  o.mode = Mode::Goods;
  std::ostringstream a, b;
  cmd_bench(o, a);
  cmd_bench(o, b);
  EXPECT_EQ(a.str(), b.str());
}

TEST(Range, Parse) {
  EXPECT_EQ(parse_range("2..8").lo, 2u);
  EXPECT_EQ(parse_range("2..8").hi, 8u);
  EXPECT_EQ(parse_range("5").hi, 5u);
  EXPECT_THROW(parse_range("8..2"), Error);
  EXPECT_THROW(parse_range("a..b"), Error);
  EXPECT_THROW(parse_range(""), Error);
}

TEST(Generate, Families) {
  std::ostringstream out;
  GenerateOptions g;
  g.family = "lb-prop";
  g.n = 4;
  cmd_generate(g, out);
  EXPECT_EQ(out.str(), R"({"mode":"chores","costs":[["1","1"],["1","1"],["1","1"],["1","1"]]})"
                       "\n");
  g.family = "nope";
  EXPECT_THROW(cmd_generate(g, out), Error);
}

TEST(Oracle, Commands) {
  std::ostringstream out;
  EXPECT_EQ(cmd_oracle({data("lb4.json"), kDefaultOracleCap, false, false}, out), kPass);
  EXPECT_TRUE(has_line(out.str(), "minimum total subsidy: 1")) << out.str();
  std::ostringstream efs;
  cmd_oracle({data("efs_n3.json"), kDefaultOracleCap, true, false}, efs);
  EXPECT_TRUE(has_line(efs.str(), "minimum envy-free subsidy: 2")) << efs.str();
  EXPECT_THROW(cmd_oracle({data("staircase.json"), 10, false, false}, out), Error);
}

TEST(Verify, Command) {
  const std::string path = (std::filesystem::temp_directory_path() / "subsidy_cli_alloc.json").string();
  std::ofstream(path) << R"({"bundles":[[0,1],[2],[3],[4,5]]})";
  std::ostringstream out;
  EXPECT_EQ(cmd_verify({data("staircase.json"), path, false}, out), kPass);
  EXPECT_TRUE(has_line(out.str(), "subsidies: 51/100 0 0 0")) << out.str();
  EXPECT_TRUE(has_line(out.str(), "prop1: yes")) << out.str();
  std::ofstream(path) << R"({"bundles":[[0,1],[2],[3]]})";
  EXPECT_THROW(cmd_verify({data("staircase.json"), path, false}, out), Error);
  std::filesystem::remove(path);
}
