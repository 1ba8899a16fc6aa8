// Copyright 2026 The crfc Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "crfc/experiments/experiments.hpp"
#include "crfc/experiments/stats.hpp"

namespace crfc::experiments {
namespace {

// Drop the trailing elapsed_us column from every CSV line.
std::string without_timing(const std::string& csv) {
  std::istringstream in(csv);
  std::string line;
  std::string out;
  while (std::getline(in, line)) out += line.substr(0, line.rfind(',')) + '\n';
  return out;
}

double cell_value(const ExperimentResult& r, std::size_t cell, const char* key) {
  return r.summary["cells"][cell][key].get<double>();
}

TEST(ConfigTest, ParsesFlatDocument) {
  const auto c = Config::parse(R"(
# comment
experiment = "rank"
k = [16, 32]   # trailing comment
epsilon = 4
ensemble = log
name = "a # not a comment"
flag = true
rate = 0.25
)");
  EXPECT_EQ(c.get_string("experiment", ""), "rank");
  EXPECT_EQ(c.get_uint_list("k", {}), (std::vector<std::uint64_t>{16, 32}));
  EXPECT_EQ(c.get_uint_list("epsilon", {}), (std::vector<std::uint64_t>{4}));
  EXPECT_EQ(c.get_string("ensemble", ""), "log");
  EXPECT_EQ(c.get_string("name", ""), "a # not a comment");
  EXPECT_TRUE(c.get_bool("flag", false));
  EXPECT_DOUBLE_EQ(c.get_double("rate", 0), 0.25);
  EXPECT_EQ(c.get_uint("missing", 7), 7U);
  EXPECT_THROW(c.get_uint("k", 0), ConfigError);
  EXPECT_THROW(c.get_uint("ensemble", 0), ConfigError);
  EXPECT_THROW(c.reject_unknown({"experiment", "k"}), ConfigError);
}

TEST(ConfigTest, RejectsMalformedLines) {
  EXPECT_THROW(Config::parse("k 3"), ConfigError);
  EXPECT_THROW(Config::parse("k = 1\nk = 2"), ConfigError);
  EXPECT_THROW(Config::parse("[section]"), ConfigError);
  EXPECT_THROW(Config::parse("k = [1, 2"), ConfigError);
  EXPECT_THROW(Config::parse("s = \"open"), ConfigError);
  EXPECT_THROW(Config::parse("Bad-Key = 1"), ConfigError);
}

TEST(StatsTest, WilsonKnownValues) {
  const auto zero = wilson(0, 10);
  EXPECT_DOUBLE_EQ(zero.lo, 0.0);
  EXPECT_NEAR(zero.hi, 0.2775, 1e-4);
  const auto half = wilson(5, 10);
  EXPECT_NEAR(half.lo, 0.2366, 1e-4);
  EXPECT_NEAR(half.hi, 0.7634, 1e-4);
  EXPECT_NEAR(binomial_sigma(0.5, 100), 0.05, 1e-12);
}

TEST(HarnessTest, RecordsIndependentOfThreadCount) {
  auto fn = [](std::size_t t, std::uint64_t seed) {
    TrialRecord r;
    r.outcome = std::to_string(Rng(seed).next_u64() % 1000 + t);
    return r;
  };
  const auto one = run_trials(50, 9, 2, 1, fn);
  const auto four = run_trials(50, 9, 2, 4, fn);
  for (std::size_t t = 0; t < 50; ++t) {
    EXPECT_EQ(one[t].outcome, four[t].outcome);
    EXPECT_EQ(one[t].trial_seed, trial_seed(9, 2, t));
  }
  EXPECT_THROW(run_trials(10, 1, 0, 2, [](std::size_t t, std::uint64_t) -> TrialRecord {
                 if (t == 3) throw std::runtime_error("boom");
                 return {};
               }),
               std::runtime_error);
}

TEST(HarnessTest, CsvQuotesAndHeader) {
  TrialRecord r;
  r.experiment = "x";
  r.cell = "a,b";
  r.metric = 0.5;
  const auto csv = to_csv(std::vector<TrialRecord>{r});
  EXPECT_EQ(csv.substr(0, csv.find('\n')), kCsvHeader);
  EXPECT_NE(csv.find("\"a,b\""), std::string::npos);
  EXPECT_NE(csv.find("0.500000"), std::string::npos);
}

TEST(RankExperimentTest, TallMatricesNeverFail) {
  const auto r = run_rank_experiment(Config::parse("k = 8\nepsilon = 40\ntrials = 200"));
  EXPECT_EQ(cell_value(r, 0, "failures"), 0.0);
}

TEST(RankExperimentTest, SquareUniformNearLimit) {
  const auto r = run_rank_experiment(Config::parse("k = 32\nepsilon = 0\ntrials = 4000\nseed = 5"));
  EXPECT_NEAR(cell_value(r, 0, "failure_rate"), 0.7112, 0.03);
  EXPECT_NEAR(cell_value(r, 0, "limit"), 0.7112119049133976, 1e-12);
}

TEST(RankExperimentTest, RejectsUnknownKeysAndBadDensity) {
  EXPECT_THROW(run_rank_experiment(Config::parse("k = 8\nbogus = 1")), ConfigError);
  EXPECT_THROW(run_rank_experiment(Config::parse("k = 4\nensemble = log")), ConfigError);
  EXPECT_THROW(run_experiment("rank", Config::parse("experiment = attack")), ConfigError);
  EXPECT_THROW(run_experiment("nope", Config::parse("")), ConfigError);
}

TEST(DecoderBenchmarkTest, DeterministicAcrossRunsAndThreads) {
  const char* text = "decoder = cross\nk = 8\nf = 2\nepsilon = 4\ntrials = 30\nseed = 11\n";
  auto c1 = Config::parse(text);
  auto c2 = Config::parse(std::string(text) + "threads = 3\n");
  const auto a = run_decoder_benchmark(c1);
  const auto b = run_decoder_benchmark(c2);
  EXPECT_EQ(without_timing(to_csv(a.records)), without_timing(to_csv(b.records)));
  for (const auto& rec : a.records) EXPECT_EQ(rec.outcome, "agree");
}

TEST(DecoderBenchmarkTest, CleanChannelAllDecoders) {
  for (const char* d : {"majority", "exhaustive", "randomized"}) {
    const auto r = run_decoder_benchmark(
        Config::parse(std::string("decoder = ") + d + "\nk = 10\nf = 0\nepsilon = 8\nm = 3\ntrials = 40"));
    EXPECT_GE(cell_value(r, 0, "success_rate"), 0.95) << d;
  }
  const auto bp = run_decoder_benchmark(Config::parse("decoder = bp\nk = 50\noverhead = 3\ntrials = 20"));
  EXPECT_GE(cell_value(bp, 0, "success_rate"), 0.9);
}

TEST(AttackCampaignTest, OddAndVanish) {
  const auto odd = run_attack_campaign(Config::parse("attack = odd\nk = 500\ntrials = 30"));
  EXPECT_GT(cell_value(odd, 0, "feasibility_rate"), 0.5);
  EXPECT_DOUBLE_EQ(cell_value(odd, 0, "mean_complemented_fraction"), 1.0);
  const auto vanish = run_attack_campaign(Config::parse("attack = vanish\nk = 100\ntrials = 30"));
  EXPECT_DOUBLE_EQ(cell_value(vanish, 0, "unrecovered_rate"), 1.0);
  EXPECT_THROW(run_attack_campaign(Config::parse("attack = vanish\nf = 2")), ConfigError);
}

TEST(AttackCampaignTest, FlipAgainstExhaustive) {
  const auto r = run_attack_campaign(
      Config::parse("attack = flip\ndecoder = exhaustive\nk = 10\nf = 2\nepsilon = 4\npackets = 60\ntrials = 40"));
  EXPECT_EQ(cell_value(r, 0, "wrong_blocks"), 0.0);
  EXPECT_GE(cell_value(r, 0, "success_rate"), 0.95);
}

TEST(SharedValueTest, Scenarios) {
  const auto honest = run_shared_value_scenario(Config::parse("sources = 1\nbyzantine = 0\ntrials = 20"));
  EXPECT_DOUBLE_EQ(cell_value(honest, 0, "success_rate"), 1.0);

  const auto r = run_shared_value_scenario(Config::parse("sources = 10\nbyzantine = [3, 4]\ntrials = 40"));
  EXPECT_GE(cell_value(r, 0, "success_rate"), 0.95);
  EXPECT_EQ(cell_value(r, 1, "wrong_blocks"), 0.0);
  EXPECT_EQ(cell_value(r, 1, "success_rate"), 0.0);
}

TEST(WriteResultsTest, WritesCsvAndSummary) {
  const auto dir = std::filesystem::temp_directory_path() / "crfc_experiments_test";
  std::filesystem::remove_all(dir);
  const auto r = run_rank_experiment(Config::parse("k = 8\nepsilon = 2\ntrials = 5"));
  write_results(r, dir);
  std::ifstream csv(dir / "rank.csv");
  std::string header;
  std::getline(csv, header);
  EXPECT_EQ(header, kCsvHeader);
  EXPECT_TRUE(std::filesystem::exists(dir / "rank.summary.json"));
  std::filesystem::remove_all(dir);
}

}  // namespace
}  // namespace crfc::experiments
