#include <gtest/gtest.h>

#include <cmath>
#include <sstream>

#include "monoham/experiments.hpp"
#include "monoham/path.hpp"

using namespace monoham;

namespace {

TrialConfig config(std::size_t n, TrialMode mode, Adversary adv) {
  TrialConfig cfg;
  cfg.n = n;
  cfg.mode = mode;
  cfg.adversary = adv;
  return cfg;
}

std::size_t count_lines(const std::string& s) {
  std::size_t lines = 0;
  for (char c : s) lines += c == '\n';
  return lines;
}

void expect_revalidates(const TrialConfig& cfg, const TrialRecord& rec) {
  ColoredGraph g = trial_graph(cfg, rec.seed);
  ReplayResult rp = replay(g, rec.transcript);
  EXPECT_TRUE(rp.ok) << rp.error;
  EXPECT_LE(rec.best_mono, rec.size);
  if (cfg.mode == TrialMode::hamilton) {
    EXPECT_EQ(rec.size, cfg.n);
    EXPECT_EQ(rp.cycle, rec.cycle);
  } else {
    EXPECT_EQ(rec.size, cfg.n / 2);
    EXPECT_EQ(rp.matching.size(), rec.size);
  }
}

}  // namespace

TEST(Config, Validation) {
  EXPECT_THROW(run_hamilton_trial(config(5, TrialMode::hamilton, Adversary::layered), 0), InputError);
  EXPECT_THROW(run_pm_trial(config(201, TrialMode::perfect_matching, Adversary::random), 0), InputError);
  TrialConfig bad = config(100, TrialMode::hamilton, Adversary::random);
  bad.r = 1;
  EXPECT_THROW(bad.validate(), InputError);
  bad.r = 2;
  bad.eps = 0.4;
  EXPECT_THROW(bad.validate(), InputError);
  EXPECT_THROW(parse_adversary("nice"), InputError);
  EXPECT_EQ(parse_mode("perfect_matching"), TrialMode::perfect_matching);
}

TEST(HamiltonTrial, LayeredSmall) {
  TrialConfig cfg = config(200, TrialMode::hamilton, Adversary::layered);
  TrialRecord rec = run_hamilton_trial(cfg, 1);
  ASSERT_TRUE(rec.success) << rec.fail_phase << ": " << rec.detail;
  EXPECT_GE(rec.best_mono, 107u);
  EXPECT_NEAR(rec.bound, (2.0 / 3 - 0.2) * 200, 1e-9);
  expect_revalidates(cfg, rec);
}

TEST(HamiltonTrial, LayeredCompleteHostRespectsCeiling) {
  TrialConfig cfg = config(200, TrialMode::hamilton, Adversary::layered);
  cfg.p = 1.0;
  TrialRecord rec = run_hamilton_trial(cfg, 2);
  ASSERT_TRUE(rec.success) << rec.detail;
  EXPECT_LE(static_cast<double>(rec.best_mono), 2.0 * 200 / 3 + 1);
  EXPECT_LE(rec.best_mono, 2 * ((200 + 2) / 3));
  expect_revalidates(cfg, rec);
}

TEST(PmTrial, RandomSmall) {
  TrialConfig cfg = config(200, TrialMode::perfect_matching, Adversary::random);
  std::size_t hits = 0;
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    TrialRecord rec = run_pm_trial(cfg, seed);
    if (!rec.success) continue;
    expect_revalidates(cfg, rec);
    hits += rec.best_mono >= 47;
  }
  EXPECT_GE(hits, 18u);
}

TEST(PmTrial, LayeredCompleteHostRespectsCeiling) {
  TrialConfig cfg = config(200, TrialMode::perfect_matching, Adversary::layered);
  cfg.p = 1.0;
  TrialRecord rec = run_pm_trial(cfg, 3);
  ASSERT_TRUE(rec.success) << rec.detail;
  EXPECT_LE(rec.best_mono, 200u / 3);
  expect_revalidates(cfg, rec);
}

TEST(PmTrial, FailuresAreRecords) {
  // Far below the matching threshold isolated vertices are certain.
  TrialConfig cfg = config(100, TrialMode::perfect_matching, Adversary::random);
  cfg.p = 0.01;
  TrialRecord rec = run_pm_trial(cfg, 0);
  EXPECT_FALSE(rec.success);
  EXPECT_FALSE(rec.fail_phase.empty());
}

TEST(Suite, EmptySeeds) {
  TrialConfig cfg = config(100, TrialMode::hamilton, Adversary::random);
  SuiteResult s = run_suite(cfg);
  EXPECT_TRUE(s.records.empty());
  EXPECT_EQ(s.summary.trials, 0u);
}

TEST(Suite, Deterministic) {
  TrialConfig cfg = config(300, TrialMode::hamilton, Adversary::random);
  cfg.seeds = {4, 1, 9, 2};
  SuiteResult a = run_suite(cfg);
  cfg.threads = 1;
  SuiteResult b = run_suite(cfg);
  ASSERT_EQ(a.records.size(), 4u);
  EXPECT_EQ(a.records, b.records);
  for (std::size_t i = 0; i < 4; ++i) EXPECT_EQ(a.records[i].seed, cfg.seeds[i]);
}

TEST(Suite, GreedyAdversaryRuns) {
  TrialConfig cfg = config(300, TrialMode::hamilton, Adversary::greedy);
  cfg.adversary_rounds = 20;
  cfg.seeds = {0, 1};
  SuiteResult s = run_suite(cfg);
  for (const TrialRecord& rec : s.records)
    if (rec.success) expect_revalidates(cfg, rec);
}

TEST(Report, CsvShape) {
  EXPECT_EQ(emit_report({}, "csv"), "seed,success,size,best_mono,bound,off_color,ms_total,fail_phase\n");
  TrialRecord rec;
  rec.seed = 3;
  rec.success = true;
  rec.size = 10;
  rec.best_mono = 7;
  rec.bound = 4.6666;
  rec.off_color = 3;
  const std::string csv = emit_report({rec}, "csv");
  EXPECT_EQ(count_lines(csv), 2u);
  EXPECT_NE(csv.find("\n3,1,10,7,4.67,3,"), std::string::npos);
  EXPECT_NE(emit_report({rec}, "tsv").find("3\t1\t10\t7"), std::string::npos);
  EXPECT_THROW(emit_report({rec}, "xml"), InputError);
}

TEST(Report, SummaryBlock) {
  std::vector<TrialRecord> recs(20);
  for (std::size_t i = 0; i < 20; ++i) {
    recs[i].seed = i;
    recs[i].success = i % 4 != 0;
    recs[i].best_mono = 10 + i;
    recs[i].bound = 12;
  }
  const std::string s = emit_report(recs, "summary");
  EXPECT_EQ(count_lines(s), 5u);
  for (const char* key : {"trials", "success_rate", "mean_best_mono", "min_best_mono", "bound_rate"})
    EXPECT_NE(s.find(key), std::string::npos) << key;
  Summary sum = summarize(recs);
  EXPECT_EQ(sum.trials, 20u);
  EXPECT_DOUBLE_EQ(sum.success_rate, 0.75);
}

TEST(Suite, BoundRateNearThreshold) {
  TrialConfig cfg = config(3000, TrialMode::hamilton, Adversary::random);
  for (std::uint64_t s = 0; s < 20; ++s) cfg.seeds.push_back(s);
  SuiteResult res = run_suite(cfg);
  EXPECT_GE(res.summary.bound_rate, 0.9);
  for (const TrialRecord& rec : res.records)
    if (rec.success) {
      EXPECT_TRUE(is_hamilton_cycle(trial_graph(cfg, rec.seed), rec.cycle));
    }
}
