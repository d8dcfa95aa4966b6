#include <gtest/gtest.h>

#include <sstream>

#include "oracles.hpp"
#include "permreg/csv.hpp"
#include "permreg/errors.hpp"
#include "permreg/harness.hpp"

namespace permreg {
namespace {

std::string to_csv(const ResultTable& t) {
  std::ostringstream out;
  emit_csv(t, out);
  return out.str();
}

ExperimentConfig small_config() {
  ExperimentConfig cfg;
  cfg.grid = {{6, 3, 2}, {12, 4, 2}};
  cfg.sigmas = {0.5, 1.0};
  cfg.trials = 3;
  cfg.estimators = {Estimator::kMle, Estimator::kSvt, Estimator::kSrLasso,
                    Estimator::kLevSort};
  cfg.master_seed = 42;
  cfg.record_timing = false;
  return cfg;
}

TEST(RunExperiment, LevSortNoiselessCellIsExact) {
  ExperimentConfig cfg;
  cfg.grid = {{50, 2, 2}};
  cfg.sigmas = {0.0};
  cfg.trials = 1;
  cfg.estimators = {Estimator::kLevSort};
  const auto t = run_experiment(cfg);
  ASSERT_EQ(t.records.size(), 1u);
  EXPECT_LE(*t.records[0].normalized_error, 1e-16);
}

TEST(RunExperiment, RecordOrderAndSkips) {
  const auto t = run_experiment(small_config());
  ASSERT_EQ(t.records.size(), 2u * 2 * 4 * 3);
  // Cell-major, then estimator, then trial.
  EXPECT_EQ(t.records[0].estimator, Estimator::kMle);
  EXPECT_EQ(t.records[0].n, 6);
  EXPECT_EQ(t.records[0].sigma, 0.5);
  EXPECT_EQ(t.records[2].trial, 2u);
  EXPECT_EQ(t.records[3].estimator, Estimator::kSvt);
  EXPECT_EQ(t.records[12].sigma, 1.0);
  // n = 12 exceeds the default permutation cap of 9.
  for (const auto& r : t.records) {
    if (r.estimator == Estimator::kMle && r.n == 12) {
      EXPECT_TRUE(r.skipped());
      EXPECT_EQ(r.skip_reason, "InstanceTooLarge");
    } else {
      ASSERT_FALSE(r.skipped());
      EXPECT_GE(*r.normalized_error, 0.0);
    }
  }
  // Estimators of one trial share the instance.
  EXPECT_EQ(t.records[0].seed, t.records[3].seed);
  EXPECT_EQ(t.records[0].seed, derive_seed(42, 0, 0));
}

TEST(RunExperiment, SvtWithZeroSigmaIsSkipped) {
  ExperimentConfig cfg;
  cfg.grid = {{8, 8, 1}};
  cfg.sigmas = {0.0};
  cfg.estimators = {Estimator::kSvt};
  const auto t = run_experiment(cfg);
  EXPECT_EQ(t.records[0].skip_reason, "SigmaZero");
  EXPECT_NE(to_csv(t).find("skipped:SigmaZero"), std::string::npos);
}

TEST(RunExperiment, MleBasicInequalityPerTrial) {
  auto cfg = small_config();
  cfg.estimators = {Estimator::kMle};
  cfg.grid = {{6, 3, 2}};
  cfg.trials = 20;
  for (const auto& r : run_experiment(cfg).records) {
    EXPECT_LE(*r.normalized_error, 4.0 * r.noise_energy * (1 + 1e-12));
    EXPECT_LE(r.objective / 18.0, r.noise_energy * (1 + 1e-12));
  }
}

TEST(RunExperiment, DeterministicAcrossRunsAndThreadCounts) {
  auto cfg = small_config();
  const std::string serial = to_csv(run_experiment(cfg));
  EXPECT_EQ(serial, to_csv(run_experiment(cfg)));
  cfg.threads = 4;
  EXPECT_EQ(serial, to_csv(run_experiment(cfg)));
  cfg.threads = 0;
  EXPECT_EQ(serial, to_csv(run_experiment(cfg)));
}

TEST(RunExperiment, InvalidConfigs) {
  auto cfg = small_config();
  cfg.trials = 0;
  EXPECT_THROW(run_experiment(cfg), Error);
  cfg = small_config();
  cfg.grid = {{0, 3, 1}};
  EXPECT_THROW(run_experiment(cfg), Error);
  cfg = small_config();
  cfg.estimators.clear();
  EXPECT_THROW(run_experiment(cfg), Error);
}

TEST(FitSlope, ExactPowerLaws) {
  const std::vector<std::pair<double, double>> a{{1, 1}, {10, 0.1}, {100, 0.01}};
  EXPECT_NEAR(fit_loglog_slope(a), -1.0, 1e-12);
  const std::vector<std::pair<double, double>> b{{2, 5}, {4, 5}};
  EXPECT_NEAR(fit_loglog_slope(b), 0.0, 1e-15);
  std::vector<std::pair<double, double>> c;
  for (double x : {1.0, 2.0, 4.0, 8.0}) c.push_back({x, 3.0 / (x * x)});
  EXPECT_NEAR(fit_loglog_slope(c), -2.0, 1e-12);
}

TEST(FitSlope, Errors) {
  const std::vector<std::pair<double, double>> same{{2, 1}, {2, 3}};
  try {
    fit_loglog_slope(same);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kDegenerateFit);
  }
  const std::vector<std::pair<double, double>> one{{2, 1}};
  EXPECT_THROW(fit_loglog_slope(one), Error);
  const std::vector<std::pair<double, double>> neg{{2, 1}, {3, -1}};
  EXPECT_THROW(fit_loglog_slope(neg), Error);
}

TEST(Csv, HeaderOnlyAndSingleRecord) {
  ResultTable t;
  EXPECT_EQ(to_csv(t), std::string(kResultCsvHeader) + "\n");
  ResultRecord r;
  r.normalized_error = 0.1;
  t.records.push_back(r);
  const std::string text = to_csv(t);
  EXPECT_EQ(std::count(text.begin(), text.end(), '\n'), 2);
  EXPECT_NE(text.find("svt,0,0,0,0,0,permutation,0,0,0.10000000000000001,0"),
            std::string::npos);
}

TEST(Csv, RoundTripHundredRecords) {
  ExperimentConfig cfg;
  cfg.grid = {{10, 5, 2}, {20, 6, 3}};
  cfg.sigmas = {0.3, 1.7};
  cfg.trials = 5;
  cfg.estimators = {Estimator::kSvt, Estimator::kSrLasso, Estimator::kLevSort,
                    Estimator::kMle};
  cfg.master_seed = 9;
  cfg.record_timing = true;
  const auto table = run_experiment(cfg);
  ASSERT_EQ(table.records.size(), 80u);

  // 100 records: the 80 from the sweep plus 20 synthetic ones.
  ResultTable t = table;
  for (int i = 0; i < 20; ++i) {
    ResultRecord r = table.records[static_cast<std::size_t>(i)];
    r.trial = 100 + static_cast<std::size_t>(i);
    r.seed = ~std::uint64_t{0} - static_cast<std::uint64_t>(i);
    r.normalized_error = 1e-300 * (i + 1);
    r.model = Model::kClustering;
    t.records.push_back(r);
  }
  const auto rows = oracle::parse_csv(to_csv(t));
  ASSERT_EQ(rows.size(), 101u);
  EXPECT_EQ(rows[0].size(), 11u);
  for (std::size_t i = 0; i < t.records.size(); ++i) {
    const auto& f = rows[i + 1];
    const auto& r = t.records[i];
    ASSERT_EQ(f.size(), 11u);
    EXPECT_EQ(parse_estimator(f[0]), r.estimator);
    EXPECT_EQ(std::stol(f[1]), r.n);
    EXPECT_EQ(std::stol(f[2]), r.m);
    EXPECT_EQ(std::stol(f[3]), r.d);
    EXPECT_EQ(std::stol(f[4]), r.rank_a);
    EXPECT_EQ(std::stod(f[5]), r.sigma);
    EXPECT_EQ(parse_model(f[6]), r.model);
    EXPECT_EQ(std::stoul(f[7]), r.trial);
    EXPECT_EQ(std::stoull(f[8]), r.seed);
    if (r.skipped()) {
      EXPECT_EQ(f[9], "skipped:" + r.skip_reason);
    } else {
      EXPECT_EQ(std::stod(f[9]), *r.normalized_error);
    }
    EXPECT_EQ(std::stod(f[10]), r.elapsed_ms);
  }
}

TEST(Csv, UnwritablePathIsIoError) {
  try {
    emit_csv_file(ResultTable{}, "/nonexistent/dir/out.csv");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kIoError);
  }
}

TEST(Summaries, MeanPerCell) {
  auto cfg = small_config();
  cfg.estimators = {Estimator::kSvt};
  const auto t = run_experiment(cfg);
  const auto s = summarize(t);
  ASSERT_EQ(s.size(), 4u);
  double manual = 0;
  for (int i = 0; i < 3; ++i) manual += *t.records[static_cast<std::size_t>(i)].normalized_error;
  EXPECT_NEAR(s[0].mean_error, manual / 3, 1e-15);
  EXPECT_EQ(s[0].count, 3u);
}

}  // namespace
}  // namespace permreg
