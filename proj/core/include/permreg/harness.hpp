#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "permreg/instance.hpp"

namespace permreg {

enum class Estimator { kMle, kSvt, kSrLasso, kLevSort };

std::string_view to_string(Estimator e);
// "mle", "svt", "srlasso", "levsort".
Estimator parse_estimator(std::string_view text);

struct GridCell {
  Index n = 0;
  Index m = 0;
  Index d = 0;
};

struct ExperimentConfig {
  std::vector<GridCell> grid;
  std::vector<double> sigmas;
  std::size_t trials = 1;
  std::vector<Estimator> estimators;
  Model model = Model::kPermutation;
  std::uint64_t master_seed = 0;
  std::optional<std::size_t> mle_cap;
  // Worker threads; 0 picks the hardware concurrency.
  unsigned threads = 1;
  // When false, elapsed_ms is recorded as 0 so output is reproducible.
  bool record_timing = true;
};

// Throws kInvalidArgument on an empty grid, sigma list or estimator set,
// zero trials, non-positive n or m, negative d or sigma.
void validate(const ExperimentConfig& cfg);

struct ResultRecord {
  Estimator estimator = Estimator::kSvt;
  Index n = 0;
  Index m = 0;
  Index d = 0;
  Index rank_a = 0;
  double sigma = 0.0;
  Model model = Model::kPermutation;
  std::size_t trial = 0;
  std::uint64_t seed = 0;
  // Empty for skipped records, whose reason is in skip_reason.
  std::optional<double> normalized_error;
  std::string skip_reason;
  double elapsed_ms = 0.0;

  // Not serialized: (1/nm)‖W‖²_F and the estimator's attained objective.
  double noise_energy = 0.0;
  double objective = 0.0;

  bool skipped() const noexcept { return !normalized_error.has_value(); }
};

struct ResultTable {
  std::vector<ResultRecord> records;
};

// Cells are the grid triples crossed with the sigma list (sigma varies
// fastest). Trial t of cell c uses seed derive_seed(master_seed, c, t) and
// the same instance is shared by every estimator. Records are ordered by
// cell, then estimator (in config order), then trial, independent of the
// number of threads.
ResultTable run_experiment(const ExperimentConfig& cfg);

// Ordinary least-squares slope of log y on log x. Throws kInvalidArgument
// for fewer than two points or non-positive values, kDegenerateFit when
// all x coincide.
double fit_loglog_slope(std::span<const std::pair<double, double>> points);

struct CellSummary {
  Estimator estimator = Estimator::kSvt;
  Index n = 0;
  Index m = 0;
  Index d = 0;
  double sigma = 0.0;
  std::size_t count = 0;
  double mean_error = 0.0;
};

// Mean normalized error per (cell, estimator) over non-skipped records, in
// table order.
std::vector<CellSummary> summarize(const ResultTable& table);

}  // namespace permreg
