#include "permreg/harness.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <string>
#include <thread>

#include "fit.hpp"
#include "permreg/analysis.hpp"
#include "permreg/errors.hpp"
#include "permreg/estimators.hpp"
#include "permreg/linalg.hpp"
#include "permreg/random.hpp"

namespace permreg {

std::string_view to_string(Estimator e) {
  switch (e) {
    case Estimator::kMle: return "mle";
    case Estimator::kSvt: return "svt";
    case Estimator::kSrLasso: return "srlasso";
    case Estimator::kLevSort: return "levsort";
  }
  return "unknown";
}

Estimator parse_estimator(std::string_view text) {
  if (text == "mle") return Estimator::kMle;
  if (text == "svt") return Estimator::kSvt;
  if (text == "srlasso") return Estimator::kSrLasso;
  if (text == "levsort") return Estimator::kLevSort;
  fail(ErrorCode::kInvalidArgument,
       "unknown estimator '" + std::string(text) +
           "' (expected mle, svt, srlasso or levsort)");
}

void validate(const ExperimentConfig& cfg) {
  const auto bad = [](const std::string& what) {
    fail(ErrorCode::kInvalidArgument, what);
  };
  if (cfg.grid.empty()) bad("empty (n, m, d) grid");
  if (cfg.sigmas.empty()) bad("empty sigma list");
  if (cfg.estimators.empty()) bad("empty estimator set");
  if (cfg.trials < 1) bad("trials must be >= 1");
  for (const auto& c : cfg.grid) {
    if (c.n < 1 || c.m < 1 || c.d < 0) {
      bad("invalid cell n=" + std::to_string(c.n) + " m=" +
          std::to_string(c.m) + " d=" + std::to_string(c.d));
    }
  }
  for (double s : cfg.sigmas) {
    if (!(s >= 0.0) || !std::isfinite(s)) bad("sigma must be finite and >= 0");
  }
}

namespace {

struct Cell {
  GridCell dims;
  double sigma;
};

std::vector<Cell> expand_cells(const ExperimentConfig& cfg) {
  std::vector<Cell> cells;
  for (const auto& g : cfg.grid) {
    for (double s : cfg.sigmas) cells.push_back({g, s});
  }
  return cells;
}

DenoiseResult run_estimator(Estimator e, const Instance& inst,
                            const ExperimentConfig& cfg) {
  switch (e) {
    case Estimator::kMle:
      return mle_denoise(inst.a, inst.y, cfg.model, {.max_n = cfg.mle_cap});
    case Estimator::kSvt:
      return svt_denoise(inst.y, inst.sigma);
    case Estimator::kSrLasso:
      return sqrt_lasso_denoise(inst.y);
    case Estimator::kLevSort:
      return levsort(inst.a, inst.y);
  }
  fail(ErrorCode::kInvalidArgument, "unknown estimator");
}

// All records for one (cell, trial), one per estimator in config order.
std::vector<ResultRecord> run_trial(const ExperimentConfig& cfg,
                                    const Cell& cell, std::size_t cell_index,
                                    std::size_t trial) {
  const std::uint64_t seed =
      derive_seed(cfg.master_seed, cell_index, trial);
  const Instance inst = generate_instance({
      .n = cell.dims.n,
      .m = cell.dims.m,
      .d = cell.dims.d,
      .sigma = cell.sigma,
      .model = cfg.model,
      .design = std::nullopt,
      .seed = seed,
  });
  ResultRecord base;
  base.n = cell.dims.n;
  base.m = cell.dims.m;
  base.d = cell.dims.d;
  base.rank_a = numerical_rank(inst.a);
  base.sigma = cell.sigma;
  base.model = cfg.model;
  base.trial = trial;
  base.seed = seed;
  base.noise_energy = normalized_prediction_error(inst.y, inst.y_star);

  std::vector<ResultRecord> out;
  for (Estimator e : cfg.estimators) {
    ResultRecord rec = base;
    rec.estimator = e;
    if (e == Estimator::kSvt && cell.sigma == 0.0) {
      rec.skip_reason = "SigmaZero";
      out.push_back(std::move(rec));
      continue;
    }
    detail::Stopwatch clock;
    try {
      const DenoiseResult res = run_estimator(e, inst, cfg);
      rec.normalized_error = normalized_prediction_error(res.y_hat, inst.y_star);
      rec.objective = res.objective;
    } catch (const Error& err) {
      rec.skip_reason = std::string(to_string(err.code()));
    }
    if (cfg.record_timing) rec.elapsed_ms = clock.elapsed_ms();
    out.push_back(std::move(rec));
  }
  return out;
}

}  // namespace

ResultTable run_experiment(const ExperimentConfig& cfg) {
  validate(cfg);
  const std::vector<Cell> cells = expand_cells(cfg);
  const std::size_t jobs = cells.size() * cfg.trials;

  std::vector<std::vector<ResultRecord>> slots(jobs);
  std::vector<std::exception_ptr> errors(jobs);
  std::atomic<std::size_t> next{0};
  const auto worker = [&] {
    for (std::size_t job = next++; job < jobs; job = next++) {
      const std::size_t c = job / cfg.trials;
      const std::size_t t = job % cfg.trials;
      try {
        slots[job] = run_trial(cfg, cells[c], c, t);
      } catch (...) {
        errors[job] = std::current_exception();
      }
    }
  };

  unsigned threads = cfg.threads == 0 ? std::thread::hardware_concurrency()
                                      : cfg.threads;
  threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(jobs)));
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned i = 0; i < threads; ++i) pool.emplace_back(worker);
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }

  ResultTable table;
  table.records.reserve(jobs * cfg.estimators.size());
  for (std::size_t c = 0; c < cells.size(); ++c) {
    for (std::size_t e = 0; e < cfg.estimators.size(); ++e) {
      for (std::size_t t = 0; t < cfg.trials; ++t) {
        table.records.push_back(slots[c * cfg.trials + t][e]);
      }
    }
  }
  return table;
}

double fit_loglog_slope(std::span<const std::pair<double, double>> points) {
  if (points.size() < 2) {
    fail(ErrorCode::kInvalidArgument, "slope fit needs at least two points");
  }
  double mean_x = 0.0;
  double mean_y = 0.0;
  for (const auto& [x, y] : points) {
    if (!(x > 0.0) || !(y > 0.0)) {
      fail(ErrorCode::kInvalidArgument, "slope fit needs positive points");
    }
    mean_x += std::log(x);
    mean_y += std::log(y);
  }
  const auto count = static_cast<double>(points.size());
  mean_x /= count;
  mean_y /= count;
  double sxx = 0.0;
  double sxy = 0.0;
  for (const auto& [x, y] : points) {
    const double dx = std::log(x) - mean_x;
    sxx += dx * dx;
    sxy += dx * (std::log(y) - mean_y);
  }
  if (sxx == 0.0) fail(ErrorCode::kDegenerateFit, "all x values are equal");
  return sxy / sxx;
}

std::vector<CellSummary> summarize(const ResultTable& table) {
  std::vector<CellSummary> out;
  const auto same = [](const CellSummary& s, const ResultRecord& r) {
    return s.estimator == r.estimator && s.n == r.n && s.m == r.m &&
           s.d == r.d && s.sigma == r.sigma;
  };
  for (const auto& r : table.records) {
    auto it = std::find_if(out.begin(), out.end(),
                           [&](const CellSummary& s) { return same(s, r); });
    if (it == out.end()) {
      out.push_back({r.estimator, r.n, r.m, r.d, r.sigma, 0, 0.0});
      it = std::prev(out.end());
    }
    if (r.skipped()) continue;
    it->mean_error += *r.normalized_error;
    ++it->count;
  }
  for (auto& s : out) {
    if (s.count > 0) s.mean_error /= static_cast<double>(s.count);
  }
  return out;
}

}  // namespace permreg
