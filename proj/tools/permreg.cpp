// permreg: command-line front end for denoising permuted linear models.
//
//   permreg denoise  --a A.txt --y Y.txt --estimator svt --sigma 1 --out Yhat.txt
//   permreg match    --source src.txt --target tgt.txt --out corr.csv
//   permreg simulate --n 32,64 --m 32,64 --d 2 --sigma 1 --trials 50
//                    --estimators svt,srlasso --out results.csv
//   permreg bench    (same flags as simulate; also prints log-log slopes)
//
// Exit codes: 0 success, 2 bad input or I/O, 3 instance too large for MLE.

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "permreg/analysis.hpp"
#include "permreg/csv.hpp"
#include "permreg/errors.hpp"
#include "permreg/estimators.hpp"
#include "permreg/harness.hpp"
#include "permreg/matrix_io.hpp"

namespace {

using permreg::Error;
using permreg::ErrorCode;

constexpr int kExitOk = 0;
constexpr int kExitBadInput = 2;
constexpr int kExitTooLarge = 3;

// Error raised for flag combinations CLI11 cannot express.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string real17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

void print_diagnostics(const permreg::Diagnostics& diag) {
  for (const auto& [key, value] : diag.values) {
    std::cout << key << '=' << real17(value) << '\n';
  }
  for (const auto& w : diag.warnings) std::cerr << "warning: " << w << '\n';
}

struct DenoiseArgs {
  std::string a_path;
  std::string y_path;
  std::string estimator;
  std::optional<double> sigma;
  std::optional<double> lambda;
  std::string model = "permutation";
  std::string out_path;
  std::optional<std::size_t> mle_cap;
};

int cmd_denoise(const DenoiseArgs& args) {
  const auto estimator = permreg::parse_estimator(args.estimator);
  const auto model = permreg::parse_model(args.model);
  const bool needs_a = estimator == permreg::Estimator::kMle ||
                       estimator == permreg::Estimator::kLevSort;
  if (needs_a && args.a_path.empty()) {
    throw UsageError("--a is required for --estimator " + args.estimator);
  }
  if (estimator == permreg::Estimator::kSvt && !args.sigma) {
    throw UsageError("--sigma is required for --estimator svt");
  }
  if (args.lambda && estimator != permreg::Estimator::kSrLasso) {
    throw UsageError("--lambda applies only to --estimator srlasso");
  }

  const permreg::Matrix y = permreg::read_matrix_file(args.y_path);
  std::optional<permreg::Matrix> a;
  if (!args.a_path.empty()) {
    a = permreg::read_matrix_file(args.a_path);
    permreg::require_same_rows(*a, y, "--a and --y");
  }

  permreg::DenoiseResult res;
  switch (estimator) {
    case permreg::Estimator::kMle:
      res = permreg::mle_denoise(*a, y, model, {.max_n = args.mle_cap});
      break;
    case permreg::Estimator::kSvt:
      res = permreg::svt_denoise(y, *args.sigma);
      break;
    case permreg::Estimator::kSrLasso:
      res = permreg::sqrt_lasso_denoise(y, args.lambda);
      break;
    case permreg::Estimator::kLevSort:
      res = permreg::levsort(*a, y);
      break;
  }

  permreg::write_matrix_file(args.out_path, res.y_hat);
  std::cout << "estimator=" << args.estimator << '\n'
            << "n=" << y.rows() << '\n'
            << "m=" << y.cols() << '\n'
            << "objective=" << real17(res.objective) << '\n'
            << "normalized_objective="
            << real17(res.objective / static_cast<double>(y.size())) << '\n';
  if (res.arrangement_hat) {
    std::cout << "arrangement=";
    const auto map = permreg::arrangement_map(*res.arrangement_hat);
    for (std::size_t i = 0; i < map.size(); ++i) {
      std::cout << (i ? "," : "") << map[i];
    }
    std::cout << '\n';
  }
  print_diagnostics(res.diagnostics);
  return kExitOk;
}

struct MatchArgs {
  std::string source;
  std::string target;
  std::string out_path;
  std::string transform_path;
  std::optional<double> tie_tol;
};

// Point clouds: n rows of k >= 2 columns (coordinates first, extra linear
// attributes after), with n >= k.
permreg::Matrix read_point_cloud(const std::string& path) {
  permreg::Matrix pts = permreg::read_matrix_file(path);
  if (pts.cols() < 2 || pts.rows() < pts.cols()) {
    throw UsageError(path + ": point cloud needs at least 2 columns and at "
                            "least as many points as columns");
  }
  return pts;
}

int cmd_match(const MatchArgs& args) {
  const permreg::Matrix source = read_point_cloud(args.source);
  const permreg::Matrix target = read_point_cloud(args.target);
  permreg::require_same_rows(source, target, "--source and --target");

  const permreg::DenoiseResult res =
      permreg::levsort(source, target, {.tie_tol = args.tie_tol});

  std::ofstream out(args.out_path);
  if (!out) {
    throw Error(ErrorCode::kIoError, "cannot open " + args.out_path);
  }
  out << "target_row,source_row\n";
  const auto map = permreg::arrangement_map(*res.arrangement_hat);
  for (std::size_t i = 0; i < map.size(); ++i) {
    out << i << ',' << map[i] << '\n';
  }
  out.close();
  if (!out) throw Error(ErrorCode::kIoError, "write failed: " + args.out_path);

  const std::string transform_path = args.transform_path.empty()
                                         ? args.out_path + ".transform.txt"
                                         : args.transform_path;
  permreg::write_matrix_file(transform_path, *res.x_hat);

  std::cout << "points=" << source.rows() << '\n'
            << "residual=" << real17(std::sqrt(res.objective)) << '\n'
            << "transform=" << transform_path << '\n';
  print_diagnostics(res.diagnostics);
  if (res.diagnostics.get("preconditions_met").value_or(0.0) == 0.0) {
    std::cerr << "warning: exact-recovery conditions not met; "
                 "correspondence is heuristic\n";
  }
  return kExitOk;
}

struct SweepArgs {
  std::vector<long> n;
  std::vector<long> m;
  std::vector<long> d;
  std::vector<double> sigma;
  std::size_t trials = 1;
  std::vector<std::string> estimators;
  std::string model = "permutation";
  std::uint64_t seed = 0;
  std::string out_path;
  unsigned threads = 1;
  std::optional<std::size_t> mle_cap;
  bool product = false;
  bool timing = false;
};

// Grid lists are zipped position by position; a list of length one is
// broadcast. With --product the full Cartesian product is taken instead.
std::vector<permreg::GridCell> build_grid(const SweepArgs& args) {
  std::vector<permreg::GridCell> grid;
  if (args.n.empty() || args.m.empty() || args.d.empty()) {
    throw UsageError("--n, --m and --d must be non-empty");
  }
  if (args.product) {
    for (long n : args.n)
      for (long m : args.m)
        for (long d : args.d) grid.push_back({n, m, d});
    return grid;
  }
  std::size_t len = std::max({args.n.size(), args.m.size(), args.d.size()});
  for (const auto* list : {&args.n, &args.m, &args.d}) {
    if (list->size() != 1 && list->size() != len) {
      throw UsageError(
          "grid lists must have equal lengths or length 1 (use --product "
          "for a Cartesian grid)");
    }
  }
  const auto at = [](const std::vector<long>& v, std::size_t i) {
    return v.size() == 1 ? v[0] : v[i];
  };
  for (std::size_t i = 0; i < len; ++i) {
    grid.push_back({at(args.n, i), at(args.m, i), at(args.d, i)});
  }
  return grid;
}

permreg::ExperimentConfig build_config(const SweepArgs& args, bool timing) {
  permreg::ExperimentConfig cfg;
  cfg.grid = build_grid(args);
  cfg.sigmas = args.sigma;
  cfg.trials = args.trials;
  for (const auto& e : args.estimators) {
    cfg.estimators.push_back(permreg::parse_estimator(e));
  }
  cfg.model = permreg::parse_model(args.model);
  cfg.master_seed = args.seed;
  cfg.mle_cap = args.mle_cap;
  cfg.threads = args.threads;
  cfg.record_timing = timing;
  permreg::validate(cfg);
  return cfg;
}

void write_table(const permreg::ResultTable& table, const std::string& path) {
  if (path.empty() || path == "-") {
    permreg::emit_csv(table, std::cout);
  } else {
    permreg::emit_csv_file(table, path);
  }
}

int cmd_simulate(const SweepArgs& args) {
  const auto cfg = build_config(args, args.timing);
  write_table(permreg::run_experiment(cfg), args.out_path);
  return kExitOk;
}

int cmd_bench(const SweepArgs& args) {
  const auto cfg = build_config(args, true);
  const auto table = permreg::run_experiment(cfg);
  if (!args.out_path.empty()) write_table(table, args.out_path);

  // Slope of mean error against n, one fit per (estimator, sigma).
  std::map<std::pair<std::string, double>,
           std::vector<std::pair<double, double>>> series;
  std::map<std::string, std::pair<double, std::size_t>> timing;
  for (const auto& s : permreg::summarize(table)) {
    const std::string name(permreg::to_string(s.estimator));
    if (s.count > 0 && s.mean_error > 0.0) {
      series[{name, s.sigma}].push_back(
          {static_cast<double>(s.n), s.mean_error});
    }
  }
  for (const auto& r : table.records) {
    auto& t = timing[std::string(permreg::to_string(r.estimator))];
    t.first += r.elapsed_ms;
    ++t.second;
  }
  for (const auto& e : cfg.estimators) {
    const std::string name(permreg::to_string(e));
    for (double sigma : cfg.sigmas) {
      std::cout << "estimator=" << name << " sigma=" << real17(sigma)
                << " slope=";
      const auto it = series.find({name, sigma});
      try {
        if (it == series.end()) throw Error(ErrorCode::kDegenerateFit, "");
        std::cout << real17(permreg::fit_loglog_slope(it->second));
      } catch (const Error&) {
        std::cout << "n/a";
      }
      std::cout << '\n';
    }
    const auto& t = timing[name];
    std::cout << "estimator=" << name << " mean_elapsed_ms="
              << real17(t.second ? t.first / static_cast<double>(t.second) : 0.0)
              << '\n';
  }
  return kExitOk;
}

void add_sweep_flags(CLI::App* cmd, SweepArgs& args) {
  cmd->add_option("--n", args.n, "Comma-separated n values")
      ->delimiter(',')->required();
  cmd->add_option("--m", args.m, "Comma-separated m values")
      ->delimiter(',')->required();
  cmd->add_option("--d", args.d, "Comma-separated d values")
      ->delimiter(',')->required();
  cmd->add_option("--sigma", args.sigma, "Comma-separated noise levels")
      ->delimiter(',')->required();
  cmd->add_option("--trials", args.trials, "Trials per cell")->required();
  cmd->add_option("--estimators", args.estimators,
                  "Subset of mle,svt,srlasso,levsort")
      ->delimiter(',')->required();
  cmd->add_option("--model", args.model, "permutation or clustering");
  cmd->add_option("--seed", args.seed, "Master seed");
  cmd->add_option("--out", args.out_path, "Results CSV ('-' for stdout)");
  cmd->add_option("--threads", args.threads, "Worker threads (0 = all cores)");
  cmd->add_option("--mle-cap", args.mle_cap, "Largest n enumerated by MLE");
  cmd->add_flag("--product", args.product,
                "Cartesian product of --n, --m, --d instead of zipping");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Denoising and matching for linear models with permuted rows"};
  app.require_subcommand(1);

  DenoiseArgs denoise;
  auto* denoise_cmd = app.add_subcommand("denoise", "Estimate Y* from (A, Y)");
  denoise_cmd->add_option("--a", denoise.a_path, "Design matrix A");
  denoise_cmd->add_option("--y", denoise.y_path, "Observations Y")->required();
  denoise_cmd->add_option("--estimator", denoise.estimator,
                          "mle, svt, srlasso or levsort")
      ->required();
  denoise_cmd->add_option("--sigma", denoise.sigma, "Noise level (svt)");
  denoise_cmd->add_option("--lambda", denoise.lambda,
                          "Regularization (srlasso)");
  denoise_cmd->add_option("--model", denoise.model,
                          "permutation or clustering (mle)");
  denoise_cmd->add_option("--mle-cap", denoise.mle_cap,
                          "Largest n enumerated by MLE");
  denoise_cmd->add_option("--out", denoise.out_path, "Output path for Yhat")
      ->required();

  MatchArgs match;
  auto* match_cmd =
      app.add_subcommand("match", "Point-cloud correspondence via LevSort");
  match_cmd->add_option("--source", match.source, "Source points (A)")
      ->required();
  match_cmd->add_option("--target", match.target, "Target points (Y)")
      ->required();
  match_cmd->add_option("--out", match.out_path, "Correspondence CSV")
      ->required();
  match_cmd->add_option("--transform", match.transform_path,
                        "Output path for the estimated transform");
  match_cmd->add_option("--tie-tol", match.tie_tol,
                        "Absolute leverage tie tolerance");

  SweepArgs simulate;
  auto* simulate_cmd =
      app.add_subcommand("simulate", "Monte-Carlo sweep written as CSV");
  add_sweep_flags(simulate_cmd, simulate);
  simulate_cmd->add_flag("--timing", simulate.timing,
                         "Record wall-clock time (output no longer "
                         "reproducible)");

  SweepArgs bench;
  auto* bench_cmd = app.add_subcommand(
      "bench", "Timed sweep; prints log-log error slopes per estimator");
  add_sweep_flags(bench_cmd, bench);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitBadInput;
  }

  try {
    if (*denoise_cmd) return cmd_denoise(denoise);
    if (*match_cmd) return cmd_match(match);
    if (*simulate_cmd) return cmd_simulate(simulate);
    if (*bench_cmd) return cmd_bench(bench);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitBadInput;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return e.code() == ErrorCode::kInstanceTooLarge ? kExitTooLarge
                                                    : kExitBadInput;
  }
  return kExitBadInput;
}
