#include "permreg/levsort.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <string>
#include <vector>

#include "fit.hpp"
#include "permreg/errors.hpp"

namespace permreg {
namespace {

// Row indices ordered by decreasing score; equal scores keep index order.
std::vector<std::size_t> descending_order(const Vector& scores) {
  std::vector<std::size_t> order(static_cast<std::size_t>(scores.size()));
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t i, std::size_t j) {
                     return scores(static_cast<Index>(i)) >
                            scores(static_cast<Index>(j));
                   });
  return order;
}

double min_adjacent_gap(const Vector& scores,
                        const std::vector<std::size_t>& order) {
  double gap = std::numeric_limits<double>::infinity();
  for (std::size_t k = 1; k < order.size(); ++k) {
    gap = std::min(gap, scores(static_cast<Index>(order[k - 1])) -
                            scores(static_cast<Index>(order[k])));
  }
  return gap;
}

}  // namespace

LeverageScores leverage_scores(const Matrix& m, double rank_tol) {
  const SvdFactors f = svd(m, rank_tol);
  LeverageScores out;
  out.rank = f.rank();
  out.scores = f.rank() == 0 ? Vector::Zero(m.rows())
                             : Vector(f.u.rowwise().squaredNorm());
  return out;
}

DenoiseResult levsort(const Matrix& a, const Matrix& y,
                      const LevSortOptions& options) {
  require_same_rows(a, y, "levsort");
  if (options.tie_tol && !(*options.tie_tol >= 0.0)) {
    fail(ErrorCode::kInvalidArgument, "tie_tol must be >= 0");
  }
  if (!(options.fit_tol >= 0.0)) {
    fail(ErrorCode::kInvalidArgument, "fit_tol must be >= 0");
  }
  detail::Stopwatch clock;

  const LeverageScores lev_a = leverage_scores(a, options.rank_tol);
  const LeverageScores lev_y = leverage_scores(y, options.rank_tol);
  const auto order_a = descending_order(lev_a.scores);
  const auto order_y = descending_order(lev_y.scores);

  // The k-th largest score of Y is matched with the k-th largest of A.
  std::vector<std::size_t> map(order_a.size());
  for (std::size_t k = 0; k < map.size(); ++k) map[order_y[k]] = order_a[k];

  const double gap_a = min_adjacent_gap(lev_a.scores, order_a);
  const double gap_y = min_adjacent_gap(lev_y.scores, order_y);
  const auto max_or_zero = [](const Vector& v) {
    return v.size() == 0 ? 0.0 : v.maxCoeff();
  };
  const double tol_a = options.tie_tol.value_or(1e-9 * max_or_zero(lev_a.scores));
  const double tol_y = options.tie_tol.value_or(1e-9 * max_or_zero(lev_y.scores));
  const bool distinct = gap_a > tol_a && gap_y > tol_y;
  const bool ranks_match = lev_a.rank == lev_y.rank;

  DenoiseResult out =
      detail::fit_given_arrangement(a, y, Permutation::from_map(std::move(map)));
  // Noiseless data lies exactly in range(P̂A); anything else is noise or a
  // wrong match, and exactness is no longer promised.
  const double y_norm = y.norm();
  const double fit_residual =
      y_norm > 0.0 ? (y - out.y_hat).norm() / y_norm : 0.0;
  const bool consistent = fit_residual <= options.fit_tol;

  auto& diag = out.diagnostics;
  diag.set("rank_a", static_cast<double>(lev_a.rank));
  diag.set("rank_y", static_cast<double>(lev_y.rank));
  diag.set("min_gap_a", gap_a);
  diag.set("min_gap_y", gap_y);
  diag.set("relative_fit_residual", fit_residual);
  diag.set("preconditions_met",
           distinct && ranks_match && consistent ? 1.0 : 0.0);
  if (!distinct) {
    diag.warnings.push_back(
        "DegenerateLeverage: leverage scores tie within tolerance "
        "(min gap A = " + std::to_string(gap_a) +
        ", min gap Y = " + std::to_string(gap_y) + ")");
  }
  if (!ranks_match) {
    diag.warnings.push_back("RankMismatch: rank(Y) = " +
                            std::to_string(lev_y.rank) + " but rank(A) = " +
                            std::to_string(lev_a.rank) +
                            "; exact recovery not guaranteed");
  }
  if (!consistent) {
    diag.warnings.push_back(
        "InconsistentFit: Y is not in the range of the matched A (relative "
        "residual " + std::to_string(fit_residual) + "); data looks noisy");
  }
  diag.set("wall_ms", clock.elapsed_ms());
  return out;
}

}  // namespace permreg
