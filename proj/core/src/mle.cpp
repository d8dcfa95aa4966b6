#include "permreg/mle.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <string>
#include <vector>

#include "fit.hpp"
#include "permreg/errors.hpp"
#include "permreg/linalg.hpp"

namespace permreg {
namespace detail {

DenoiseResult fit_given_arrangement(const Matrix& a, const Matrix& y,
                                    Arrangement arrangement) {
  DenoiseResult out;
  const Matrix arranged = apply_arrangement(arrangement, a);
  Matrix x_hat = pseudo_inverse(arranged) * y;
  out.y_hat = arranged.cols() == 0 ? Matrix::Zero(y.rows(), y.cols())
                                   : Matrix(arranged * x_hat);
  out.objective = (y - out.y_hat).squaredNorm();
  out.x_hat = std::move(x_hat);
  out.arrangement_hat = std::move(arrangement);
  return out;
}

}  // namespace detail

namespace {

constexpr double kTieRelTol = 1e-12;

// Objectives within this band of the minimum count as ties. The floor keeps
// the band meaningful when the minimum is an exact fit.
double tie_band(double minimum, double scale) {
  return kTieRelTol * std::max(minimum, kTieRelTol * scale);
}

class PermutationScan {
 public:
  PermutationScan(const Matrix& a, const Matrix& y)
      : y_(y), basis_(svd(a).u), z_(y.rows(), y.cols()) {}

  // ‖PᵀY − P_A PᵀY‖²_F for the permutation with the given map.
  double objective(const std::vector<std::size_t>& map) {
    for (std::size_t i = 0; i < map.size(); ++i) {
      z_.row(static_cast<Index>(map[i])) = y_.row(static_cast<Index>(i));
    }
    return residual_against_basis(basis_, z_);
  }

 private:
  const Matrix& y_;
  Matrix basis_;
  Matrix z_;
};

DenoiseResult mle_permutation(const Matrix& a, const Matrix& y) {
  const auto n = static_cast<std::size_t>(a.rows());
  PermutationScan scan(a, y);
  std::vector<std::size_t> map(n);

  std::iota(map.begin(), map.end(), std::size_t{0});
  double best = std::numeric_limits<double>::infinity();
  double enumerated = 0;
  do {
    best = std::min(best, scan.objective(map));
    ++enumerated;
  } while (std::next_permutation(map.begin(), map.end()));

  // Second pass: the lexicographically first map within the tie band.
  const double threshold = best + tie_band(best, y.squaredNorm());
  std::iota(map.begin(), map.end(), std::size_t{0});
  while (scan.objective(map) > threshold) {
    std::next_permutation(map.begin(), map.end());
  }

  DenoiseResult out = detail::fit_given_arrangement(
      a, y, Permutation::from_map(map));
  out.diagnostics.set("arrangements_enumerated", enumerated);
  return out;
}

class ClusteringSearch {
 public:
  ClusteringSearch(const Matrix& a, const Matrix& y)
      : a_(a), y_(y), n_(static_cast<std::size_t>(a.rows())), map_(n_) {}

  // Minimum objective over all nⁿ maps.
  double minimize() {
    best_ = std::numeric_limits<double>::infinity();
    first_hit_.reset();
    threshold_mode_ = false;
    descend(0);
    return best_;
  }

  // Lexicographically first map whose objective is ≤ threshold.
  std::vector<std::size_t> first_within(double threshold) {
    threshold_ = threshold;
    threshold_mode_ = true;
    first_hit_.reset();
    descend(0);
    return *first_hit_;
  }

  double leaves() const { return leaves_; }
  double nodes() const { return nodes_; }

 private:
  double prefix_residual(std::size_t k) const {
    Matrix a_sel(static_cast<Index>(k), a_.cols());
    for (std::size_t i = 0; i < k; ++i) {
      a_sel.row(static_cast<Index>(i)) = a_.row(static_cast<Index>(map_[i]));
    }
    return projection_residual(a_sel, y_.topRows(static_cast<Index>(k)));
  }

  double prune_level() const {
    if (threshold_mode_) return threshold_;
    return best_ + tie_band(best_, y_.squaredNorm());
  }

  void descend(std::size_t k) {
    if (first_hit_) return;
    for (std::size_t v = 0; v < n_; ++v) {
      map_[k] = v;
      ++nodes_;
      const double bound = prefix_residual(k + 1);
      if (bound > prune_level()) continue;
      if (k + 1 == n_) {
        if (threshold_mode_) {
          first_hit_ = map_;
          return;
        }
        ++leaves_;
        best_ = std::min(best_, bound);
      } else {
        descend(k + 1);
        if (first_hit_) return;
      }
    }
  }

  const Matrix& a_;
  const Matrix& y_;
  std::size_t n_;
  std::vector<std::size_t> map_;
  double best_ = 0.0;
  double threshold_ = 0.0;
  bool threshold_mode_ = false;
  std::optional<std::vector<std::size_t>> first_hit_;
  double leaves_ = 0;
  double nodes_ = 0;
};

DenoiseResult mle_clustering(const Matrix& a, const Matrix& y) {
  ClusteringSearch search(a, y);
  const double best = search.minimize();
  const double leaves = search.leaves();
  const double nodes = search.nodes();
  auto map = search.first_within(best + tie_band(best, y.squaredNorm()));

  DenoiseResult out = detail::fit_given_arrangement(
      a, y, ClusteringAssignment::from_map(std::move(map)));
  out.diagnostics.set("arrangements_enumerated", leaves);
  out.diagnostics.set("nodes_visited", nodes);
  return out;
}

}  // namespace

DenoiseResult mle_denoise(const Matrix& a, const Matrix& y, Model model,
                          const MleOptions& options) {
  require_same_rows(a, y, "mle_denoise");
  require_finite(a, "A");
  require_finite(y, "Y");
  const std::size_t cap = options.max_n.value_or(
      model == Model::kPermutation ? kDefaultPermutationCap
                                   : kDefaultClusteringCap);
  const auto n = static_cast<std::size_t>(a.rows());
  if (n > cap) {
    fail(ErrorCode::kInstanceTooLarge,
         "n = " + std::to_string(n) + " exceeds the " +
             std::string(to_string(model)) + " MLE cap of " +
             std::to_string(cap));
  }
  if (n == 0) fail(ErrorCode::kInvalidDimensions, "n must be positive");

  detail::Stopwatch clock;
  DenoiseResult out = model == Model::kPermutation ? mle_permutation(a, y)
                                                   : mle_clustering(a, y);
  out.diagnostics.set("wall_ms", clock.elapsed_ms());
  return out;
}

}  // namespace permreg
