#include "permreg/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>
#include <vector>

#include "permreg/errors.hpp"
#include "permreg/linalg.hpp"
#include "permreg/random.hpp"

namespace permreg {

double normalized_prediction_error(const Matrix& y_hat, const Matrix& y_star) {
  if (y_hat.rows() != y_star.rows() || y_hat.cols() != y_star.cols()) {
    fail(ErrorCode::kDimensionMismatch,
         "prediction is " + std::to_string(y_hat.rows()) + "x" +
             std::to_string(y_hat.cols()) + ", truth is " +
             std::to_string(y_star.rows()) + "x" +
             std::to_string(y_star.cols()));
  }
  const double count = static_cast<double>(y_hat.size());
  if (count == 0) return 0.0;
  return (y_hat - y_star).squaredNorm() / count;
}

double rate_mle(const RateParams& p) {
  return p.sigma * p.sigma *
         (p.rank_a / p.n + std::min(std::log(p.n), p.m) / p.m);
}

double rate_svt(const RateParams& p) {
  return p.sigma * p.sigma * p.rank_a * (1.0 / p.n + 1.0 / p.m);
}

double svt_adversarial_level(Index n, Index m, double sigma) {
  return sigma *
         (std::sqrt(static_cast<double>(n)) + std::sqrt(static_cast<double>(m))) /
         6.0;
}

Instance svt_adversarial_instance(const Matrix& a, Index m, double sigma,
                                  std::uint64_t seed) {
  require_finite(a, "A");
  if (m < 1 || a.rows() < 1) {
    fail(ErrorCode::kInvalidDimensions, "need n >= 1 and m >= 1");
  }
  if (!(sigma >= 0.0) || !std::isfinite(sigma)) {
    fail(ErrorCode::kInvalidArgument, "sigma must be finite and >= 0");
  }
  const SvdFactors f = svd(a);
  const Index r = f.rank();
  if (r > m) {
    fail(ErrorCode::kRankTooLarge, "rank(A) = " + std::to_string(r) +
                                       " exceeds m = " + std::to_string(m));
  }

  Rng rng(seed);
  const Index n = a.rows();
  Instance inst{
      .a = a,
      .x_star = Matrix::Zero(a.cols(), m),
      .arrangement = Permutation::identity(static_cast<std::size_t>(n)),
      .sigma = sigma,
      .y_star = Matrix::Zero(n, m),
      .y = {},
      .seed = seed,
  };
  if (r > 0) {
    const Matrix frame = orthonormalize_columns(gaussian_matrix(m, r, 1.0, rng));
    const double level = svt_adversarial_level(n, m, sigma);
    inst.x_star = f.v * (level * f.singular_values.cwiseInverse()).asDiagonal() *
                  frame.transpose();
    inst.y_star = a * inst.x_star;
  }
  inst.y = sigma > 0.0 ? Matrix(inst.y_star + gaussian_matrix(n, m, sigma, rng))
                       : inst.y_star;
  return inst;
}

double sorted_gap(const Vector& v, Index k) {
  if (k < 1 || k >= v.size()) {
    fail(ErrorCode::kInvalidGamma, "gap position out of range");
  }
  std::vector<double> s(v.data(), v.data() + v.size());
  std::sort(s.begin(), s.end(), std::greater<>());
  return s[static_cast<std::size_t>(k - 1)] - s[static_cast<std::size_t>(k)];
}

namespace {

constexpr int kRandomWitnesses = 32;
constexpr int kAscentSteps = 60;

struct GapPair {
  double gap;
  Index upper;  // index of the k-th largest entry
  Index lower;  // index of the (k+1)-th largest entry
};

GapPair locate_gap(const Vector& v, Index k, std::vector<Index>& idx) {
  std::iota(idx.begin(), idx.end(), Index{0});
  std::nth_element(idx.begin(), idx.begin() + (k - 1), idx.end(),
                   [&](Index i, Index j) { return v(i) > v(j); });
  const Index upper = idx[static_cast<std::size_t>(k - 1)];
  Index lower = idx[static_cast<std::size_t>(k)];
  for (auto it = idx.begin() + k; it != idx.end(); ++it) {
    if (v(*it) > v(lower)) lower = *it;
  }
  return {v(upper) - v(lower), upper, lower};
}

// Projected subgradient ascent of the k-th sorted gap of U c over the unit
// sphere, starting from c. Returns the best coefficient vector seen.
Vector ascend_gap(const Matrix& basis, Vector c, Index k, double xi,
                  double& best_gap, std::vector<Index>& idx) {
  Vector best = c;
  GapPair g = locate_gap(basis * c, k, idx);
  best_gap = g.gap;
  for (int step = 0; step < kAscentSteps && best_gap < xi; ++step) {
    Vector dir = (basis.row(g.upper) - basis.row(g.lower)).transpose();
    dir -= dir.dot(c) * c;
    const double norm = dir.norm();
    if (norm == 0.0) break;
    c += (0.1 / (1.0 + step)) * dir / norm;
    c.normalize();
    g = locate_gap(basis * c, k, idx);
    if (g.gap > best_gap) {
      best_gap = g.gap;
      best = c;
    }
  }
  return best;
}

}  // namespace

FlatnessVerdict flatness_witness_check(const Matrix& a,
                                       const std::optional<Vector>& witness,
                                       double gamma, double xi,
                                       std::uint64_t seed) {
  require_finite(a, "A");
  const Index n = a.rows();
  const auto k = static_cast<Index>(std::floor(gamma * static_cast<double>(n)));
  if (!(gamma > 0.0 && gamma < 1.0) || k < 1 || k > n - 1) {
    fail(ErrorCode::kInvalidGamma,
         "floor(gamma * n) = " + std::to_string(k) + " must lie in [1, " +
             std::to_string(n - 1) + "]");
  }
  if (!(xi > 0.0)) fail(ErrorCode::kInvalidArgument, "xi must be positive");

  const Matrix basis = svd(a).u;
  FlatnessVerdict verdict;
  verdict.best_gap = -std::numeric_limits<double>::infinity();

  const auto consider = [&](const Vector& coeffs) {
    const double norm = coeffs.norm();
    if (norm == 0.0) return false;
    Vector candidate = basis * (coeffs / norm);
    candidate.normalize();
    const double gap = sorted_gap(candidate, k);
    verdict.best_gap = std::max(verdict.best_gap, gap);
    if (gap >= xi) {
      verdict.member = true;
      verdict.witness = std::move(candidate);
      return true;
    }
    return false;
  };

  if (witness) {
    if (witness->size() != n) {
      fail(ErrorCode::kDimensionMismatch, "witness length differs from n");
    }
    if (basis.cols() > 0) consider(basis.transpose() * *witness);
    return verdict;
  }
  if (basis.cols() == 0) return verdict;

  std::vector<Vector> starts;
  for (Index j = 0; j < a.cols(); ++j) {
    starts.push_back(basis.transpose() * a.col(j));
  }
  Rng rng(seed);
  for (int i = 0; i < kRandomWitnesses; ++i) {
    starts.push_back(gaussian_matrix(basis.cols(), 1, 1.0, rng).col(0));
  }

  std::vector<Index> idx(static_cast<std::size_t>(n));
  for (const Vector& start : starts) {
    if (consider(start)) return verdict;
    if (start.norm() == 0.0) continue;
    double gap = 0.0;
    const Vector refined =
        ascend_gap(basis, start.normalized(), k, xi, gap, idx);
    if (consider(refined)) return verdict;
  }
  return verdict;
}

}  // namespace permreg
