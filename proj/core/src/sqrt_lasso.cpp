#include "permreg/sqrt_lasso.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "fit.hpp"
#include "permreg/errors.hpp"
#include "permreg/linalg.hpp"

namespace permreg {
namespace {

double spectral_objective(const Vector& s, const Vector& shrunk,
                          double lambda) {
  return (s - shrunk).norm() + lambda * shrunk.sum();
}

}  // namespace

double sqrt_lasso_default_lambda(Index n, Index m) {
  return 2.1 * (1.0 / std::sqrt(static_cast<double>(n)) +
                1.0 / std::sqrt(static_cast<double>(m)));
}

// With t = λr, components above t are shrunk by t and the rest vanish, so
// with k active components r² = kλ²r² + Σ_{i≥k} s_i². Each k gives one
// closed-form candidate; the r = 0 candidate keeps the spectrum untouched.
// Every candidate is a feasible point, so taking the smallest objective is
// safe even where roundoff puts a root just outside its region.
SpectralShrinkage sqrt_lasso_shrink(const Vector& singular_values,
                                    double lambda) {
  if (!(lambda > 0.0) || !std::isfinite(lambda)) {
    fail(ErrorCode::kInvalidArgument, "lambda must be positive and finite");
  }
  const Index r = singular_values.size();
  for (Index i = 0; i < r; ++i) {
    if (singular_values(i) < 0.0 ||
        (i > 0 && singular_values(i) > singular_values(i - 1))) {
      fail(ErrorCode::kInvalidArgument,
           "singular values must be nonnegative and nonincreasing");
    }
  }

  SpectralShrinkage best;
  best.shrunk = singular_values;
  best.radius = 0.0;
  best.objective = lambda * singular_values.sum();

  // tail(k) = Σ_{i≥k} s_i².
  Vector tail = Vector::Zero(r + 1);
  for (Index i = r - 1; i >= 0; --i) {
    tail(i) = tail(i + 1) + singular_values(i) * singular_values(i);
  }

  for (Index k = 0; k <= r; ++k) {
    const double denom = 1.0 - static_cast<double>(k) * lambda * lambda;
    if (denom <= 0.0) break;
    const double radius = std::sqrt(tail(k) / denom);
    const double level = lambda * radius;
    Vector shrunk = (singular_values.array() - level).max(0.0).matrix();
    const double objective = spectral_objective(singular_values, shrunk, lambda);
    if (objective < best.objective) {
      best.objective = objective;
      best.shrunk = std::move(shrunk);
      best.radius = (singular_values - best.shrunk).norm();
    }
  }
  best.active = (best.shrunk.array() > 0.0).count();
  return best;
}

DenoiseResult sqrt_lasso_denoise(const Matrix& y,
                                 std::optional<double> lambda) {
  detail::Stopwatch clock;
  const double lam =
      lambda.value_or(sqrt_lasso_default_lambda(y.rows(), y.cols()));
  // Keep the full positive spectrum so the objective is exact.
  const SvdFactors f = svd(y, 0.0);
  const SpectralShrinkage s = sqrt_lasso_shrink(f.singular_values, lam);

  DenoiseResult out;
  out.y_hat = f.u * s.shrunk.asDiagonal() * f.v.transpose();
  if (f.rank() == 0) out.y_hat = Matrix::Zero(y.rows(), y.cols());
  out.objective = s.objective;
  out.diagnostics.set("lambda", lam);
  out.diagnostics.set("radius", s.radius);
  out.diagnostics.set("active_rank", static_cast<double>(s.active));
  out.diagnostics.set("wall_ms", clock.elapsed_ms());
  return out;
}

double sqrt_lasso_objective(const Matrix& y, const Matrix& candidate,
                            double lambda) {
  if (y.rows() != candidate.rows() || y.cols() != candidate.cols()) {
    fail(ErrorCode::kDimensionMismatch, "candidate shape differs from Y");
  }
  const double nuclear = svd(candidate, 0.0).singular_values.sum();
  return (y - candidate).norm() + lambda * nuclear;
}

}  // namespace permreg
