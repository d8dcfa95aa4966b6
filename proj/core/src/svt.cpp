#include "permreg/svt.hpp"

#include <cmath>

#include "fit.hpp"
#include "permreg/errors.hpp"
#include "permreg/linalg.hpp"

namespace permreg {
namespace {

struct Thresholded {
  Matrix value;
  Index kept = 0;
};

Thresholded threshold(const Matrix& m, double lambda) {
  if (!(lambda >= 0.0)) fail(ErrorCode::kInvalidArgument, "lambda < 0");
  const SvdFactors f = svd(m);
  Index kept = 0;
  // Singular values are sorted, so the kept set is a prefix.
  while (kept < f.rank() && f.singular_values(kept) >= lambda) ++kept;
  Thresholded out;
  out.kept = kept;
  out.value = f.u.leftCols(kept) *
              f.singular_values.head(kept).asDiagonal() *
              f.v.leftCols(kept).transpose();
  return out;
}

}  // namespace

Matrix svt_threshold(const Matrix& m, double lambda) {
  return threshold(m, lambda).value;
}

double svt_default_lambda(Index n, Index m, double sigma) {
  return 1.1 * sigma *
         (std::sqrt(static_cast<double>(n)) + std::sqrt(static_cast<double>(m)));
}

DenoiseResult svt_denoise(const Matrix& y, double sigma) {
  if (!(sigma > 0.0) || !std::isfinite(sigma)) {
    fail(ErrorCode::kInvalidArgument, "svt_denoise requires sigma > 0");
  }
  detail::Stopwatch clock;
  const double lambda = svt_default_lambda(y.rows(), y.cols(), sigma);
  Thresholded t = threshold(y, lambda);

  DenoiseResult out;
  out.objective = (y - t.value).squaredNorm();
  out.y_hat = std::move(t.value);
  out.diagnostics.set("lambda", lambda);
  out.diagnostics.set("retained_rank", static_cast<double>(t.kept));
  out.diagnostics.set("wall_ms", clock.elapsed_ms());
  return out;
}

}  // namespace permreg
