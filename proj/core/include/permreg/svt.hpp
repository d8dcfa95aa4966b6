#pragma once

#include "permreg/denoise_result.hpp"

namespace permreg {

// Hard singular-value thresholding: keeps every component with σ_i ≥ λ.
Matrix svt_threshold(const Matrix& m, double lambda);

// λ = 1.1 σ (√n + √m).
double svt_default_lambda(Index n, Index m, double sigma);

// svt_threshold(y, svt_default_lambda(n, m, sigma)). Requires sigma > 0.
// Diagnostics: "lambda", "retained_rank".
DenoiseResult svt_denoise(const Matrix& y, double sigma);

}  // namespace permreg
