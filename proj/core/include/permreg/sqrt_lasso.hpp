#pragma once

#include <optional>

#include "permreg/denoise_result.hpp"

namespace permreg {

// λ = 2.1 (1/√n + 1/√m); needs no noise level.
double sqrt_lasso_default_lambda(Index n, Index m);

// Spectral solution of the scalar problem underlying the square-root
// LASSO: given singular values s (nonincreasing) and λ, returns the
// shrunken values max(s_i − λr, 0) and the residual radius r solving
// r² = Σ min(s_i, λr)². Exposed for testing.
struct SpectralShrinkage {
  Vector shrunk;
  double radius = 0.0;
  Index active = 0;
  double objective = 0.0;
};
SpectralShrinkage sqrt_lasso_shrink(const Vector& singular_values,
                                    double lambda);

// Global minimizer of ‖Y − Y′‖_F + λ‖Y′‖_* (nuclear norm). The minimizer
// shares Y's singular vectors, so the problem reduces to
// sqrt_lasso_shrink on the spectrum of Y.
//
// Diagnostics: "lambda", "radius", "active_rank".
DenoiseResult sqrt_lasso_denoise(const Matrix& y,
                                 std::optional<double> lambda = std::nullopt);

// ‖Y − Y′‖_F + λ‖Y′‖_*, evaluated directly.
double sqrt_lasso_objective(const Matrix& y, const Matrix& candidate,
                            double lambda);

}  // namespace permreg
