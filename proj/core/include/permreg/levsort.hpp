#pragma once

#include <optional>

#include "permreg/denoise_result.hpp"
#include "permreg/linalg.hpp"

namespace permreg {

// ℓ(M) = diag(U_M U_Mᵀ): squared row norms of the left singular vectors.
struct LeverageScores {
  Vector scores;
  Index rank = 0;
};

LeverageScores leverage_scores(const Matrix& m,
                               double rank_tol = kDefaultRankTol);

struct LevSortOptions {
  // Absolute tie tolerance on adjacent sorted scores. When unset, each
  // score vector uses 1e-9 times its own largest entry.
  std::optional<double> tie_tol;
  double rank_tol = kDefaultRankTol;
  // Largest ‖Y − P̂AX̂‖_F / ‖Y‖_F still treated as noiseless.
  double fit_tol = 1e-8;
};

// LevSort: match rows of Y to rows of A by sorting leverage scores, then
// fit X̂ = (P̂ A)† Y.
//
// Exact on the noiseless model when rank(A) ≤ rank(X*) and both score
// vectors have distinct entries. Otherwise it runs as a heuristic and
// diagnostics carry preconditions_met = 0 together with a warning;
// ties within tolerance add a "DegenerateLeverage" warning, and a fit
// that does not reproduce Y adds "InconsistentFit".
//
// Diagnostics: "preconditions_met", "rank_a", "rank_y", "min_gap_a",
// "min_gap_y", "relative_fit_residual".
DenoiseResult levsort(const Matrix& a, const Matrix& y,
                      const LevSortOptions& options = {});

}  // namespace permreg
