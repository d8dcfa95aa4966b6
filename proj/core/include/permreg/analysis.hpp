#pragma once

#include <cstdint>
#include <optional>

#include "permreg/instance.hpp"
#include "permreg/matrix.hpp"

namespace permreg {

// (1/nm) ‖Ŷ − Y*‖²_F. Throws kDimensionMismatch.
double normalized_prediction_error(const Matrix& y_hat, const Matrix& y_star);

struct RateParams {
  double n = 1;
  double m = 1;
  double rank_a = 1;
  double sigma = 1;
};

// σ² (rank/n + min(log n, m)/m), unit constant.
double rate_mle(const RateParams& p);
// σ² rank (1/n + 1/m), unit constant.
double rate_svt(const RateParams& p);

// Hard instance for singular-value thresholding. With A = U_A Σ_A V_Aᵀ of
// rank r, sets X* = V_A Σ_A⁻¹ L Vᵀ where L = σ (√n + √m)/6 · I_r and V is
// a seeded random m × r frame, so Y* = U_A L Vᵀ has r equal singular
// values. The arrangement is the identity and Y = Y* + W with W drawn
// from the same seed. Throws kRankTooLarge if rank(A) > m.
Instance svt_adversarial_instance(const Matrix& a, Index m, double sigma,
                                  std::uint64_t seed);

// Singular value every component of the adversarial Y* carries.
double svt_adversarial_level(Index n, Index m, double sigma);

struct FlatnessVerdict {
  // member == true means `witness` (unit norm, in range(A)) satisfies the
  // separation gap; false means nothing was found, not that A is flat.
  bool member = false;
  std::optional<Vector> witness;
  double best_gap = 0.0;
};

// Gap between the ⌊γn⌋-th and (⌊γn⌋+1)-th largest entries of v (1-based).
double sorted_gap(const Vector& v, Index k);

// Sufficient check for membership of A in the class of designs having a
// unit range vector whose sorted entries show a gap ≥ ξ at position ⌊γn⌋.
//
// With a witness, it is projected onto range(A) and normalized before the
// gap is measured. Without one, every column of A and 32 seeded random
// range vectors are tried, each followed by a short ascent on the gap over
// the unit sphere of range(A).
//
// Throws kInvalidGamma unless 1 ≤ ⌊γn⌋ ≤ n−1.
FlatnessVerdict flatness_witness_check(const Matrix& a,
                                       const std::optional<Vector>& witness,
                                       double gamma, double xi,
                                       std::uint64_t seed = 0);

}  // namespace permreg
