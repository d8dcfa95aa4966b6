#pragma once

#include <cstddef>
#include <optional>

#include "permreg/denoise_result.hpp"
#include "permreg/instance.hpp"

namespace permreg {

inline constexpr std::size_t kDefaultPermutationCap = 9;
inline constexpr std::size_t kDefaultClusteringCap = 6;

struct MleOptions {
  // Largest n enumerated; defaults depend on the model.
  std::optional<std::size_t> max_n;
};

// Exact maximum-likelihood estimate by exhaustive enumeration:
//   argmin over arrangements P and X of ‖Y − P A X‖²_F.
//
// Permutations are scanned in lexicographic order of their maps using
// ‖(I − P P_A Pᵀ)Y‖_F = ‖PᵀY − P_A PᵀY‖_F with P_A factored once.
// Clustering maps are searched depth-first in lexicographic order; the
// least-squares residual over an assigned prefix of rows lower-bounds the
// residual of every completion, which drives the pruning.
//
// Among arrangements whose objective lies within 1e-12 (relative) of the
// minimum, the lexicographically smallest map is returned.
//
// Throws kInstanceTooLarge when n exceeds the cap, kDimensionMismatch when
// a and y disagree on n.
DenoiseResult mle_denoise(const Matrix& a, const Matrix& y, Model model,
                          const MleOptions& options = {});

}  // namespace permreg
