#pragma once

#include <cstdint>
#include <random>

namespace permreg {

// SplitMix64 finalizer. Public so that seeds can be reproduced outside
// the library.
constexpr std::uint64_t mix64(std::uint64_t x) noexcept {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

// Per-trial seed: mix64(mix64(mix64(master) ^ cell) ^ trial).
constexpr std::uint64_t derive_seed(std::uint64_t master, std::uint64_t cell,
                                    std::uint64_t trial) noexcept {
  return mix64(mix64(mix64(master) ^ cell) ^ trial);
}

// Portable random source. The engine is std::mt19937_64, whose output
// sequence is fixed by the standard; uniform and normal variates are
// derived here rather than through <random> distributions, whose
// algorithms are implementation defined.
//
// Normal sampler: "polar-v1", the Marsaglia polar method with the
// second variate of each pair cached.
class Rng {
 public:
  static constexpr const char* kNormalAlgorithm = "polar-v1";

  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  // Uniform on [0, 1) with 53 random bits.
  double uniform();

  // Uniform integer in [0, bound), unbiased (rejection on the top range).
  std::uint64_t below(std::uint64_t bound);

  double normal();

 private:
  std::mt19937_64 engine_;
  double cached_ = 0.0;
  bool has_cached_ = false;
};

}  // namespace permreg
