#pragma once

#include <cstdint>
#include <optional>
#include <string_view>

#include "permreg/arrangement.hpp"
#include "permreg/matrix.hpp"
#include "permreg/random.hpp"

namespace permreg {

enum class Model { kPermutation, kClustering };

std::string_view to_string(Model model);
// Accepts "permutation" / "clustering"; throws kInvalidArgument otherwise.
Model parse_model(std::string_view text);

// Ground truth plus one realized observation of Y = arrangement(A X*) + W.
struct Instance {
  Matrix a;
  Matrix x_star;
  Arrangement arrangement;
  double sigma = 0.0;
  Matrix y_star;
  Matrix y;
  std::uint64_t seed = 0;

  Index n() const noexcept { return a.rows(); }
  Index m() const noexcept { return y.cols(); }
  Index d() const noexcept { return a.cols(); }
  // y - y_star.
  Matrix noise() const { return y - y_star; }
};

struct InstanceSpec {
  Index n = 0;
  Index m = 0;
  Index d = 0;
  double sigma = 0.0;
  Model model = Model::kPermutation;
  // When set, used as A instead of a Gaussian draw; must be n × d.
  std::optional<Matrix> design;
  std::uint64_t seed = 0;
};

// Draw order from Rng(seed): A (column-major, skipped if given), X*
// (column-major), arrangement (Fisher-Yates or n uniform draws), W
// (column-major). Throws kInvalidDimensions.
Instance generate_instance(const InstanceSpec& spec);

// Uniform over the n! permutations.
Permutation random_permutation(std::size_t n, Rng& rng);
// Uniform over the nⁿ maps.
ClusteringAssignment random_clustering(std::size_t n, Rng& rng);
Matrix gaussian_matrix(Index rows, Index cols, double scale, Rng& rng);

}  // namespace permreg
