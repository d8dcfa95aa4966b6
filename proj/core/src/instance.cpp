#include "permreg/instance.hpp"

#include <cmath>
#include <numeric>
#include <string>
#include <utility>

#include "permreg/errors.hpp"

namespace permreg {

std::string_view to_string(Model model) {
  return model == Model::kPermutation ? "permutation" : "clustering";
}

Model parse_model(std::string_view text) {
  if (text == "permutation") return Model::kPermutation;
  if (text == "clustering") return Model::kClustering;
  fail(ErrorCode::kInvalidArgument,
       "unknown model '" + std::string(text) +
           "' (expected permutation or clustering)");
}

Matrix gaussian_matrix(Index rows, Index cols, double scale, Rng& rng) {
  Matrix m(rows, cols);
  for (Index j = 0; j < cols; ++j) {
    for (Index i = 0; i < rows; ++i) m(i, j) = scale * rng.normal();
  }
  return m;
}

Permutation random_permutation(std::size_t n, Rng& rng) {
  std::vector<std::size_t> map(n);
  std::iota(map.begin(), map.end(), std::size_t{0});
  for (std::size_t i = n; i > 1; --i) {
    const auto j = static_cast<std::size_t>(rng.below(i));
    std::swap(map[i - 1], map[j]);
  }
  return Permutation::from_map(std::move(map));
}

ClusteringAssignment random_clustering(std::size_t n, Rng& rng) {
  std::vector<std::size_t> map(n);
  for (auto& v : map) v = static_cast<std::size_t>(rng.below(n));
  return ClusteringAssignment::from_map(std::move(map));
}

Instance generate_instance(const InstanceSpec& spec) {
  if (spec.n < 1 || spec.m < 1 || spec.d < 0) {
    fail(ErrorCode::kInvalidDimensions,
         "need n >= 1, m >= 1, d >= 0 (got n=" + std::to_string(spec.n) +
             ", m=" + std::to_string(spec.m) +
             ", d=" + std::to_string(spec.d) + ")");
  }
  if (!(spec.sigma >= 0.0) || !std::isfinite(spec.sigma)) {
    fail(ErrorCode::kInvalidDimensions, "sigma must be finite and >= 0");
  }
  if (spec.design &&
      (spec.design->rows() != spec.n || spec.design->cols() != spec.d)) {
    fail(ErrorCode::kInvalidDimensions,
         "design is " + std::to_string(spec.design->rows()) + "x" +
             std::to_string(spec.design->cols()) + ", expected " +
             std::to_string(spec.n) + "x" + std::to_string(spec.d));
  }
  if (spec.design) require_finite(*spec.design, "design");

  Rng rng(spec.seed);
  Instance inst{
      .a = spec.design ? *spec.design
                       : gaussian_matrix(spec.n, spec.d, 1.0, rng),
      .x_star = {},
      .arrangement = Permutation::identity(0),
      .sigma = spec.sigma,
      .y_star = {},
      .y = {},
      .seed = spec.seed,
  };
  inst.x_star = gaussian_matrix(spec.d, spec.m, 1.0, rng);
  const auto n = static_cast<std::size_t>(spec.n);
  if (spec.model == Model::kPermutation) {
    inst.arrangement = random_permutation(n, rng);
  } else {
    inst.arrangement = random_clustering(n, rng);
  }
  const Matrix signal = spec.d == 0 ? Matrix::Zero(spec.n, spec.m)
                                    : Matrix(inst.a * inst.x_star);
  inst.y_star = apply_arrangement(inst.arrangement, signal);
  if (spec.sigma > 0.0) {
    inst.y = inst.y_star + gaussian_matrix(spec.n, spec.m, spec.sigma, rng);
  } else {
    inst.y = inst.y_star;
  }
  return inst;
}

}  // namespace permreg
