#include "permreg/arrangement.hpp"

#include <string>

#include "permreg/errors.hpp"

namespace permreg {
namespace {

void check_range(const std::vector<std::size_t>& map) {
  for (std::size_t i = 0; i < map.size(); ++i) {
    if (map[i] >= map.size()) {
      fail(ErrorCode::kOutOfRange,
           "index " + std::to_string(map[i]) + " at position " +
               std::to_string(i) + " exceeds n = " +
               std::to_string(map.size()));
    }
  }
}

Matrix select_rows(std::span<const std::size_t> map, const Matrix& m) {
  if (static_cast<Index>(map.size()) != m.rows()) {
    fail(ErrorCode::kDimensionMismatch,
         "arrangement of length " + std::to_string(map.size()) +
             " applied to matrix with " + std::to_string(m.rows()) + " rows");
  }
  Matrix out(m.rows(), m.cols());
  for (std::size_t i = 0; i < map.size(); ++i) {
    out.row(static_cast<Index>(i)) = m.row(static_cast<Index>(map[i]));
  }
  return out;
}

}  // namespace

Permutation Permutation::from_map(std::vector<std::size_t> map) {
  check_range(map);
  std::vector<bool> seen(map.size(), false);
  for (std::size_t i = 0; i < map.size(); ++i) {
    if (seen[map[i]]) {
      fail(ErrorCode::kDuplicateIndex,
           "index " + std::to_string(map[i]) + " repeated at position " +
               std::to_string(i));
    }
    seen[map[i]] = true;
  }
  return Permutation(std::move(map));
}

Permutation Permutation::identity(std::size_t n) {
  std::vector<std::size_t> map(n);
  for (std::size_t i = 0; i < n; ++i) map[i] = i;
  return Permutation(std::move(map));
}

Permutation Permutation::inverse() const {
  std::vector<std::size_t> inv(map_.size());
  for (std::size_t i = 0; i < map_.size(); ++i) inv[map_[i]] = i;
  return Permutation(std::move(inv));
}

bool Permutation::is_identity() const noexcept {
  for (std::size_t i = 0; i < map_.size(); ++i) {
    if (map_[i] != i) return false;
  }
  return true;
}

ClusteringAssignment ClusteringAssignment::from_map(
    std::vector<std::size_t> map) {
  check_range(map);
  return ClusteringAssignment(std::move(map));
}

ClusteringAssignment ClusteringAssignment::from_permutation(
    const Permutation& p) {
  return ClusteringAssignment(
      std::vector<std::size_t>(p.map().begin(), p.map().end()));
}

Matrix apply_arrangement(const Permutation& p, const Matrix& m) {
  return select_rows(p.map(), m);
}

Matrix apply_arrangement(const ClusteringAssignment& d, const Matrix& m) {
  return select_rows(d.map(), m);
}

Matrix apply_arrangement(const Arrangement& a, const Matrix& m) {
  return select_rows(arrangement_map(a), m);
}

std::span<const std::size_t> arrangement_map(const Arrangement& a) {
  return std::visit([](const auto& x) { return x.map(); }, a);
}

}  // namespace permreg
