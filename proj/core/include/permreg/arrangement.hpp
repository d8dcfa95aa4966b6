#pragma once

#include <cstddef>
#include <span>
#include <variant>
#include <vector>

#include "permreg/matrix.hpp"

namespace permreg {

// Row-selection convention used throughout: applying an arrangement with
// map `p` to M yields the matrix whose row i is row p[i] of M.

class Permutation {
 public:
  // Validates bijectivity; throws kOutOfRange / kDuplicateIndex.
  static Permutation from_map(std::vector<std::size_t> map);
  static Permutation identity(std::size_t n);

  std::size_t size() const noexcept { return map_.size(); }
  std::span<const std::size_t> map() const noexcept { return map_; }
  std::size_t operator[](std::size_t i) const { return map_[i]; }

  Permutation inverse() const;
  bool is_identity() const noexcept;

  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  explicit Permutation(std::vector<std::size_t> map) : map_(std::move(map)) {}
  std::vector<std::size_t> map_;
};

// A 0/1 row-stochastic selection: rows may repeat or be omitted.
class ClusteringAssignment {
 public:
  // Throws kOutOfRange if any entry is >= map.size().
  static ClusteringAssignment from_map(std::vector<std::size_t> map);
  static ClusteringAssignment from_permutation(const Permutation& p);

  std::size_t size() const noexcept { return map_.size(); }
  std::span<const std::size_t> map() const noexcept { return map_; }
  std::size_t operator[](std::size_t i) const { return map_[i]; }

  friend bool operator==(const ClusteringAssignment&,
                         const ClusteringAssignment&) = default;

 private:
  explicit ClusteringAssignment(std::vector<std::size_t> map)
      : map_(std::move(map)) {}
  std::vector<std::size_t> map_;
};

using Arrangement = std::variant<Permutation, ClusteringAssignment>;

// Convenience alias for make_permutation in the public vocabulary.
inline Permutation make_permutation(std::vector<std::size_t> map) {
  return Permutation::from_map(std::move(map));
}

// Throws kDimensionMismatch if the map length differs from m.rows().
Matrix apply_arrangement(const Permutation& p, const Matrix& m);
Matrix apply_arrangement(const ClusteringAssignment& d, const Matrix& m);
Matrix apply_arrangement(const Arrangement& a, const Matrix& m);

std::span<const std::size_t> arrangement_map(const Arrangement& a);

}  // namespace permreg
