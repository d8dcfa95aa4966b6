#pragma once

#include <Eigen/Dense>

namespace permreg {

// Dense double matrices. Zero-extent dimensions are allowed (d = 0 designs).
using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;
using Index = Eigen::Index;

inline bool all_finite(const Matrix& m) { return m.allFinite(); }

// Throws kInvalidArgument naming `what` if m holds NaN or Inf.
void require_finite(const Matrix& m, const char* what);

// Throws kDimensionMismatch unless a.rows() == b.rows().
void require_same_rows(const Matrix& a, const Matrix& b, const char* what);

}  // namespace permreg
