#pragma once

#include "permreg/matrix.hpp"

namespace permreg {

// Relative cutoff (against the largest singular value) below which
// singular values are treated as zero.
inline constexpr double kDefaultRankTol = 1e-10;

// Reduced SVD truncated at the numerical rank: M ≈ U diag(s) Vᵀ with
// U (rows × r), V (cols × r) and s nonincreasing, every s_i > rank_tol · s_0.
struct SvdFactors {
  Matrix u;
  Vector singular_values;
  Matrix v;
  double rank_tol = kDefaultRankTol;

  Index rank() const noexcept { return singular_values.size(); }
  Matrix reconstruct() const;
};

// Throws kConvergenceFailure if the underlying bidiagonal iteration does
// not converge, kInvalidArgument on non-finite input.
SvdFactors svd(const Matrix& m, double rank_tol = kDefaultRankTol);

// Moore-Penrose pseudoinverse over the retained spectrum.
Matrix pseudo_inverse(const Matrix& m, double rank_tol = kDefaultRankTol);

Index numerical_rank(const Matrix& m, double rank_tol = kDefaultRankTol);

// ‖Y − A A† Y‖²_F, the least-squares residual of regressing Y on A.
double projection_residual(const Matrix& a, const Matrix& y,
                           double rank_tol = kDefaultRankTol);

// Residual of projecting y onto the span of the orthonormal columns of
// `basis`: ‖y − B Bᵀ y‖²_F.
double residual_against_basis(const Matrix& basis, const Matrix& y);

// Thin orthonormal basis of the column space of a Gaussian draw; used for
// random orthonormal frames.
Matrix orthonormalize_columns(const Matrix& m);

}  // namespace permreg
