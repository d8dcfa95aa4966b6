#include "permreg/linalg.hpp"

#include <string>

#include "permreg/errors.hpp"

namespace permreg {

Matrix SvdFactors::reconstruct() const {
  return u * singular_values.asDiagonal() * v.transpose();
}

SvdFactors svd(const Matrix& m, double rank_tol) {
  require_finite(m, "svd input");
  if (rank_tol < 0.0) fail(ErrorCode::kInvalidArgument, "rank_tol < 0");

  SvdFactors out;
  out.rank_tol = rank_tol;
  if (m.rows() == 0 || m.cols() == 0) {
    out.u.resize(m.rows(), 0);
    out.v.resize(m.cols(), 0);
    out.singular_values.resize(0);
    return out;
  }

  Eigen::BDCSVD<Matrix> dec(m, Eigen::ComputeThinU | Eigen::ComputeThinV);
  if (dec.info() != Eigen::Success) {
    fail(ErrorCode::kConvergenceFailure,
         "SVD did not converge on a " + std::to_string(m.rows()) + "x" +
             std::to_string(m.cols()) + " matrix");
  }
  const Vector& s = dec.singularValues();
  const double cutoff = rank_tol * s(0);
  Index r = 0;
  while (r < s.size() && s(r) > cutoff && s(r) > 0.0) ++r;

  out.u = dec.matrixU().leftCols(r);
  out.v = dec.matrixV().leftCols(r);
  out.singular_values = s.head(r);
  return out;
}

Matrix pseudo_inverse(const Matrix& m, double rank_tol) {
  const SvdFactors f = svd(m, rank_tol);
  return f.v * f.singular_values.cwiseInverse().asDiagonal() *
         f.u.transpose();
}

Index numerical_rank(const Matrix& m, double rank_tol) {
  return svd(m, rank_tol).rank();
}

double residual_against_basis(const Matrix& basis, const Matrix& y) {
  if (basis.cols() == 0) return y.squaredNorm();
  return (y - basis * (basis.transpose() * y)).squaredNorm();
}

double projection_residual(const Matrix& a, const Matrix& y,
                           double rank_tol) {
  require_same_rows(a, y, "projection_residual");
  return residual_against_basis(svd(a, rank_tol).u, y);
}

Matrix orthonormalize_columns(const Matrix& m) {
  if (m.cols() > m.rows()) {
    fail(ErrorCode::kInvalidDimensions,
         "cannot orthonormalize more columns than rows");
  }
  Eigen::HouseholderQR<Matrix> qr(m);
  return qr.householderQ() * Matrix::Identity(m.rows(), m.cols());
}

}  // namespace permreg
