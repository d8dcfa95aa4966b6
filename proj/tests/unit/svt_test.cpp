#include <gtest/gtest.h>

#include "permreg/errors.hpp"
#include "permreg/instance.hpp"
#include "permreg/linalg.hpp"
#include "permreg/random.hpp"
#include "permreg/svt.hpp"

namespace permreg {
namespace {

Matrix random_orthonormal(Index rows, Index cols, Rng& rng) {
  return orthonormalize_columns(gaussian_matrix(rows, cols, 1.0, rng));
}

TEST(SvtThreshold, DiagonalSpectrum) {
  Matrix m(2, 2);
  m << 3, 0, 0, 1;
  Matrix expected(2, 2);
  expected << 3, 0, 0, 0;
  EXPECT_LE((svt_threshold(m, 2.0) - expected).norm(), 1e-14);
}

TEST(SvtThreshold, ZeroLevelIsIdentity) {
  Rng rng(1);
  const Matrix m = gaussian_matrix(5, 4, 1.0, rng);
  EXPECT_LE((svt_threshold(m, 0.0) - m).norm(), 1e-12 * m.norm());
}

TEST(SvtThreshold, TiesAtLevelAreKept) {
  Matrix m(2, 2);
  m << 2, 0, 0, 1;
  EXPECT_LE((svt_threshold(m, 2.0) - Matrix{{2, 0}, {0, 0}}).norm(), 1e-14);
}

TEST(SvtThreshold, ReproducesRankTwoAboveThreshold) {
  Rng rng(42);
  const Matrix u = random_orthonormal(20, 2, rng);
  const Matrix v = random_orthonormal(5, 2, rng);
  const Matrix m = u * Vector{{9.0, 5.0}}.asDiagonal() * v.transpose();
  EXPECT_LE((svt_threshold(m, 4.0) - m).norm(), 1e-8 * m.norm());
}

TEST(SvtThreshold, NegativeLevelRejected) {
  EXPECT_THROW(svt_threshold(Matrix::Ones(2, 2), -1.0), Error);
}

TEST(SvtDenoise, ZeroInputStaysZero) {
  const auto r = svt_denoise(Matrix::Zero(4, 3), 1.0);
  EXPECT_EQ(r.y_hat, Matrix::Zero(4, 3));
  EXPECT_EQ(r.diagnostics.get("retained_rank"), 0.0);
}

TEST(SvtDenoise, RequiresPositiveSigma) {
  EXPECT_THROW(svt_denoise(Matrix::Ones(2, 2), 0.0), Error);
}

TEST(SvtDenoise, PureNoiseIsZeroedWithHighProbability) {
  Rng rng(2718);
  int zeros = 0;
  for (int trial = 0; trial < 100; ++trial) {
    const Matrix w = gaussian_matrix(64, 64, 1.0, rng);
    const auto r = svt_denoise(w, 1.0);
    EXPECT_DOUBLE_EQ(*r.diagnostics.get("lambda"), 1.1 * 16.0);
    if (r.y_hat.isZero(0.0)) ++zeros;
  }
  EXPECT_GE(zeros, 95);
}

TEST(SvtDenoise, RecoversRankOfStrongSignal) {
  Rng rng(31);
  const Index n = 40, m = 30;
  const double level = 10.0 * (std::sqrt(40.0) + std::sqrt(30.0));
  int hits = 0;
  for (int trial = 0; trial < 100; ++trial) {
    const Matrix signal = random_orthonormal(n, 2, rng) * Vector{{level, level}}.asDiagonal() *
                          random_orthonormal(m, 2, rng).transpose();
    const auto r = svt_denoise(signal + gaussian_matrix(n, m, 1.0, rng), 1.0);
    if (r.diagnostics.get("retained_rank") == 2.0) ++hits;
  }
  EXPECT_GE(hits, 95);
}

TEST(SvtProperty, IdempotentRankMonotoneAndEquivariant) {
  Rng rng(55);
  for (int trial = 0; trial < 100; ++trial) {
    const Index rows = 2 + static_cast<Index>(rng.below(8));
    const Index cols = 2 + static_cast<Index>(rng.below(8));
    const Matrix m = gaussian_matrix(rows, cols, 1.0, rng);
    const double lambda = 2.0 * rng.uniform() * svd(m).singular_values(0);
    const Matrix t = svt_threshold(m, lambda);
    EXPECT_LE((svt_threshold(t, lambda) - t).norm(), 1e-8 * std::max(1.0, t.norm()));
    EXPECT_LE(numerical_rank(t), numerical_rank(m));

    const Matrix q = random_orthonormal(rows, rows, rng);
    const Matrix r = random_orthonormal(cols, cols, rng);
    const Matrix rotated = svt_threshold(q * m * r.transpose(), lambda);
    EXPECT_LE((rotated - q * t * r.transpose()).norm(), 1e-8 * std::max(1.0, m.norm()));
  }
}

}  // namespace
}  // namespace permreg
