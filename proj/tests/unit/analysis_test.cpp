#include <gtest/gtest.h>

#include <cmath>

#include "permreg/analysis.hpp"
#include "permreg/errors.hpp"
#include "permreg/linalg.hpp"
#include "permreg/random.hpp"
#include "permreg/svt.hpp"

namespace permreg {
namespace {

TEST(NormalizedError, BasicValues) {
  const Matrix y = Matrix::Ones(2, 2);
  EXPECT_EQ(normalized_prediction_error(y, y), 0.0);
  EXPECT_DOUBLE_EQ(normalized_prediction_error(y, Matrix::Zero(2, 2)), 1.0);
  EXPECT_DOUBLE_EQ(normalized_prediction_error(2 * y, Matrix::Zero(2, 2)), 4.0);
  EXPECT_THROW(normalized_prediction_error(y, Matrix::Zero(3, 2)), Error);
}

TEST(NormalizedError, InvariantUnderSharedPermutation) {
  Rng rng(1);
  for (int trial = 0; trial < 50; ++trial) {
    const Matrix a = gaussian_matrix(8, 3, 1.0, rng);
    const Matrix b = gaussian_matrix(8, 3, 1.0, rng);
    const Permutation p = random_permutation(8, rng);
    EXPECT_NEAR(normalized_prediction_error(apply_arrangement(p, a), apply_arrangement(p, b)),
                normalized_prediction_error(a, b), 1e-13);
  }
}

TEST(Rates, MleBranches) {
  const double e = std::exp(1.0);
  EXPECT_NEAR(rate_mle({.n = e, .m = 1, .rank_a = 1, .sigma = 1}), 1.0 / e + 1.0, 1e-15);
  EXPECT_NEAR(rate_mle({.n = 55, .m = 8, .rank_a = 2, .sigma = 1}),
              2.0 / 55 + std::log(55.0) / 8, 1e-15);
  EXPECT_NEAR(rate_mle({.n = 55, .m = 2, .rank_a = 2, .sigma = 3}),
              9.0 * (2.0 / 55 + 2.0 / 2), 1e-14);
}

TEST(Rates, SvtSymmetricCaseAndMonotonicity) {
  EXPECT_NEAR(rate_svt({.n = 50, .m = 50, .rank_a = 3, .sigma = 2}), 2 * 4.0 * 3 / 50, 1e-15);
  const RateParams base{.n = 40, .m = 30, .rank_a = 2, .sigma = 1};
  auto with = [&](auto f) { RateParams p = base; f(p); return rate_svt(p); };
  EXPECT_LT(with([](RateParams& p) { p.n = 80; }), rate_svt(base));
  EXPECT_LT(with([](RateParams& p) { p.m = 60; }), rate_svt(base));
  EXPECT_GT(with([](RateParams& p) { p.rank_a = 3; }), rate_svt(base));
  EXPECT_GT(with([](RateParams& p) { p.sigma = 1.5; }), rate_svt(base));
}

TEST(AdversarialInstance, EqualSingularValuesAtStatedLevel) {
  Rng rng(2);
  const Matrix a = gaussian_matrix(64, 8, 1.0, rng);
  const auto inst = svt_adversarial_instance(a, 64, 1.0, 7);
  const double level = (8.0 + 8.0) / 6.0;
  const auto f = svd(inst.y_star);
  ASSERT_EQ(f.rank(), 8);
  for (Index i = 0; i < 8; ++i) EXPECT_NEAR(f.singular_values(i), level, 1e-8 * level);
  EXPECT_TRUE(std::get<Permutation>(inst.arrangement).is_identity());
  EXPECT_LE((inst.y_star - inst.a * inst.x_star).norm(), 1e-12);
}

TEST(AdversarialInstance, SingleColumnAndSigmaScaling) {
  Rng rng(3);
  const Matrix a = gaussian_matrix(30, 1, 1.0, rng);
  const auto inst = svt_adversarial_instance(a, 10, 2.5, 1);
  const auto f = svd(inst.y_star);
  ASSERT_EQ(f.rank(), 1);
  EXPECT_NEAR(f.singular_values(0), svt_adversarial_level(30, 10, 2.5), 1e-10);
  EXPECT_NEAR(svt_adversarial_level(30, 10, 2.5), 2.5 * (std::sqrt(30.0) + std::sqrt(10.0)) / 6,
              1e-14);
}

TEST(AdversarialInstance, RankTooLarge) {
  Rng rng(4);
  try {
    svt_adversarial_instance(gaussian_matrix(10, 4, 1.0, rng), 3, 1.0, 0);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kRankTooLarge);
  }
}

TEST(AdversarialInstance, SvtErrorFloorOnLambdaGrid) {
  // n = m = 64, r = 8: Case 1 of the argument gives (1/√2 − 2/3)² ≈ 0.00163,
  // Case 2 gives r(n+m)/(36nm) ≈ 0.00694; the binding floor is 0.0016.
  Rng rng(5);
  const Matrix a = gaussian_matrix(64, 8, 1.0, rng);
  const double scale = 16.0;
  for (int step = 0; step <= 15; ++step) {
    const double lambda = 0.2 * step * scale;
    int above = 0;
    for (std::uint64_t draw = 0; draw < 25; ++draw) {
      const auto inst = svt_adversarial_instance(a, 64, 1.0, draw);
      if (normalized_prediction_error(svt_threshold(inst.y, lambda), inst.y_star) >= 0.0016) {
        ++above;
      }
    }
    EXPECT_GE(above, 24) << "lambda=" << lambda;
  }
}

TEST(Flatness, IdentityWithBasisWitness) {
  const Index n = 6;
  Vector e1 = Vector::Zero(n);
  e1(0) = 1;
  const auto v = flatness_witness_check(Matrix::Identity(n, n), e1, 1.0 / n, 1.0);
  EXPECT_TRUE(v.member);
  EXPECT_NEAR(v.best_gap, 1.0, 1e-14);
}

TEST(Flatness, IdenticalRowsAreInconclusive) {
  const Matrix a = Matrix::Ones(10, 1) * Vector{{1.0, -2.0, 0.5}}.transpose();
  const auto v = flatness_witness_check(a, std::nullopt, 0.5, 1e-6, 3);
  EXPECT_FALSE(v.member);
  EXPECT_FALSE(v.witness.has_value());
}

TEST(Flatness, InvalidGamma) {
  const Matrix a = Matrix::Identity(4, 4);
  for (double gamma : {0.1, 1.0, 0.0, 1.2}) {
    try {
      flatness_witness_check(a, std::nullopt, gamma, 0.1);
      ADD_FAILURE() << gamma;
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::kInvalidGamma);
    }
  }
}

TEST(Flatness, GaussianDesignsAreMembersAndWitnessesVerify) {
  const Index n = 200;
  const double xi = 0.05 / std::sqrt(static_cast<double>(n));
  int members = 0;
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    Rng rng(seed);
    const Matrix a = gaussian_matrix(n, 5, 1.0, rng);
    const auto v = flatness_witness_check(a, std::nullopt, 0.5, xi, seed);
    if (!v.member) continue;
    ++members;
    // Independent re-check: unit norm, in range(A), gap at position n/2.
    const Vector& w = *v.witness;
    EXPECT_NEAR(w.norm(), 1.0, 1e-12);
    const Matrix basis = svd(a).u;
    EXPECT_LE((w - basis * (basis.transpose() * w)).norm(), 1e-10);
    std::vector<double> s(w.data(), w.data() + n);
    std::sort(s.rbegin(), s.rend());
    EXPECT_GE(s[99] - s[100], xi);
  }
  EXPECT_GE(members, 95);
}

}  // namespace
}  // namespace permreg
