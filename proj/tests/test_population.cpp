#include "gaa/population.hpp"

#include "test_util.hpp"

#include <gtest/gtest.h>

#include <cmath>

using namespace gaa;

TEST(Population, UniformLimitAtZeroAmplitude) {
  const Population p = lorentzian_population(2, 0.0, 5);
  EXPECT_EQ(p.width_mode, WidthMode::UniformLimit);
  for (int n = 1; n <= 5; ++n) EXPECT_EQ(p(n), 0.2);
}

TEST(Population, DeltaLimitAtInfiniteAmplitude) {
  const Population p = lorentzian_population(3, kInfiniteDelta, 5);
  EXPECT_EQ(p.width_mode, WidthMode::DeltaLimit);
  const double expected[] = {0, 0, 1, 0, 0};
  for (int n = 1; n <= 5; ++n) EXPECT_EQ(p(n), expected[n - 1]);
}

TEST(Population, ThreeSiteHandValue) {
  // Unnormalized (0.5, 1, 0.5).
  const Population p = lorentzian_population(2, 1.0, 3);
  EXPECT_NEAR(p(1), 0.25, 1e-15);
  EXPECT_NEAR(p(2), 0.5, 1e-15);
  EXPECT_NEAR(p(3), 0.25, 1e-15);
}

TEST(Population, MatchesTextbookLorentzian) {
  const int n_sites = 40, mu = 13;
  const double d = 0.7;
  const double gamma = 1.0 / d;
  double norm = 0.0;
  for (int k = 1; k <= n_sites; ++k) norm += gamma / ((k - mu) * (k - mu) + gamma * gamma);
  const Population p = lorentzian_population(mu, d, n_sites);
  for (int n = 1; n <= n_sites; ++n)
    EXPECT_NEAR(p(n), gamma / ((n - mu) * (n - mu) + gamma * gamma) / norm, 1e-15);
}

TEST(Population, RatiosAndInteractionSumHandValues) {
  const Population p = lorentzian_population(2, 1.0, 3);
  EXPECT_NEAR(participation_ratio(p), 8.0 / 3.0, 1e-14);
  EXPECT_NEAR(inverse_participation_ratio(p), 0.375, 1e-15);
  EXPECT_NEAR(interaction_sum(p), -0.625, 1e-15);

  const Population uniform = lorentzian_population(4, 0.0, 7);
  EXPECT_NEAR(participation_ratio(uniform), 7.0, 1e-13);
  EXPECT_NEAR(inverse_participation_ratio(uniform), 1.0 / 7.0, 1e-15);
  EXPECT_NEAR(interaction_sum(uniform), -1.0 + 1.0 / 7.0, 1e-15);

  const Population delta = lorentzian_population(4, kInfiniteDelta, 7);
  EXPECT_EQ(participation_ratio(delta), 1.0);
  EXPECT_EQ(inverse_participation_ratio(delta), 1.0);
  EXPECT_EQ(interaction_sum(delta), 0.0);
}

TEST(Population, SymmetricTruncationAtCentre) {
  for (int n_sites : {1, 3, 51, 201}) {
    const int mu = (n_sites + 1) / 2;
    for (double d : {0.01, 0.3, 1.0, 4.0}) {
      const Population p = lorentzian_population(mu, d, n_sites);
      for (int j = 1; mu - j >= 1; ++j) EXPECT_EQ(p(mu - j), p(mu + j));
    }
  }
}

TEST(Population, RandomizedInvariants) {
  for (int trial = 0; trial < 1000; ++trial) {
    const int n_sites = test::uniform_int(1, 300);
    const int mu = test::uniform_int(1, n_sites);
    const double d = trial % 10 == 0 ? 0.0 : std::exp(test::uniform(-6, 4));
    const Population p = lorentzian_population(mu, d, n_sites);
    EXPECT_NEAR(p.weights.sum(), 1.0, 1e-12);
    EXPECT_GT(p.weights.minCoeff(), 0.0);
    const double pr = participation_ratio(p);
    EXPECT_NEAR(pr * inverse_participation_ratio(p), 1.0, 1e-12);
    EXPECT_GE(pr, 1.0 - 1e-12);
    EXPECT_LE(pr, n_sites * (1 + 1e-12));
    const double s = interaction_sum(p);
    EXPECT_GE(s, -1.0 + 1.0 / n_sites - 1e-12);
    EXPECT_LE(s, 1e-15);
  }
}

TEST(Population, ParticipationRatioNonIncreasingInAmplitude) {
  double prev = std::numeric_limits<double>::infinity();
  for (int i = 0; i <= 100; ++i) {
    const double pr = participation_ratio(lorentzian_population(101, 0.1 * i, 201));
    EXPECT_LE(pr, prev) << "Delta/J = " << 0.1 * i;
    prev = pr;
  }
}

TEST(Population, RejectsOutOfRangeCentre) {
  EXPECT_THROW(lorentzian_population(0, 1.0, 5), InvalidArgument);
  EXPECT_THROW(lorentzian_population(6, 1.0, 5), InvalidArgument);
  EXPECT_THROW(lorentzian_population(1, -0.1, 5), InvalidArgument);
  EXPECT_THROW(lorentzian_population(1, 1.0, 0), InvalidArgument);
}
