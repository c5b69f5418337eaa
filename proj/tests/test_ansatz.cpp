#include "gaa/ansatz.hpp"

#include "test_util.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <vector>

using namespace gaa;

namespace {

// Term-by-term sum Σ_k [(Δ/J) ε_k/Δ − B] P_k with P_k built from the textbook
// Lorentzian, independent of the library's population and energy code.
double brute_force_energy(double alpha, double phi, double d, int n_sites, int mu, double b) {
  const double inc = (std::sqrt(5.0) - 1.0) / 2.0;
  const double gamma = 1.0 / d;
  std::vector<double> w(n_sites);
  double norm = 0.0;
  for (int k = 1; k <= n_sites; ++k) {
    w[k - 1] = gamma / ((k - mu) * (k - mu) + gamma * gamma);
    norm += w[k - 1];
  }
  double e = 0.0;
  for (int k = 1; k <= n_sites; ++k) {
    const double c = std::cos(2.0 * std::numbers::pi * inc * k + phi);
    e += (d * c / (1.0 - alpha * c) - b) * w[k - 1] / norm;
  }
  return e;
}

PotentialParams pot_of(double alpha, double phi, double d, int n) {
  PotentialParams p;
  p.alpha = alpha;
  p.phi = phi;
  p.delta_over_j = d;
  p.n_sites = n;
  return p;
}

}  // namespace

TEST(BFromC, Examples) {
  EXPECT_EQ(b_from_c(0.0), 0.0);
  EXPECT_EQ(b_from_c(1.0), 1.0);
  EXPECT_NEAR(b_from_c(1e12), 2.0, 1e-9);
  EXPECT_EQ(b_from_c(std::numeric_limits<double>::infinity()), 2.0);
  EXPECT_THROW(b_from_c(-1.0), InvalidArgument);
}

TEST(BFromC, ReproducesDefiningRelation) {
  for (int trial = 0; trial < 1000; ++trial) {
    double c = test::uniform(-50, 50);
    if (std::abs(c + 1.0) < 1e-3) c += 0.5;
    const AnsatzConstant k = make_ansatz_constant(c);
    EXPECT_NEAR(k.b_value * (1.0 + c), 2.0 * c, 1e-12 * std::max(1.0, std::abs(c)));
  }
}

TEST(AnsatzEnergy, ZeroAmplitudeIsMinusBExactly) {
  for (int trial = 0; trial < 200; ++trial) {
    const int n = test::uniform_int(1, 250);
    const auto pot = pot_of(test::uniform(-0.99, 0.99), test::uniform(-4, 4), 0.0, n);
    const double b = test::uniform(-3, 3);
    EXPECT_EQ(ansatz_energy(pot, test::uniform_int(1, n), b), -b);
  }
}

TEST(AnsatzEnergy, DeltaLimitIsSiteEnergyMinusB) {
  auto pot = pot_of(-0.5, std::numbers::pi, 1e6, 201);
  const double eps7 = site_energy(7, pot).over_delta;
  // Large finite amplitude: E/J / (Δ/J) approaches ε_μ/Δ regardless of B.
  for (double b : {-2.0, 0.0, 2.0})
    EXPECT_NEAR((ansatz_energy(pot, 7, b) + b) / pot.delta_over_j, eps7, 1e-9);

  pot.delta_over_j = kInfiniteDelta;
  const double e = ansatz_energy(pot, 7, 0.3);
  EXPECT_TRUE(std::isinf(e));
  EXPECT_EQ(std::signbit(e), std::signbit(eps7));
}

TEST(AnsatzEnergy, SingleSiteChain) {
  const auto pot = pot_of(0.3, 1.1, 2.7, 1);
  EXPECT_DOUBLE_EQ(ansatz_energy(pot, 1, 0.4), 2.7 * site_energy(1, pot).over_delta - 0.4);
}

TEST(AnsatzEnergy, AgreesWithTermwiseSum) {
  // numpy/mpmath reference for the Fig. 1(c) site μ = 7 (rank 9, B = 4/7) at Δ/J = 1.
  const auto fig1 = pot_of(-0.5, std::numbers::pi, 1.0, 201);
  EXPECT_NEAR(ansatz_energy(fig1, 7, -2.0 + 9 * (4.0 / 14.0)), -0.794485816017668339, 1e-13);

  for (int trial = 0; trial < 300; ++trial) {
    const int n = test::uniform_int(1, 250);
    const int mu = test::uniform_int(1, n);
    const double alpha = test::uniform(-0.95, 0.95), phi = test::uniform(-4, 4);
    const double d = std::exp(test::uniform(-4, 3)), b = test::uniform(-2, 2);
    const double expected = brute_force_energy(alpha, phi, d, n, mu, b);
    EXPECT_NEAR(ansatz_energy(pot_of(alpha, phi, d, n), mu, b), expected,
                1e-12 * std::max(1.0, d));
  }
}

TEST(AnsatzEnergy, InteractionTermAddsScaledSum) {
  const auto pot = pot_of(0.2, 0.5, 1.3, 31);
  const double base = ansatz_energy(pot, 10, 0.7);
  const double s = interaction_sum(lorentzian_population(10, 1.3, 31));
  EXPECT_NEAR(ansatz_energy(pot, 10, 0.7, 0.8), base + 0.8 * s, 1e-14);
}

TEST(MobilityEdge, PublishedLines) {
  for (int i = 0; i <= 100; ++i) {
    const double d = 0.05 * i;
    EXPECT_NEAR(mobility_edge_energy(-0.5, d), -4.0 + 2.0 * d, 1e-12);
  }
  for (int i = 1; i <= 95; ++i) {
    for (double alpha : {0.01 * i, -0.01 * i})
      EXPECT_NEAR(mobility_edge_energy(alpha, 1.8), 0.2 / alpha, 1e-12);
  }
  EXPECT_EQ(mobility_edge_energy(0.37, 2.0), 0.0);
  EXPECT_THROW(mobility_edge_energy(0.0, 1.0), InvalidArgument);
}

TEST(MobilityEdge, IdentityOnRandomInputs) {
  for (int trial = 0; trial < 1000; ++trial) {
    double alpha = test::uniform(-0.99, 0.99);
    if (std::abs(alpha) < 1e-3) alpha = 0.5;
    const double d = test::uniform(0, 10);
    EXPECT_NEAR(alpha * mobility_edge_energy(alpha, d) + d, 2.0, 1e-12);
  }
}

TEST(ClassifyState, AubryAndreLimit) {
  for (double e : {-3.0, 0.0, 2.5}) {
    EXPECT_EQ(classify_state(e, 0.0, 3.0), StateClass::Localized);
    EXPECT_EQ(classify_state(e, 0.0, 1.0), StateClass::Extended);
    EXPECT_EQ(classify_state(e, 0.0, 2.0), StateClass::Critical);
  }
}

TEST(ClassifyState, GeneralizedModel) {
  EXPECT_EQ(classify_state(1.0, 0.5, 1.8), StateClass::Localized);
  EXPECT_EQ(classify_state(0.1, 0.5, 1.8), StateClass::Extended);
  EXPECT_EQ(classify_state(0.4, 0.5, 1.8), StateClass::Critical);
  // α = −0.5, Δ/J = 1: edge at E/J = −2, localized below it.
  EXPECT_EQ(classify_state(-2.5, -0.5, 1.0), StateClass::Localized);
  EXPECT_EQ(classify_state(-1.5, -0.5, 1.0), StateClass::Extended);
}
