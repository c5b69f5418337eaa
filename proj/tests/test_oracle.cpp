#include "gaa/oracle.hpp"

#include "test_util.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

using namespace gaa;

namespace {

PotentialParams pot_of(double alpha, double phi, double d, int n) {
  PotentialParams p;
  p.alpha = alpha;
  p.phi = phi;
  p.delta_over_j = d;
  p.n_sites = n;
  return p;
}

}  // namespace

TEST(BuildHamiltonian, SingleSite) {
  const auto h = build_hamiltonian(pot_of(0.2, 0.4, 1.5, 1));
  ASSERT_EQ(h.size(), 1);
  EXPECT_EQ(h.offdiag.size(), 0);
  EXPECT_EQ(h.diag[0], site_energy(1, h.pot).over_j);
}

TEST(BuildHamiltonian, TwoSiteHoppingOnly) {
  const auto s = eigensystem(build_hamiltonian(pot_of(0.4, 0.0, 0.0, 2)));
  EXPECT_NEAR(s.eigenvalues[0], -1.0, 1e-15);
  EXPECT_NEAR(s.eigenvalues[1], 1.0, 1e-15);
}

TEST(BuildHamiltonian, DiagonalMatchesSiteEnergies) {
  const auto pot = pot_of(-0.5, std::numbers::pi, 1.0, 201);
  const auto h = build_hamiltonian(pot);
  for (int n = 1; n <= 201; ++n) EXPECT_NEAR(h.diag[n - 1], site_energy(n, pot).over_j, 1e-14);
  EXPECT_TRUE((h.offdiag.array() == -1.0).all());
}

TEST(BuildHamiltonian, RejectsInfiniteAmplitude) {
  EXPECT_THROW(build_hamiltonian(pot_of(0.0, 0.0, kInfiniteDelta, 5)), InvalidArgument);
}

TEST(Eigensystem, SingleSite) {
  const auto s = eigensystem(build_hamiltonian(pot_of(0.1, 0.2, 2.0, 1)));
  EXPECT_EQ(s.eigenvalues[0], site_energy(1, pot_of(0.1, 0.2, 2.0, 1)).over_j);
  EXPECT_EQ(std::abs(s.eigenvectors(0, 0)), 1.0);
  EXPECT_EQ(s.iprs[0], 1.0);
}

TEST(Eigensystem, FreeChainSpectrum) {
  const int n = 201;
  const auto s = eigensystem(build_hamiltonian(pot_of(-0.5, std::numbers::pi, 0.0, n)));
  for (int k = 1; k <= n; ++k)
    EXPECT_NEAR(s.eigenvalues[k - 1], -2.0 * std::cos(std::numbers::pi * k / (n + 1)), 1e-10);
}

TEST(Eigensystem, RandomizedInvariants) {
  for (int trial = 0; trial < 12; ++trial) {
    const int n = test::uniform_int(1, 301);
    const auto pot = pot_of(test::uniform(-0.9, 0.9), test::uniform(-4, 4), test::uniform(0, 6), n);
    const auto h = build_hamiltonian(pot);
    const auto s = eigensystem(h);
    const MatrixX<double> dense = h.dense();
    for (int j = 0; j < n; ++j) {
      if (j > 0) EXPECT_LE(s.eigenvalues[j - 1], s.eigenvalues[j]);
      const VectorXd v = s.eigenvectors.col(j);
      EXPECT_NEAR(v.norm(), 1.0, 1e-10);
      EXPECT_LE((dense * v - s.eigenvalues[j] * v).norm(), 1e-9 * h.norm());
      EXPECT_GE(s.iprs[j], 1.0 / n - 1e-12);
      EXPECT_LE(s.iprs[j], 1.0 + 1e-12);
      EXPECT_GE(s.eigenvalues[j], h.diag.minCoeff() - 2.0 - 1e-12);
      EXPECT_LE(s.eigenvalues[j], h.diag.maxCoeff() + 2.0 + 1e-12);
    }
    EXPECT_NEAR(s.eigenvalues.sum(), h.diag.sum(), 1e-8 * n);
    if (n <= 201) {
      const MatrixX<double> gram = s.eigenvectors.transpose() * s.eigenvectors;
      EXPECT_LE((gram - MatrixX<double>::Identity(n, n)).cwiseAbs().maxCoeff(), 1e-8);
    }
  }
}

TEST(Eigensystem, AubryAndreTransitionSignature) {
  const auto loc = eigensystem(build_hamiltonian(pot_of(0.0, 0.0, 3.0, 201)));
  const auto ext = eigensystem(build_hamiltonian(pot_of(0.0, 0.0, 1.0, 201)));
  // numpy eigh on the same matrices gives a ratio of 44.14.
  EXPECT_GE(loc.iprs.mean() / ext.iprs.mean(), 10.0);
  EXPECT_NEAR(loc.iprs.mean() / ext.iprs.mean(), 44.1433, 1e-3);
  for (auto c : loc.classes) EXPECT_EQ(c, StateClass::Localized);
  for (auto c : ext.classes) EXPECT_EQ(c, StateClass::Extended);
}

TEST(MeConsistency, FreeChainAllExtendedSide) {
  for (double alpha : {-0.9, -0.5, 0.3, 0.9}) {
    const auto pot = pot_of(alpha, 0.7, 0.0, 101);
    const auto r = me_consistency(eigensystem(build_hamiltonian(pot)), pot);
    EXPECT_EQ(r.extended, 101);
    EXPECT_EQ(r.localized, 0);
    EXPECT_TRUE(std::isnan(r.median_ipr_localized));
  }
}

TEST(MeConsistency, StrongPotentialAllLocalizedSide) {
  const auto pot = pot_of(-0.5, std::numbers::pi, 50.0, 201);
  const auto r = me_consistency(eigensystem(build_hamiltonian(pot)), pot);
  EXPECT_EQ(r.localized, 201);
  EXPECT_EQ(r.extended, 0);
}

TEST(MeConsistency, GoldenAgreementFractions) {
  // numpy eigh reference: Δ/J = 0.5 → 100/201, 1 → 147/201, 1.5 → 176/201.
  const struct {
    double d;
    int localized;
    double fraction;
  } cases[] = {{0.5, 0, 100.0 / 201}, {1.0, 47, 147.0 / 201}, {1.5, 76, 176.0 / 201}};
  for (const auto& c : cases) {
    const auto pot = pot_of(-0.5, std::numbers::pi, c.d, 201);
    const auto r = me_consistency(eigensystem(build_hamiltonian(pot)), pot);
    EXPECT_EQ(r.localized, c.localized) << c.d;
    EXPECT_EQ(r.critical, 0);
    EXPECT_NEAR(r.agreement_fraction, c.fraction, 1e-12) << c.d;
  }
}

TEST(MeConsistency, RejectsAubryAndreLimit) {
  const auto pot = pot_of(0.0, 0.0, 1.0, 11);
  EXPECT_THROW(me_consistency(eigensystem(build_hamiltonian(pot)), pot), InvalidArgument);
}

TEST(Median, OddEvenAndEmpty) {
  EXPECT_EQ(median({3, 1, 2}), 2);
  EXPECT_EQ(median({4, 1, 3, 2}), 2.5);
  EXPECT_TRUE(std::isnan(median({})));
}
