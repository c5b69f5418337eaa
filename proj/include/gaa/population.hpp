#pragma once

#include "gaa/types.hpp"

#include <cmath>
#include <string>

namespace gaa {

enum class WidthMode { Finite, UniformLimit, DeltaLimit };

/// Normalized site occupation P_n (n = 1..N) centred on site `mu`.
/// weights[i] holds P_{i+1}.
struct Population {
  int mu = 1;
  int n_sites = 1;
  VectorXd weights;
  WidthMode width_mode = WidthMode::Finite;

  double operator()(int n) const { return weights[n - 1]; }
};

/// Unnormalized Lorentzian kernel 1 / (1 + ((n − μ)·Δ/J)²), which is the
/// textbook (J/Δ)/((n − μ)² + (J/Δ)²) scaled by Δ/J so a narrow width never
/// divides by an underflowed square.
template <typename Scalar>
VectorX<Scalar> lorentzian_kernel(int mu, Scalar delta_over_j, int n_sites) {
  VectorX<Scalar> w(n_sites);
  for (int n = 1; n <= n_sites; ++n) {
    const Scalar x = Scalar(n - mu) * delta_over_j;
    w[n - 1] = Scalar(1) / (Scalar(1) + x * x);
  }
  return w;
}

/// Lorentzian population of width J/Δ centred at `mu`. Δ/J = 0 gives the
/// uniform limit and Δ/J = ∞ (kInfiniteDelta) the Kronecker delta at `mu`.
inline Population lorentzian_population(int mu, double delta_over_j, int n_sites) {
  if (n_sites < 1) throw InvalidArgument("n_sites must be >= 1, got " + std::to_string(n_sites));
  if (mu < 1 || mu > n_sites)
    throw InvalidArgument("mu must lie in [1, " + std::to_string(n_sites) + "], got " +
                          std::to_string(mu));
  if (!(delta_over_j >= 0.0))
    throw InvalidArgument("delta_over_j must be >= 0, got " + std::to_string(delta_over_j));

  Population p;
  p.mu = mu;
  p.n_sites = n_sites;
  if (delta_over_j == 0.0) {
    p.width_mode = WidthMode::UniformLimit;
    p.weights = VectorXd::Constant(n_sites, 1.0 / n_sites);
  } else if (std::isinf(delta_over_j)) {
    p.width_mode = WidthMode::DeltaLimit;
    p.weights = VectorXd::Zero(n_sites);
    p.weights[mu - 1] = 1.0;
  } else {
    p.width_mode = WidthMode::Finite;
    p.weights = lorentzian_kernel<double>(mu, delta_over_j, n_sites);
    p.weights /= p.weights.sum();
  }
  return p;
}

/// Σ P_n².
inline double inverse_participation_ratio(const Population& p) {
  return p.weights.squaredNorm();
}

/// 1 / Σ P_n², in [1, N].
inline double participation_ratio(const Population& p) {
  return 1.0 / inverse_participation_ratio(p);
}

/// Σ P_n (P_n − 1), the on-site interaction weight; in [−1 + 1/N, 0].
inline double interaction_sum(const Population& p) {
  return (p.weights.array() * (p.weights.array() - 1.0)).sum();
}

}  // namespace gaa
