#pragma once

#include "gaa/types.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace gaa {

/// Inverse golden ratio (√5 − 1)/2, the default incommensuration.
template <typename Scalar = double>
inline constexpr Scalar kInverseGoldenRatio = std::numbers::phi_v<Scalar> - Scalar(1);

/// Knobs of the quasiperiodic potential. All energies are in units of the
/// hopping J, which is fixed to 1.
struct PotentialParams {
  double delta_over_j = 0.0;
  double phi = 0.0;
  double alpha = 0.0;
  double b = kInverseGoldenRatio<double>;
  int n_sites = 1;

  /// Throws InvalidArgument naming the offending field.
  void validate() const {
    if (!(std::abs(alpha) < 1.0))
      throw InvalidArgument("alpha must lie in (-1, 1), got " + std::to_string(alpha));
    if (!(delta_over_j >= 0.0))
      throw InvalidArgument("delta_over_j must be >= 0, got " + std::to_string(delta_over_j));
    if (!(b > 0.0) || !std::isfinite(b))
      throw InvalidArgument("b must be a positive finite number");
    if (!std::isfinite(phi)) throw InvalidArgument("phi must be finite");
    if (n_sites < 1)
      throw InvalidArgument("n_sites must be >= 1, got " + std::to_string(n_sites));
  }
};

/// Shape of the site energy, ε_n/Δ = cos θ / (1 − α cos θ) with θ = 2πnb + φ.
template <typename Scalar>
Scalar site_energy_shape(int n, Scalar alpha, Scalar phi, Scalar b) {
  using std::cos;
  const Scalar c = cos(Scalar(2) * std::numbers::pi_v<Scalar> * Scalar(n) * b + phi);
  return c / (Scalar(1) - alpha * c);
}

struct SiteEnergy {
  double over_delta;  // ε_n/Δ
  double over_j;      // ε_n/J
};

/// Site energy at 1-based site `n`.
inline SiteEnergy site_energy(int n, const PotentialParams& pot) {
  if (n < 1) throw InvalidArgument("site index must be >= 1, got " + std::to_string(n));
  if (!(std::abs(pot.alpha) < 1.0))
    throw InvalidArgument("alpha must lie in (-1, 1), got " + std::to_string(pot.alpha));
  const double shape = site_energy_shape<double>(n, pot.alpha, pot.phi, pot.b);
  // Keep ∞·0 out of the delta-limit.
  const double over_j = shape == 0.0 ? 0.0 : pot.delta_over_j * shape;
  return {shape, over_j};
}

/// ε_k/Δ for k = 1..count.
inline VectorXd site_energy_shapes(const PotentialParams& pot, int count) {
  VectorXd out(count);
  for (int k = 1; k <= count; ++k) out[k - 1] = site_energy(k, pot).over_delta;
  return out;
}

}  // namespace gaa
