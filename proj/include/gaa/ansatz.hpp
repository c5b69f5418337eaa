#pragma once

#include "gaa/population.hpp"
#include "gaa/potential.hpp"
#include "gaa/types.hpp"

#include <cmath>
#include <string_view>

namespace gaa {

/// Recurrence constant C and the diagonal shift B = 2C/(1 + C) it induces on
/// the hopping term. Only B enters any energy; C is kept for provenance.
struct AnsatzConstant {
  double c = 0.0;
  double b_value = 0.0;
};

inline double b_from_c(double c) {
  if (c == -1.0) throw InvalidArgument("C = -1 is a pole of B = 2C/(1 + C)");
  if (std::isinf(c)) return 2.0;
  return 2.0 * c / (1.0 + c);
}

inline AnsatzConstant make_ansatz_constant(double c) { return {c, b_from_c(c)}; }

/// Σ_k (ε_k/Δ) P_k over the population's sites.
inline double population_weighted_shape(const PotentialParams& pot, const Population& p) {
  double acc = 0.0;
  for (int k = 1; k <= p.n_sites; ++k) {
    const double w = p(k);
    if (w != 0.0) acc += site_energy_shape<double>(k, pot.alpha, pot.phi, pot.b) * w;
  }
  return acc;
}

/// Parametrized energy E/J of the state localized at `mu`:
///   Σ_k [(Δ/J)(ε_k/Δ) − B] P_k(μ) + (U/J) Σ_k P_k (P_k − 1).
/// Uses Σ P_k = 1, so Δ/J = 0 yields exactly −B when U = 0.
inline double ansatz_energy(const PotentialParams& pot, int mu, double b_value,
                            double u_over_j = 0.0) {
  pot.validate();
  const Population p = lorentzian_population(mu, pot.delta_over_j, pot.n_sites);
  double e = -b_value;
  if (pot.delta_over_j != 0.0) {
    const double shape = population_weighted_shape(pot, p);
    if (shape != 0.0) e += pot.delta_over_j * shape;
  }
  if (u_over_j != 0.0) e += u_over_j * interaction_sum(p);
  return e;
}

/// Mobility-edge energy E/J = (2 − Δ/J)/α from αE = 2J − Δ.
inline double mobility_edge_energy(double alpha, double delta_over_j) {
  if (alpha == 0.0)
    throw InvalidArgument("mobility edge is undefined at alpha = 0 (use the Delta/J = 2 line)");
  return (2.0 - delta_over_j) / alpha;
}

enum class StateClass { Localized, Extended, Critical };

inline constexpr double kClassifierTolerance = 1e-9;

/// Localized iff α·E/J > 2 − Δ/J + tol, Extended iff α·E/J < 2 − Δ/J − tol.
/// At α = 0 this is the Aubry-André rule Δ/J > 2.
inline StateClass classify_state(double e_over_j, double alpha, double delta_over_j,
                                 double tol = kClassifierTolerance) {
  const double lhs = alpha == 0.0 ? 0.0 : alpha * e_over_j;
  const double edge = 2.0 - delta_over_j;
  if (lhs > edge + tol) return StateClass::Localized;
  if (lhs < edge - tol) return StateClass::Extended;
  return StateClass::Critical;
}

constexpr std::string_view to_string(StateClass c) {
  switch (c) {
    case StateClass::Localized: return "localized";
    case StateClass::Extended: return "extended";
    case StateClass::Critical: return "critical";
  }
  return "critical";
}

}  // namespace gaa
