#pragma once

#include "gaa/ansatz.hpp"
#include "gaa/potential.hpp"
#include "gaa/tridiagonal.hpp"

#include <vector>

namespace gaa {

/// Open-boundary GAA chain in units of J: diagonal ε_n/J, hopping −1.
struct TridiagonalHamiltonian {
  VectorXd diag;
  VectorXd offdiag;
  PotentialParams pot;

  int size() const { return static_cast<int>(diag.size()); }
  /// Dense copy, mainly for residual checks.
  MatrixX<double> dense() const;
  /// Infinity norm (max absolute row sum).
  double norm() const;
};

struct Spectrum {
  VectorXd eigenvalues;       // E/J, ascending
  MatrixX<double> eigenvectors;  // unit-norm columns
  VectorXd iprs;              // Σ_n |ψ_n|⁴ per state
  std::vector<StateClass> classes;
};

TridiagonalHamiltonian build_hamiltonian(const PotentialParams& pot);

/// Full diagonalization. Classes follow classify_state at the Hamiltonian's
/// (α, Δ/J).
Spectrum eigensystem(const TridiagonalHamiltonian& h);

struct MeConsistency {
  int localized = 0;  // states on the localized side of the edge
  int extended = 0;
  int critical = 0;
  double median_ipr_localized = 0.0;  // NaN when the side is empty
  double median_ipr_extended = 0.0;
  double median_ipr = 0.0;            // whole spectrum
  /// Fraction of non-critical states whose IPR sits on the side of the
  /// spectrum median that their ME side predicts.
  double agreement_fraction = 0.0;
};

/// Correlates the ME classification of each eigenvalue with its IPR.
MeConsistency me_consistency(const Spectrum& s, const PotentialParams& pot);

/// Median of a non-empty sample (mean of the two middle values for even size).
double median(std::vector<double> values);

}  // namespace gaa
