#pragma once

#include "gaa/ansatz.hpp"
#include "gaa/assignment.hpp"
#include "gaa/potential.hpp"
#include "gaa/table.hpp"

#include <optional>
#include <string>
#include <vector>

namespace gaa {

enum class GridVariable { DeltaOverJ, Alpha };

GridVariable parse_grid_variable(const std::string& name);
std::string to_string(GridVariable v);

/// Closed, evenly spaced grid with `steps` sample points (one point means
/// just `start`).
struct GridSpec {
  GridVariable variable = GridVariable::DeltaOverJ;
  double start = 0.0;
  double stop = 0.0;
  int steps = 1;

  void validate() const;
  /// Sample i is (start·(steps−1−i) + stop·i)/(steps−1), so grids symmetric
  /// about zero hit 0 exactly.
  std::vector<double> samples() const;
};

/// Default grids: Δ/J ∈ [0, 5] × 101 for energy scans, α ∈ [−0.95, 0.95] × 191
/// for alpha scans, Δ/J ∈ [0, 10] × 201 for participation-ratio scans.
GridSpec default_energy_grid();
GridSpec default_alpha_grid();
GridSpec default_pr_grid();

struct EnergyCurve {
  int mu = 1;
  double b_value = 0.0;
  std::vector<double> values;  // E/J per grid point
  std::vector<StateClass> classes;
};

struct EnergyCurveSet {
  GridVariable variable = GridVariable::DeltaOverJ;
  std::vector<double> grid;
  std::vector<EnergyCurve> curves;  // ascending μ
  /// Empty when no edge exists for the whole sweep (α = 0 energy scans);
  /// otherwise one entry per grid point, nullopt where α = 0.
  std::vector<std::optional<double>> me_line;
};

struct SiteEnergyRow {
  int mu;
  double over_delta;
};

std::vector<SiteEnergyRow> site_energy_table(const PotentialParams& pot, int mu_max);

/// Ansatz energy curves over Δ/J for every assigned site.
EnergyCurveSet energy_scan(const SiteAssignment& assignment, const GridSpec& grid,
                           double u_over_j = 0.0);

/// Ansatz energy curves over α at fixed Δ/J with (μ, B) frozen from
/// `assignment`.
EnergyCurveSet alpha_scan(const PotentialParams& pot_template, const SiteAssignment& assignment,
                          const GridSpec& grid, double delta_over_j, double u_over_j = 0.0);

struct PrRow {
  double delta_over_j;
  double pr;
  double pr_over_n;
};

std::vector<PrRow> pr_scan(int mu, int n_sites, const GridSpec& grid);

/// Table layouts. Energy curve rows are ordered by μ then grid index.
Table to_table(const std::vector<SiteEnergyRow>& rows);
Table to_table(const EnergyCurveSet& set);
Table to_table(const std::vector<PrRow>& rows);
Table to_table(const SiteAssignment& assignment);

}  // namespace gaa
