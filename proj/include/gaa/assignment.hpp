#pragma once

#include "gaa/potential.hpp"

#include <utility>
#include <vector>

namespace gaa {

struct BRange {
  double min = -2.0;
  double max = 2.0;
};

struct SiteB {
  int mu = 1;
  double b_value = 0.0;
};

/// Per-site constants B(μ). Entries are ordered by ascending ε_μ, so B is
/// non-decreasing along `sites`.
struct SiteAssignment {
  PotentialParams pot;
  std::vector<SiteB> sites;
  BRange b_range;

  /// Checks distinct in-range sites, B inside the range and ε-monotonicity.
  void validate() const;
};

/// Sites 1..m sorted by ascending ε_μ/Δ, ties broken by ascending μ.
std::vector<int> rank_sites_by_energy(const PotentialParams& pot, int m);

/// Linearly spaced B over `range` in ascending-ε order; a single site gets the
/// midpoint.
SiteAssignment assign_b(const PotentialParams& pot, int m, BRange range = {});

struct CrossingReport {
  std::pair<int, int> pair;  // (smaller μ, larger μ)
  std::vector<double> grid;
  double min_gap = 0.0;
  bool sign_consistent = false;
};

/// Samples every curve pair on the strictly positive, increasing `grid` and
/// reports whether their energy difference keeps one sign. A gap below 1e-12
/// counts as a crossing.
std::vector<CrossingReport> check_no_crossing(const SiteAssignment& assignment,
                                              const std::vector<double>& grid);

/// Report for a single pair; symmetric in (mu_a, mu_b).
CrossingReport check_pair(const SiteAssignment& assignment, int mu_a, int mu_b,
                          const std::vector<double>& grid);

}  // namespace gaa
