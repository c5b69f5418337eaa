#include "gaa/assignment.hpp"

#include "gaa/ansatz.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <set>
#include <string>

namespace gaa {

namespace {

constexpr double kDegenerateGap = 1e-12;

void validate_grid(const std::vector<double>& grid) {
  if (grid.empty()) throw InvalidArgument("crossing grid must not be empty");
  for (std::size_t i = 0; i < grid.size(); ++i) {
    if (!(grid[i] > 0.0) || !std::isfinite(grid[i]))
      throw InvalidArgument("crossing grid must be strictly positive and finite, got " +
                            std::to_string(grid[i]) + " at index " + std::to_string(i));
    if (i > 0 && !(grid[i] > grid[i - 1]))
      throw InvalidArgument("crossing grid must be strictly increasing at index " +
                            std::to_string(i));
  }
}

double b_of(const SiteAssignment& a, int mu) {
  for (const auto& s : a.sites)
    if (s.mu == mu) return s.b_value;
  throw InvalidArgument("site " + std::to_string(mu) + " is not part of the assignment");
}

std::vector<double> curve(const SiteAssignment& a, int mu, const std::vector<double>& grid) {
  const double b = b_of(a, mu);
  std::vector<double> out;
  out.reserve(grid.size());
  PotentialParams pot = a.pot;
  for (double d : grid) {
    pot.delta_over_j = d;
    out.push_back(ansatz_energy(pot, mu, b));
  }
  return out;
}

CrossingReport compare_curves(int mu_a, int mu_b, const std::vector<double>& ea,
                              const std::vector<double>& eb, const std::vector<double>& grid) {
  CrossingReport r;
  r.pair = {std::min(mu_a, mu_b), std::max(mu_a, mu_b)};
  r.grid = grid;
  r.min_gap = std::numeric_limits<double>::infinity();
  bool any_pos = false, any_neg = false, degenerate = false;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const double diff = ea[i] - eb[i];
    r.min_gap = std::min(r.min_gap, std::abs(diff));
    if (std::abs(diff) < kDegenerateGap) degenerate = true;
    else if (diff > 0) any_pos = true;
    else any_neg = true;
  }
  r.sign_consistent = !degenerate && !(any_pos && any_neg);
  return r;
}

}  // namespace

void SiteAssignment::validate() const {
  pot.validate();
  if (!(b_range.min < b_range.max)) throw InvalidArgument("B range must satisfy b_min < b_max");
  std::set<int> seen;
  for (const auto& s : sites) {
    if (s.mu < 1 || s.mu > pot.n_sites)
      throw InvalidArgument("assigned site " + std::to_string(s.mu) + " out of range");
    if (!seen.insert(s.mu).second)
      throw InvalidArgument("site " + std::to_string(s.mu) + " assigned twice");
    if (s.b_value < b_range.min || s.b_value > b_range.max)
      throw InvalidArgument("B for site " + std::to_string(s.mu) + " outside the B range");
  }
  for (const auto& s : sites) {
    for (const auto& t : sites) {
      if (site_energy(t.mu, pot).over_delta > site_energy(s.mu, pot).over_delta &&
          !(t.b_value > s.b_value))
        throw InvalidArgument("assignment is not epsilon-monotone for sites " +
                              std::to_string(s.mu) + ", " + std::to_string(t.mu));
    }
  }
}

std::vector<int> rank_sites_by_energy(const PotentialParams& pot, int m) {
  pot.validate();
  if (m < 1 || m > pot.n_sites)
    throw InvalidArgument("m must lie in [1, " + std::to_string(pot.n_sites) + "], got " +
                          std::to_string(m));
  const VectorXd eps = site_energy_shapes(pot, m);
  std::vector<int> order(m);
  std::iota(order.begin(), order.end(), 1);
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return eps[a - 1] < eps[b - 1]; });
  return order;
}

SiteAssignment assign_b(const PotentialParams& pot, int m, BRange range) {
  if (!(range.min < range.max)) throw InvalidArgument("B range must satisfy b_min < b_max");
  if (!std::isfinite(range.min) || !std::isfinite(range.max))
    throw InvalidArgument("B range must be finite");
  const std::vector<int> order = rank_sites_by_energy(pot, m);

  SiteAssignment a;
  a.pot = pot;
  a.b_range = range;
  a.sites.reserve(order.size());
  if (m == 1) {
    a.sites.push_back({order[0], 0.5 * (range.min + range.max)});
    return a;
  }
  const double step = (range.max - range.min) / (m - 1);
  for (int r = 0; r < m; ++r) {
    // The top rank lands on b_max exactly.
    const double b = r == m - 1 ? range.max : range.min + r * step;
    a.sites.push_back({order[r], b});
  }
  return a;
}

CrossingReport check_pair(const SiteAssignment& assignment, int mu_a, int mu_b,
                          const std::vector<double>& grid) {
  validate_grid(grid);
  if (mu_a == mu_b) throw InvalidArgument("crossing check needs two distinct sites");
  return compare_curves(mu_a, mu_b, curve(assignment, mu_a, grid), curve(assignment, mu_b, grid),
                        grid);
}

std::vector<CrossingReport> check_no_crossing(const SiteAssignment& assignment,
                                              const std::vector<double>& grid) {
  validate_grid(grid);
  assignment.validate();

  std::vector<int> mus;
  for (const auto& s : assignment.sites) mus.push_back(s.mu);
  std::sort(mus.begin(), mus.end());

  std::vector<std::vector<double>> curves;
  curves.reserve(mus.size());
  for (int mu : mus) curves.push_back(curve(assignment, mu, grid));

  std::vector<CrossingReport> reports;
  for (std::size_t i = 0; i < mus.size(); ++i)
    for (std::size_t j = i + 1; j < mus.size(); ++j)
      reports.push_back(compare_curves(mus[i], mus[j], curves[i], curves[j], grid));
  return reports;
}

}  // namespace gaa
