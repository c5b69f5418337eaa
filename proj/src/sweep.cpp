#include "gaa/sweep.hpp"

#include "gaa/population.hpp"

#include <algorithm>
#include <cmath>

namespace gaa {

GridVariable parse_grid_variable(const std::string& name) {
  if (name == "delta_over_j") return GridVariable::DeltaOverJ;
  if (name == "alpha") return GridVariable::Alpha;
  throw InvalidArgument("grid variable must be delta_over_j or alpha, got '" + name + "'");
}

std::string to_string(GridVariable v) {
  return v == GridVariable::Alpha ? "alpha" : "delta_over_j";
}

void GridSpec::validate() const {
  if (steps < 1) throw InvalidArgument("grid steps must be >= 1, got " + std::to_string(steps));
  if (!std::isfinite(start) || !std::isfinite(stop))
    throw InvalidArgument("grid bounds must be finite");
  if (steps == 1 ? start > stop : !(start < stop))
    throw InvalidArgument("grid needs start < stop (start <= stop for a single point)");
  if (variable == GridVariable::Alpha) {
    if (!(std::abs(start) < 1.0) || !(std::abs(stop) < 1.0))
      throw InvalidArgument("alpha grid must lie inside (-1, 1)");
  } else if (start < 0.0) {
    throw InvalidArgument("delta_over_j grid must start at >= 0");
  }
}

std::vector<double> GridSpec::samples() const {
  validate();
  if (steps == 1) return {start};
  std::vector<double> out(static_cast<std::size_t>(steps));
  const double denom = steps - 1;
  for (int i = 0; i < steps; ++i) out[i] = (start * (steps - 1 - i) + stop * i) / denom;
  out.back() = stop;
  return out;
}

GridSpec default_energy_grid() { return {GridVariable::DeltaOverJ, 0.0, 5.0, 101}; }
GridSpec default_alpha_grid() { return {GridVariable::Alpha, -0.95, 0.95, 191}; }
GridSpec default_pr_grid() { return {GridVariable::DeltaOverJ, 0.0, 10.0, 201}; }

std::vector<SiteEnergyRow> site_energy_table(const PotentialParams& pot, int mu_max) {
  pot.validate();
  if (mu_max < 1 || mu_max > pot.n_sites)
    throw InvalidArgument("mu_max must lie in [1, " + std::to_string(pot.n_sites) + "], got " +
                          std::to_string(mu_max));
  std::vector<SiteEnergyRow> rows;
  rows.reserve(static_cast<std::size_t>(mu_max));
  for (int mu = 1; mu <= mu_max; ++mu) rows.push_back({mu, site_energy(mu, pot).over_delta});
  return rows;
}

namespace {

std::vector<SiteB> sites_by_mu(const SiteAssignment& a) {
  std::vector<SiteB> sites = a.sites;
  std::sort(sites.begin(), sites.end(),
            [](const SiteB& x, const SiteB& y) { return x.mu < y.mu; });
  return sites;
}

}  // namespace

EnergyCurveSet energy_scan(const SiteAssignment& assignment, const GridSpec& grid,
                           double u_over_j) {
  if (grid.variable != GridVariable::DeltaOverJ)
    throw InvalidArgument("energy_scan needs a delta_over_j grid");
  assignment.validate();
  EnergyCurveSet set;
  set.variable = GridVariable::DeltaOverJ;
  set.grid = grid.samples();

  PotentialParams pot = assignment.pot;
  for (const auto& site : sites_by_mu(assignment)) {
    EnergyCurve c{site.mu, site.b_value, {}, {}};
    for (double d : set.grid) {
      pot.delta_over_j = d;
      const double e = ansatz_energy(pot, site.mu, site.b_value, u_over_j);
      c.values.push_back(e);
      c.classes.push_back(classify_state(e, pot.alpha, d));
    }
    set.curves.push_back(std::move(c));
  }
  if (pot.alpha != 0.0)
    for (double d : set.grid) set.me_line.emplace_back(mobility_edge_energy(pot.alpha, d));
  return set;
}

EnergyCurveSet alpha_scan(const PotentialParams& pot_template, const SiteAssignment& assignment,
                          const GridSpec& grid, double delta_over_j, double u_over_j) {
  if (grid.variable != GridVariable::Alpha) throw InvalidArgument("alpha_scan needs an alpha grid");
  if (!(delta_over_j >= 0.0) || !std::isfinite(delta_over_j))
    throw InvalidArgument("alpha_scan needs a finite delta_over_j >= 0");
  assignment.validate();
  EnergyCurveSet set;
  set.variable = GridVariable::Alpha;
  set.grid = grid.samples();

  PotentialParams pot = pot_template;
  pot.delta_over_j = delta_over_j;
  pot.validate();
  for (const auto& site : sites_by_mu(assignment)) {
    if (site.mu > pot.n_sites)
      throw InvalidArgument("assigned site " + std::to_string(site.mu) + " exceeds n_sites");
    EnergyCurve c{site.mu, site.b_value, {}, {}};
    for (double a : set.grid) {
      pot.alpha = a;
      const double e = ansatz_energy(pot, site.mu, site.b_value, u_over_j);
      c.values.push_back(e);
      c.classes.push_back(classify_state(e, a, delta_over_j));
    }
    set.curves.push_back(std::move(c));
  }
  for (double a : set.grid) {
    if (a == 0.0) set.me_line.emplace_back(std::nullopt);
    else set.me_line.emplace_back(mobility_edge_energy(a, delta_over_j));
  }
  return set;
}

std::vector<PrRow> pr_scan(int mu, int n_sites, const GridSpec& grid) {
  if (grid.variable != GridVariable::DeltaOverJ)
    throw InvalidArgument("pr_scan needs a delta_over_j grid");
  std::vector<PrRow> rows;
  for (double d : grid.samples()) {
    const double pr = participation_ratio(lorentzian_population(mu, d, n_sites));
    rows.push_back({d, pr, pr / n_sites});
  }
  return rows;
}

Table to_table(const std::vector<SiteEnergyRow>& rows) {
  Table t{{"mu", "eps_over_delta"}, {}};
  for (const auto& r : rows) t.rows.push_back({std::int64_t{r.mu}, r.over_delta});
  return t;
}

Table to_table(const EnergyCurveSet& set) {
  Table t{{to_string(set.variable), "mu", "b_value", "energy_over_j", "class", "me_energy_over_j"},
          {}};
  for (const auto& c : set.curves) {
    for (std::size_t i = 0; i < set.grid.size(); ++i) {
      Cell me;
      if (!set.me_line.empty() && set.me_line[i]) me = *set.me_line[i];
      t.rows.push_back({set.grid[i], std::int64_t{c.mu}, c.b_value, c.values[i],
                        std::string(to_string(c.classes[i])), me});
    }
  }
  return t;
}

Table to_table(const std::vector<PrRow>& rows) {
  Table t{{"delta_over_j", "pr", "pr_over_n"}, {}};
  for (const auto& r : rows) t.rows.push_back({r.delta_over_j, r.pr, r.pr_over_n});
  return t;
}

Table to_table(const SiteAssignment& assignment) {
  Table t{{"rank", "mu", "eps_over_delta", "b_value"}, {}};
  std::int64_t rank = 0;
  for (const auto& s : assignment.sites)
    t.rows.push_back({rank++, std::int64_t{s.mu}, site_energy(s.mu, assignment.pot).over_delta,
                      s.b_value});
  return t;
}

}  // namespace gaa
