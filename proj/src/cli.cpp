#include "gaa/cli.hpp"

#include "gaa/ansatz.hpp"
#include "gaa/assignment.hpp"
#include "gaa/config.hpp"
#include "gaa/oracle.hpp"
#include "gaa/population.hpp"
#include "gaa/sweep.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <array>
#include <filesystem>
#include <fstream>
#include <map>
#include <numbers>
#include <ostream>
#include <set>

namespace gaa::cli {

namespace {

namespace fs = std::filesystem;

constexpr std::array<const char*, 8> kPalette = {"#1f77b4", "#ff7f0e", "#d62728", "#9467bd",
                                                 "#8c564b", "#e377c2", "#7f7f7f", "#17becf"};
constexpr const char* kEdgeStroke = "#2ca02c";

/// Usage-level failure: reported with exit code 2.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// ---------------------------------------------------------------------------
// Plots

SvgPlot plot_site_energies(const std::vector<SiteEnergyRow>& rows, std::string title) {
  SvgSeries s;
  s.points = true;
  for (const auto& r : rows) {
    s.x.push_back(r.mu);
    s.y.push_back(r.over_delta);
  }
  return {std::move(title), "mu", "eps_mu / Delta", {s}};
}

SvgPlot plot_curves(const EnergyCurveSet& set, std::string title) {
  SvgPlot p{std::move(title), set.variable == GridVariable::Alpha ? "alpha" : "Delta / J",
            "E / J", {}};
  std::size_t k = 0;
  for (const auto& c : set.curves) {
    SvgSeries s;
    s.x = set.grid;
    s.y = c.values;
    s.stroke = kPalette[k++ % kPalette.size()];
    p.series.push_back(std::move(s));
  }
  if (!set.me_line.empty()) {
    SvgSeries edge;
    edge.stroke = kEdgeStroke;
    edge.dashed = true;
    // Clip the edge to the curves' range so the 1/alpha pole does not flatten the plot.
    double lo = 0, hi = 0;
    for (const auto& c : set.curves)
      for (double v : c.values) lo = std::min(lo, v), hi = std::max(hi, v);
    for (std::size_t i = 0; i < set.grid.size(); ++i) {
      edge.x.push_back(set.grid[i]);
      const auto& v = set.me_line[i];
      edge.y.push_back(v && *v >= lo && *v <= hi ? *v : std::numeric_limits<double>::quiet_NaN());
    }
    p.series.push_back(std::move(edge));
  }
  return p;
}

SvgPlot plot_pr(const std::vector<PrRow>& rows, std::string title) {
  SvgSeries s;
  for (const auto& r : rows) {
    s.x.push_back(r.delta_over_j);
    s.y.push_back(r.pr_over_n);
  }
  return {std::move(title), "Delta / J", "PR / N", {s}};
}

SvgPlot plot_xy_points(const Table& t, std::size_t xc, std::size_t yc, std::string title) {
  SvgSeries s;
  s.points = true;
  for (const auto& row : t.rows) {
    auto as_double = [](const Cell& c) {
      if (auto d = std::get_if<double>(&c)) return *d;
      if (auto i = std::get_if<std::int64_t>(&c)) return static_cast<double>(*i);
      return std::numeric_limits<double>::quiet_NaN();
    };
    s.x.push_back(as_double(row[xc]));
    s.y.push_back(as_double(row[yc]));
  }
  return {std::move(title), t.columns[xc], t.columns[yc], {s}};
}

// ---------------------------------------------------------------------------
// Figure bundles

PotentialParams make_pot(double alpha, double phi, int n_sites) {
  PotentialParams p;
  p.alpha = alpha;
  p.phi = phi;
  p.n_sites = n_sites;
  return p;
}

}  // namespace

std::vector<Dataset> fig1_datasets() {
  const PotentialParams pot = make_pot(-0.5, std::numbers::pi, 201);
  std::vector<Dataset> out;
  const auto all = site_energy_table(pot, 201);
  out.push_back({"fig1a", to_table(all), plot_site_energies(all, "eps/Delta, alpha=-0.5, N=201")});
  const auto first = site_energy_table(pot, 15);
  out.push_back({"fig1b", to_table(first), plot_site_energies(first, "eps/Delta, first 15 sites")});
  const auto curves = energy_scan(assign_b(pot, 15, {-2.0, 2.0}), default_energy_grid());
  out.push_back({"fig1c", to_table(curves), plot_curves(curves, "E/J vs Delta/J, alpha=-0.5")});
  const auto pr = pr_scan(100, 201, default_pr_grid());
  out.push_back({"fig1d", to_table(pr), plot_pr(pr, "PR/N, mu=100, N=201")});
  return out;
}

std::vector<Dataset> fig2_datasets() {
  const PotentialParams pot = make_pot(0.0, 0.0, 51);
  std::vector<Dataset> out;
  const auto all = site_energy_table(pot, 51);
  out.push_back({"fig2a", to_table(all), plot_site_energies(all, "eps/Delta, alpha=0, N=51")});
  const auto first = site_energy_table(pot, 15);
  out.push_back({"fig2b", to_table(first), plot_site_energies(first, "eps/Delta, first 15 sites")});
  const SiteAssignment assignment = assign_b(pot, 15, {-2.0, 2.0});
  const auto curves = energy_scan(assignment, default_energy_grid());
  out.push_back({"fig2c", to_table(curves), plot_curves(curves, "E/J vs Delta/J, alpha=0")});
  const auto scan = alpha_scan(pot, assignment, default_alpha_grid(), 1.8);
  out.push_back({"fig2d", to_table(scan), plot_curves(scan, "E/J vs alpha, Delta/J=1.8")});
  return out;
}

namespace {

// ---------------------------------------------------------------------------
// Command table

struct CommandSpec {
  const char* name;
  const char* help;
  std::vector<std::string> keys;      // accepted config keys besides format/output
  std::vector<std::string> required;  // must be set by flag or config
  bool grid = false;
  bool svg = true;
};

const std::vector<CommandSpec>& commands() {
  static const std::vector<CommandSpec> specs = {
      {"site-energies", "Table of eps_mu/Delta for mu = 1..m-sites (default n-sites)",
       {"alpha", "phi", "n_sites", "m_sites"}, {"alpha", "phi", "n_sites"}},
      {"populations", "Lorentzian site populations P_n (delta-over-j may be 'inf')",
       {"mu", "delta_over_j", "n_sites"}, {"mu", "delta_over_j", "n_sites"}},
      {"pr-scan", "Participation ratio over a Delta/J grid",
       {"mu", "n_sites", "variable"}, {"mu", "n_sites"}, true},
      {"assign-b", "No-crossing assignment of B(mu) to the first m sites",
       {"alpha", "phi", "n_sites", "m_sites", "b_min", "b_max"},
       {"alpha", "phi", "n_sites", "m_sites"}},
      {"energy-scan", "Ansatz energy curves over a Delta/J grid",
       {"alpha", "phi", "n_sites", "m_sites", "b_min", "b_max", "u_over_j", "variable"},
       {"alpha", "phi", "n_sites", "m_sites"}, true},
      {"alpha-scan",
       "Ansatz energy curves over an alpha grid at fixed Delta/J; B(mu) comes from the "
       "assignment at --alpha (default 0)",
       {"alpha", "phi", "n_sites", "m_sites", "b_min", "b_max", "u_over_j", "delta_over_j",
        "variable"},
       {"phi", "n_sites", "m_sites", "delta_over_j"}, true},
      {"oracle-spectrum", "Exact diagonalization of the open GAA chain",
       {"alpha", "phi", "delta_over_j", "n_sites"}, {"alpha", "phi", "delta_over_j", "n_sites"}},
      {"oracle-compare", "Ansatz classification vs exact eigenstate IPR statistics",
       {"alpha", "phi", "delta_over_j", "n_sites", "m_sites", "b_min", "b_max"},
       {"alpha", "phi", "delta_over_j", "n_sites", "m_sites"}, false, false},
      {"fig1", "Write the four Fig. 1 datasets into --output DIR", {}, {"output"}},
      {"fig2", "Write the four Fig. 2 datasets into --output DIR", {}, {"output"}},
  };
  return specs;
}

std::string flag_of(const std::string& key) {
  std::string f = "--" + key;
  std::replace(f.begin(), f.end(), '_', '-');
  return f;
}

std::vector<std::string> keys_set(const RunConfig& c) {
  std::vector<std::string> k;
  auto add = [&](const auto& opt, const char* name) {
    if (opt) k.emplace_back(name);
  };
  add(c.alpha, "alpha");
  add(c.phi, "phi");
  add(c.delta_over_j, "delta_over_j");
  add(c.n_sites, "n_sites");
  add(c.mu, "mu");
  add(c.m_sites, "m_sites");
  add(c.b_min, "b_min");
  add(c.b_max, "b_max");
  add(c.grid_start, "grid_start");
  add(c.grid_stop, "grid_stop");
  add(c.grid_steps, "grid_steps");
  add(c.variable, "variable");
  add(c.u_over_j, "u_over_j");
  add(c.format, "format");
  add(c.output, "output");
  return k;
}

bool is_set(const RunConfig& c, const std::string& key) {
  const auto k = keys_set(c);
  return std::find(k.begin(), k.end(), key) != k.end();
}

struct Invocation {
  const CommandSpec* spec = nullptr;
  RunConfig cfg;
  bool svg = false;
};

// ---------------------------------------------------------------------------
// Validated inputs

PotentialParams potential_from(const RunConfig& c) {
  PotentialParams p;
  p.alpha = c.alpha.value_or(0.0);
  p.phi = c.phi.value_or(0.0);
  p.delta_over_j = c.delta_over_j.value_or(0.0);
  p.n_sites = c.n_sites.value_or(1);
  p.validate();
  return p;
}

GridSpec grid_from(const RunConfig& c, GridVariable expected, GridSpec fallback) {
  if (c.variable && parse_grid_variable(*c.variable) != expected)
    throw InvalidArgument("variable must be " + to_string(expected) + " for this command");
  GridSpec g = fallback;
  g.start = c.grid_start.value_or(g.start);
  g.stop = c.grid_stop.value_or(g.stop);
  g.steps = c.grid_steps.value_or(g.steps);
  g.validate();
  return g;
}

BRange range_from(const RunConfig& c) {
  BRange r{c.b_min.value_or(-2.0), c.b_max.value_or(2.0)};
  if (!(r.min < r.max)) throw InvalidArgument("b_min must be < b_max");
  return r;
}

int m_sites_from(const RunConfig& c, const PotentialParams& pot) {
  const int m = c.m_sites.value_or(pot.n_sites);
  if (m < 1 || m > pot.n_sites)
    throw InvalidArgument("m_sites must lie in [1, n_sites]");
  return m;
}

Table oracle_compare_table(const PotentialParams& pot, const SiteAssignment& assignment) {
  const Spectrum spectrum = eigensystem(build_hamiltonian(pot));
  const MeConsistency oracle = me_consistency(spectrum, pot);

  MeConsistency ansatz;
  std::vector<double> energies, iprs;
  for (const auto& s : assignment.sites) {
    energies.push_back(ansatz_energy(pot, s.mu, s.b_value));
    iprs.push_back(inverse_participation_ratio(lorentzian_population(s.mu, pot.delta_over_j,
                                                                     pot.n_sites)));
  }
  ansatz.median_ipr = median(iprs);
  std::vector<double> loc, ext;
  int agree = 0;
  for (std::size_t i = 0; i < energies.size(); ++i) {
    switch (classify_state(energies[i], pot.alpha, pot.delta_over_j)) {
      case StateClass::Localized:
        ++ansatz.localized;
        loc.push_back(iprs[i]);
        agree += iprs[i] > ansatz.median_ipr;
        break;
      case StateClass::Extended:
        ++ansatz.extended;
        ext.push_back(iprs[i]);
        agree += iprs[i] < ansatz.median_ipr;
        break;
      case StateClass::Critical: ++ansatz.critical; break;
    }
  }
  ansatz.median_ipr_localized = median(loc);
  ansatz.median_ipr_extended = median(ext);
  const int decided = ansatz.localized + ansatz.extended;
  ansatz.agreement_fraction = decided ? static_cast<double>(agree) / decided : 0.0;

  Table t{{"source", "localized", "extended", "critical", "median_ipr", "median_ipr_localized",
           "median_ipr_extended", "agreement_fraction"},
          {}};
  auto row = [](const char* name, const MeConsistency& m) {
    auto opt = [](double v) { return std::isnan(v) ? Cell{} : Cell{v}; };
    return std::vector<Cell>{std::string(name),         std::int64_t{m.localized},
                             std::int64_t{m.extended},  std::int64_t{m.critical},
                             m.median_ipr,              opt(m.median_ipr_localized),
                             opt(m.median_ipr_extended), m.agreement_fraction};
  };
  t.rows.push_back(row("ansatz", ansatz));
  t.rows.push_back(row("oracle", oracle));
  return t;
}

/// Builds and validates everything the command needs, then computes.
std::vector<Dataset> compute(const Invocation& inv) {
  const RunConfig& c = inv.cfg;
  const std::string name = inv.spec->name;

  if (name == "fig1") return fig1_datasets();
  if (name == "fig2") return fig2_datasets();

  if (name == "populations") {
    const int n = c.n_sites.value();
    const Population p = lorentzian_population(c.mu.value(), c.delta_over_j.value(), n);
    Table t{{"site", "weight"}, {}};
    for (int k = 1; k <= n; ++k) t.rows.push_back({std::int64_t{k}, p(k)});
    SvgPlot plot = plot_xy_points(t, 0, 1, "P_n");
    return {{"populations", std::move(t), std::move(plot)}};
  }
  if (name == "pr-scan") {
    const int n = c.n_sites.value();
    const int mu = c.mu.value();
    if (n < 1 || mu < 1 || mu > n) throw InvalidArgument("mu must lie in [1, n_sites]");
    const GridSpec g = grid_from(c, GridVariable::DeltaOverJ, default_pr_grid());
    const auto rows = pr_scan(mu, n, g);
    return {{"pr-scan", to_table(rows), plot_pr(rows, "PR/N")}};
  }

  PotentialParams pot = potential_from(c);
  if (name == "site-energies") {
    const auto rows = site_energy_table(pot, m_sites_from(c, pot));
    return {{"site-energies", to_table(rows), plot_site_energies(rows, "eps/Delta")}};
  }
  if (name == "assign-b") {
    const auto a = assign_b(pot, m_sites_from(c, pot), range_from(c));
    Table t = to_table(a);
    SvgPlot plot = plot_xy_points(t, 2, 3, "B(mu) vs eps/Delta");
    return {{"assign-b", std::move(t), std::move(plot)}};
  }
  if (name == "energy-scan") {
    const GridSpec g = grid_from(c, GridVariable::DeltaOverJ, default_energy_grid());
    const BRange r = range_from(c);
    const auto set = energy_scan(assign_b(pot, m_sites_from(c, pot), r), g, c.u_over_j.value_or(0));
    return {{"energy-scan", to_table(set), plot_curves(set, "E/J vs Delta/J")}};
  }
  if (name == "alpha-scan") {
    const GridSpec g = grid_from(c, GridVariable::Alpha, default_alpha_grid());
    const BRange r = range_from(c);
    const double d = pot.delta_over_j;
    if (!std::isfinite(d)) throw InvalidArgument("delta_over_j must be finite for alpha-scan");
    const auto set = alpha_scan(pot, assign_b(pot, m_sites_from(c, pot), r), g, d,
                                c.u_over_j.value_or(0));
    return {{"alpha-scan", to_table(set), plot_curves(set, "E/J vs alpha")}};
  }
  if (name == "oracle-spectrum") {
    if (!std::isfinite(pot.delta_over_j)) throw InvalidArgument("delta_over_j must be finite");
    const Spectrum s = eigensystem(build_hamiltonian(pot));
    Table t{{"index", "energy_over_j", "ipr", "class"}, {}};
    for (Eigen::Index j = 0; j < s.eigenvalues.size(); ++j)
      t.rows.push_back({std::int64_t{j + 1}, s.eigenvalues[j], s.iprs[j],
                        std::string(to_string(s.classes[j]))});
    SvgPlot plot = plot_xy_points(t, 1, 2, "IPR vs E/J");
    return {{"oracle-spectrum", std::move(t), std::move(plot)}};
  }
  if (name == "oracle-compare") {
    if (pot.alpha == 0.0) throw InvalidArgument("alpha must be nonzero for oracle-compare");
    if (!std::isfinite(pot.delta_over_j)) throw InvalidArgument("delta_over_j must be finite");
    const auto a = assign_b(pot, m_sites_from(c, pot), range_from(c));
    return {{"oracle-compare", oracle_compare_table(pot, a), {}}};
  }
  throw UsageError("unknown command " + name);
}

void emit(const std::vector<Dataset>& data, const Invocation& inv, std::ostream& out) {
  const Format format = parse_format(inv.cfg.format.value_or("csv"));
  const std::string ext = format == Format::Csv ? ".csv" : ".json";
  const bool bundle = inv.spec->name == std::string("fig1") || inv.spec->name == std::string("fig2");

  if (!inv.cfg.output) {
    for (const auto& d : data) write_table(d.table, out, format);
    return;
  }
  for (const auto& d : data) {
    fs::path path = bundle ? fs::path(*inv.cfg.output) / (d.name + ext) : fs::path(*inv.cfg.output);
    write_dataset(d.table, path, format);
    if (inv.svg) {
      path.replace_extension(".svg");
      std::ofstream svg(path, std::ios::binary | std::ios::trunc);
      if (!svg) throw std::runtime_error("cannot open '" + path.string() + "' for writing");
      svg << render_svg(d.plot);
    }
  }
}

/// Merges config file and flags, then checks the option set for `spec`.
Invocation prepare(const CommandSpec& spec, const std::map<std::string, std::string>& flags,
                   const std::string& config_path, const std::string& grid, bool svg) {
  Invocation inv{&spec, {}, svg};
  if (!config_path.empty()) {
    try {
      inv.cfg = read_config(config_path);
    } catch (const ParseError& e) {
      throw UsageError(std::string("config: ") + e.what());
    } catch (const std::runtime_error& e) {
      throw UsageError(e.what());
    }
  }

  std::set<std::string> allowed(spec.keys.begin(), spec.keys.end());
  allowed.insert({"format", "output"});
  if (spec.grid) allowed.insert({"grid_start", "grid_stop", "grid_steps"});
  for (const auto& key : keys_set(inv.cfg))
    if (!allowed.count(key))
      throw UsageError("config key '" + key + "' is not used by " + spec.name);

  RunConfig from_flags;
  for (const auto& [key, value] : flags) {
    try {
      set_config_value(from_flags, key, value);
    } catch (const ParseError& e) {
      throw UsageError("invalid value for " + flag_of(key) + ": '" + value + "'");
    }
  }
  if (!grid.empty()) {
    const auto a = grid.find(':');
    const auto b = a == std::string::npos ? a : grid.find(':', a + 1);
    if (b == std::string::npos) throw UsageError("--grid expects START:STOP:STEPS");
    try {
      from_flags.grid_start = parse_real(grid.substr(0, a));
      from_flags.grid_stop = parse_real(grid.substr(a + 1, b - a - 1));
      from_flags.grid_steps = parse_int(grid.substr(b + 1));
    } catch (const InvalidArgument&) {
      throw UsageError("invalid value for --grid: '" + grid + "'");
    }
  }
  inv.cfg.merge_from(from_flags);

  for (const auto& key : spec.required)
    if (!is_set(inv.cfg, key))
      throw UsageError("missing required option " + flag_of(key) + " (or '" + key +
                       "' in --config)");
  if (svg && !inv.cfg.output) throw UsageError("--svg needs --output");
  try {
    parse_format(inv.cfg.format.value_or("csv"));
  } catch (const InvalidArgument& e) {
    throw UsageError(std::string("invalid value for --format: ") + e.what());
  }
  return inv;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Parametrized generalized Aubry-Andre model laboratory", "gaa-lab"};
  app.require_subcommand(1);

  struct Slot {
    std::map<std::string, std::string> values;
    std::string config, grid;
    bool svg = false;
  };
  std::map<std::string, Slot> slots;
  std::map<const CLI::App*, const CommandSpec*> spec_of;
  for (const auto& spec : commands()) {
    CLI::App* sub = app.add_subcommand(spec.name, spec.help);
    Slot& slot = slots[spec.name];
    for (const auto& key : spec.keys) sub->add_option(flag_of(key), slot.values[key], key);
    if (spec.grid) sub->add_option("--grid", slot.grid, "grid as START:STOP:STEPS");
    sub->add_option("--format", slot.values["format"], "csv (default) or json");
    sub->add_option("--output", slot.values["output"],
                    spec.name == std::string("fig1") || spec.name == std::string("fig2")
                        ? "output directory"
                        : "output file (default: stdout)");
    sub->add_option("--config", slot.config, "key = value configuration file");
    if (spec.svg) sub->add_flag("--svg", slot.svg, "also write an SVG plot next to each output");
    spec_of[sub] = &spec;
  }

  if (args.empty()) {
    err << app.help();
    return kUsageError;
  }
  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(std::move(reversed));
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    for (const auto* sub : app.get_subcommands()) {
      err << sub->help();
      return kUsageError;
    }
    err << app.help();
    return kUsageError;
  }

  CLI::App* sub = app.get_subcommands().front();
  const CommandSpec& spec = *spec_of.at(sub);
  Slot& slot = slots.at(spec.name);
  std::map<std::string, std::string> given;
  for (const auto& [key, value] : slot.values)
    if (sub->count(flag_of(key)) > 0) given[key] = value;

  Invocation inv;
  try {
    inv = prepare(spec, given, slot.config, slot.grid, slot.svg);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  }

  std::vector<Dataset> data;
  try {
    data = compute(inv);
  } catch (const InvalidArgument& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kRuntimeFailure;
  }
  try {
    emit(data, inv, out);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kRuntimeFailure;
  }
  return kSuccess;
}

}  // namespace gaa::cli
