#include "gaa/config.hpp"

#include "gaa/types.hpp"

#include <cctype>
#include <fstream>
#include <istream>
#include <limits>
#include <numbers>

namespace gaa {

namespace {

std::string trim(const std::string& s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return s.substr(b, e - b);
}

template <typename T>
void overlay(std::optional<T>& dst, const std::optional<T>& src) {
  if (src) dst = src;
}

}  // namespace

double parse_real(const std::string& text) {
  const std::string t = trim(text);
  if (t == "pi") return std::numbers::pi;
  if (t == "-pi") return -std::numbers::pi;
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(t, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != t.size()) throw InvalidArgument("'" + text + "' is not a real number");
  return v;
}

int parse_int(const std::string& text) {
  const std::string t = trim(text);
  std::size_t used = 0;
  long v = 0;
  try {
    v = std::stol(t, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != t.size() || v < std::numeric_limits<int>::min() || v > std::numeric_limits<int>::max())
    throw InvalidArgument("'" + text + "' is not an integer");
  return static_cast<int>(v);
}

void RunConfig::merge_from(const RunConfig& o) {
  overlay(alpha, o.alpha);
  overlay(phi, o.phi);
  overlay(delta_over_j, o.delta_over_j);
  overlay(n_sites, o.n_sites);
  overlay(mu, o.mu);
  overlay(m_sites, o.m_sites);
  overlay(b_min, o.b_min);
  overlay(b_max, o.b_max);
  overlay(grid_start, o.grid_start);
  overlay(grid_stop, o.grid_stop);
  overlay(grid_steps, o.grid_steps);
  overlay(variable, o.variable);
  overlay(u_over_j, o.u_over_j);
  overlay(format, o.format);
  overlay(output, o.output);
}

void set_config_value(RunConfig& cfg, const std::string& key, const std::string& value,
                      std::size_t line) {
  const std::string where = line ? "line " + std::to_string(line) + ": " : "";
  try {
    if (key == "alpha") cfg.alpha = parse_real(value);
    else if (key == "phi") cfg.phi = parse_real(value);
    else if (key == "delta_over_j") cfg.delta_over_j = parse_real(value);
    else if (key == "n_sites") cfg.n_sites = parse_int(value);
    else if (key == "mu") cfg.mu = parse_int(value);
    else if (key == "m_sites") cfg.m_sites = parse_int(value);
    else if (key == "b_min") cfg.b_min = parse_real(value);
    else if (key == "b_max") cfg.b_max = parse_real(value);
    else if (key == "grid_start") cfg.grid_start = parse_real(value);
    else if (key == "grid_stop") cfg.grid_stop = parse_real(value);
    else if (key == "grid_steps") cfg.grid_steps = parse_int(value);
    else if (key == "variable") cfg.variable = trim(value);
    else if (key == "u_over_j") cfg.u_over_j = parse_real(value);
    else if (key == "format") cfg.format = trim(value);
    else if (key == "output") cfg.output = trim(value);
    else throw ParseError(where + "unknown config key '" + key + "'", line, key);
  } catch (const InvalidArgument& e) {
    throw ParseError(where + "bad value for '" + key + "': " + e.what(), line, key);
  }
}

RunConfig parse_config(std::istream& in) {
  RunConfig cfg;
  std::string raw;
  std::size_t lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    if (const auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    const std::string line = trim(raw);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw ParseError("line " + std::to_string(lineno) + ": expected 'key = value'", lineno, "");
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (key.empty())
      throw ParseError("line " + std::to_string(lineno) + ": missing key", lineno, "");
    set_config_value(cfg, key, value, lineno);
  }
  return cfg;
}

RunConfig read_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open config '" + path.string() + "'");
  return parse_config(in);
}

}  // namespace gaa
