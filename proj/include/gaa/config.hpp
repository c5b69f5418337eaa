#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>

namespace gaa {

/// Every run setting; unset fields fall back to command defaults. Filled from
/// a `key = value` file and then overridden by command-line flags.
struct RunConfig {
  std::optional<double> alpha;
  std::optional<double> phi;
  std::optional<double> delta_over_j;
  std::optional<int> n_sites;
  std::optional<int> mu;
  std::optional<int> m_sites;
  std::optional<double> b_min;
  std::optional<double> b_max;
  std::optional<double> grid_start;
  std::optional<double> grid_stop;
  std::optional<int> grid_steps;
  std::optional<std::string> variable;
  std::optional<double> u_over_j;
  std::optional<std::string> format;
  std::optional<std::string> output;

  /// Fields set in `other` replace those here.
  void merge_from(const RunConfig& other);
};

/// Parses one of the config keys into `cfg`. Throws ParseError naming the key
/// for unknown keys or malformed values; `line` is echoed into diagnostics.
void set_config_value(RunConfig& cfg, const std::string& key, const std::string& value,
                      std::size_t line = 0);

/// Line-oriented `key = value`; blank lines and `#` comments are ignored.
RunConfig parse_config(std::istream& in);
RunConfig read_config(const std::filesystem::path& path);

/// Real number; also accepts `pi` and `-pi`.
double parse_real(const std::string& text);
int parse_int(const std::string& text);

}  // namespace gaa
