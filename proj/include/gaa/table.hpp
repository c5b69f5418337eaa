#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <variant>
#include <vector>

namespace gaa {

/// Empty cells carry std::monostate and serialize as an empty CSV field or
/// JSON null.
using Cell = std::variant<std::monostate, std::int64_t, double, std::string>;

/// Column-named rows; the common currency of every emitted dataset.
struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
};

enum class Format { Csv, Json };

Format parse_format(const std::string& name);

/// 17 significant digits ("%.17g"), enough to round-trip any double.
std::string format_double(double v);

void write_csv(const Table& t, std::ostream& out);
void write_json(const Table& t, std::ostream& out);
void write_table(const Table& t, std::ostream& out, Format format);

/// Writes `t` to `path`, creating parent directories. Throws std::runtime_error
/// on I/O failure.
void write_dataset(const Table& t, const std::filesystem::path& path, Format format);

/// Parsed CSV with raw string fields.
struct CsvDocument {
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;

  std::size_t column(const std::string& name) const;
  /// Field as double; throws ParseError with the data line number on failure.
  double number(std::size_t row, const std::string& name) const;
};

/// Reads header plus rows; a row with the wrong field count raises ParseError.
CsvDocument read_csv(std::istream& in);
CsvDocument read_csv(const std::filesystem::path& path);

}  // namespace gaa
