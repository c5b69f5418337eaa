#include "gaa/table.hpp"

#include "gaa/types.hpp"

#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace gaa {

namespace {

std::string cell_text(const Cell& c) {
  struct Visitor {
    std::string operator()(std::monostate) const { return {}; }
    std::string operator()(std::int64_t v) const { return std::to_string(v); }
    std::string operator()(double v) const { return format_double(v); }
    std::string operator()(const std::string& v) const { return v; }
  };
  return std::visit(Visitor{}, c);
}

nlohmann::ordered_json cell_json(const Cell& c) {
  struct Visitor {
    nlohmann::ordered_json operator()(std::monostate) const { return nullptr; }
    nlohmann::ordered_json operator()(std::int64_t v) const { return v; }
    nlohmann::ordered_json operator()(double v) const {
      if (!std::isfinite(v)) return format_double(v);
      return v;
    }
    nlohmann::ordered_json operator()(const std::string& v) const { return v; }
  };
  return std::visit(Visitor{}, c);
}

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> fields;
  std::string cur;
  for (char ch : line) {
    if (ch == ',') {
      fields.push_back(cur);
      cur.clear();
    } else {
      cur += ch;
    }
  }
  fields.push_back(cur);
  return fields;
}

}  // namespace

Format parse_format(const std::string& name) {
  if (name == "csv") return Format::Csv;
  if (name == "json") return Format::Json;
  throw InvalidArgument("format must be csv or json, got '" + name + "'");
}

std::string format_double(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  if (v == 0.0) return "0";  // no "-0"
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

void write_csv(const Table& t, std::ostream& out) {
  for (std::size_t i = 0; i < t.columns.size(); ++i) out << (i ? "," : "") << t.columns[i];
  out << '\n';
  for (const auto& row : t.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << cell_text(row[i]);
    out << '\n';
  }
}

void write_json(const Table& t, std::ostream& out) {
  auto arr = nlohmann::ordered_json::array();
  for (const auto& row : t.rows) {
    nlohmann::ordered_json obj = nlohmann::ordered_json::object();
    for (std::size_t i = 0; i < t.columns.size() && i < row.size(); ++i)
      obj[t.columns[i]] = cell_json(row[i]);
    arr.push_back(std::move(obj));
  }
  out << arr.dump(2) << '\n';
}

void write_table(const Table& t, std::ostream& out, Format format) {
  if (format == Format::Csv) write_csv(t, out);
  else write_json(t, out);
}

void write_dataset(const Table& t, const std::filesystem::path& path, Format format) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot open '" + path.string() + "' for writing");
  write_table(t, out, format);
  out.flush();
  if (!out) throw std::runtime_error("write to '" + path.string() + "' failed");
}

std::size_t CsvDocument::column(const std::string& name) const {
  for (std::size_t i = 0; i < columns.size(); ++i)
    if (columns[i] == name) return i;
  throw ParseError("no column named '" + name + "'", 1, name);
}

double CsvDocument::number(std::size_t row, const std::string& name) const {
  const std::string& text = rows.at(row).at(column(name));
  // Line numbers count the header as line 1.
  const std::size_t line = row + 2;
  char* end = nullptr;
  const double v = std::strtod(text.c_str(), &end);
  if (text.empty() || end != text.c_str() + text.size())
    throw ParseError("line " + std::to_string(line) + ": field '" + name + "' is not a number: '" +
                         text + "'",
                     line, name);
  return v;
}

CsvDocument read_csv(std::istream& in) {
  CsvDocument doc;
  std::string line;
  if (!std::getline(in, line)) throw ParseError("missing CSV header", 1, "");
  doc.columns = split_csv_line(line);
  std::size_t lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    auto fields = split_csv_line(line);
    if (fields.size() != doc.columns.size())
      throw ParseError("line " + std::to_string(lineno) + ": expected " +
                           std::to_string(doc.columns.size()) + " fields, got " +
                           std::to_string(fields.size()),
                       lineno, "");
    doc.rows.push_back(std::move(fields));
  }
  return doc;
}

CsvDocument read_csv(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open '" + path.string() + "'");
  return read_csv(in);
}

}  // namespace gaa
