#include "qbarrier_cli/output.hpp"

#include <charconv>
#include <cmath>
#include <ostream>

#include <json.hpp>

#include "qbarrier/version.hpp"

namespace qbarrier::cli {

std::string format_number(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  if (x == 0.0) return "0";
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, x, std::chars_format::general, 12);
  return std::string(buf, res.ptr);
}

namespace {

std::string cell_text(const Cell& c) {
  if (const auto* d = std::get_if<double>(&c)) return format_number(*d);
  if (const auto* i = std::get_if<long long>(&c)) return std::to_string(*i);
  const auto& s = std::get<std::string>(c);
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string quoted = "\"";
  for (char ch : s) {
    if (ch == '"') quoted += '"';
    quoted += ch;
  }
  return quoted + "\"";
}

nlohmann::ordered_json cell_json(const Cell& c) {
  if (const auto* d = std::get_if<double>(&c)) {
    // JSON has no NaN/Inf; keep the information as a string.
    if (!std::isfinite(*d)) return format_number(*d);
    return *d;
  }
  if (const auto* i = std::get_if<long long>(&c)) return *i;
  return std::get<std::string>(c);
}

}  // namespace

void write_csv(const Table& table, std::ostream& os) {
  os << "# qbarrier " << kVersion << '\n';
  for (const auto& [k, v] : table.meta) os << "# " << k << '=' << v << '\n';
  for (std::size_t c = 0; c < table.columns.size(); ++c) os << (c ? "," : "") << table.columns[c];
  os << '\n';
  for (const auto& row : table.rows) {
    for (std::size_t c = 0; c < row.size(); ++c) os << (c ? "," : "") << cell_text(row[c]);
    os << '\n';
  }
}

void write_json(const Table& table, std::ostream& os) {
  nlohmann::ordered_json doc;
  doc["meta"]["version"] = kVersion;
  for (const auto& [k, v] : table.meta) doc["meta"][k] = v;
  doc["meta"]["columns"] = table.columns;
  doc["rows"] = nlohmann::ordered_json::array();
  for (const auto& row : table.rows) {
    nlohmann::ordered_json r = nlohmann::ordered_json::object();
    for (std::size_t c = 0; c < row.size() && c < table.columns.size(); ++c) r[table.columns[c]] = cell_json(row[c]);
    doc["rows"].push_back(std::move(r));
  }
  os << doc.dump(2) << '\n';
}

void write_table(const Table& table, Format format, std::ostream& os) {
  if (format == Format::json) {
    write_json(table, os);
  } else {
    write_csv(table, os);
  }
}

}  // namespace qbarrier::cli
