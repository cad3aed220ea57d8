#pragma once

// Tabular output shared by the subcommands: CSV with '#' comment lines, or a
// single JSON object {meta, rows}.

#include <iosfwd>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace qbarrier::cli {

enum class Format { csv, json };

using Cell = std::variant<double, long long, std::string>;

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
  /// Ordered key/value pairs, written as '# key=value' in CSV.
  std::vector<std::pair<std::string, std::string>> meta;

  void add_meta(std::string key, std::string value) { meta.emplace_back(std::move(key), std::move(value)); }
};

/// 12 significant digits, locale independent; "nan", "inf", "-inf" otherwise.
std::string format_number(double x);

void write_csv(const Table& table, std::ostream& os);
void write_json(const Table& table, std::ostream& os);
void write_table(const Table& table, Format format, std::ostream& os);

}  // namespace qbarrier::cli
