#pragma once

#include <iosfwd>
#include <string>
#include <variant>
#include <vector>

namespace cubegauss::cli {

using Cell = std::variant<double, std::string>;

/// A named-column table; every row has one cell per column.
struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;

  void add_row(std::vector<Cell> row);
};

enum class Format { csv, json };

/// Shortest decimal string that parses back to the same double; "nan",
/// "inf" and "-inf" for non-finite values.
std::string format_double(double v);

/// Header row then one line per row. Cells holding a comma or quote are quoted.
void write_csv(std::ostream& out, const Table& table);

/// Array of objects keyed by column name. Non-finite numbers become null.
void write_json(std::ostream& out, const Table& table);

void write_table(std::ostream& out, const Table& table, Format format);

/// Inverse of write_csv: numeric-looking cells come back as doubles.
Table parse_csv(std::istream& in);

}  // namespace cubegauss::cli
