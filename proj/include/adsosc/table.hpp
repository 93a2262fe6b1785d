#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

// Row tables and their CSV / JSON encodings. Doubles are written in the
// shortest form that parses back to the same value.

namespace adsosc::table {

using Cell = std::variant<double, long long, std::string>;

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;

  void add_row(std::vector<Cell> row);
};

enum class Format { Csv, Json };

/// Shortest round-trip decimal; "nan", "inf", "-inf" for non-finite values.
std::string format_double(double v);

/// Header row, comma separated, '\n' line endings.
void write_csv(std::ostream& os, const Table& t);

/// Array of row objects keyed by column name; NaN and infinities become null.
void write_json(std::ostream& os, const Table& t);

void write(std::ostream& os, const Table& t, Format f);

}  // namespace adsosc::table
