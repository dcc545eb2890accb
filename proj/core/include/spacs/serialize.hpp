#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace spacs {

enum class OutputFormat { csv, json };

OutputFormat parse_output_format(std::string_view text);

/// A flat table: CSV and JSON are both rendered from it, with the same
/// number formatting, so the two formats cannot disagree.
struct Table {
  using Cell = std::variant<double, long long, std::string>;

  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
};

/// Header line then one line per row; LF endings; reals as %.17g; NaN as
/// "nan". Fields containing ',', '"' or a newline are quoted.
void write_csv(const Table& table, std::ostream& out);

/// Array of flat objects keyed by column name; non-finite reals become null.
void write_json(const Table& table, std::ostream& out);

void write_table(const Table& table, OutputFormat format, std::ostream& out);

std::string render(const Table& table, OutputFormat format);

}  // namespace spacs
