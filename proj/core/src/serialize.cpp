#include "spacs/serialize.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>
#include <sstream>

#include "spacs/angles.hpp"
#include "spacs/error.hpp"

namespace spacs {
namespace {

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n\r") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

std::string json_string(const std::string& s) {
  std::string out = "\"";
  for (unsigned char c : s) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\r': out += "\\r"; break;
      case '\t': out += "\\t"; break;
      default:
        if (c < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof(buf), "\\u%04x", c);
          out += buf;
        } else {
          out += static_cast<char>(c);
        }
    }
  }
  out += '"';
  return out;
}

struct CsvCell {
  std::string operator()(double v) const { return format_real(v); }
  std::string operator()(long long v) const { return std::to_string(v); }
  std::string operator()(const std::string& v) const { return csv_field(v); }
};

struct JsonCell {
  std::string operator()(double v) const { return std::isfinite(v) ? format_real(v) : "null"; }
  std::string operator()(long long v) const { return std::to_string(v); }
  std::string operator()(const std::string& v) const { return json_string(v); }
};

}  // namespace

OutputFormat parse_output_format(std::string_view text) {
  if (text == "csv") return OutputFormat::csv;
  if (text == "json") return OutputFormat::json;
  throw Error(ErrorCode::parse_error, "unknown output format '" + std::string(text) + "' (expected csv or json)");
}

void write_csv(const Table& table, std::ostream& out) {
  for (std::size_t i = 0; i < table.columns.size(); ++i) out << (i ? "," : "") << csv_field(table.columns[i]);
  out << '\n';
  for (const auto& row : table.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << std::visit(CsvCell{}, row[i]);
    out << '\n';
  }
}

void write_json(const Table& table, std::ostream& out) {
  out << '[';
  for (std::size_t r = 0; r < table.rows.size(); ++r) {
    out << (r ? ",\n  {" : "\n  {");
    const auto& row = table.rows[r];
    for (std::size_t i = 0; i < row.size() && i < table.columns.size(); ++i) {
      out << (i ? ", " : "") << json_string(table.columns[i]) << ": " << std::visit(JsonCell{}, row[i]);
    }
    out << '}';
  }
  out << (table.rows.empty() ? "]\n" : "\n]\n");
}

void write_table(const Table& table, OutputFormat format, std::ostream& out) {
  if (format == OutputFormat::csv) {
    write_csv(table, out);
  } else {
    write_json(table, out);
  }
}

std::string render(const Table& table, OutputFormat format) {
  std::ostringstream os;
  write_table(table, format, os);
  return os.str();
}

}  // namespace spacs
