#include "xychain/csvio.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>

#include "xychain/errors.hpp"

namespace xychain {

OutputFormat parse_format(const std::string& name) {
  if (name == "csv") return OutputFormat::CsvHeadered;
  if (name == "json") return OutputFormat::JsonRecords;
  throw DomainError("unknown output format: " + name);
}

std::string fmt12(double x) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", x);
  return buf;
}

void Table::require_rectangular() const {
  for (const auto& row : rows)
    if (row.size() != header.size())
      throw ShapeViolation("table row width does not match header");
}

namespace {

void csv_cell(const Value& v, std::ostream& out) {
  if (std::holds_alternative<double>(v)) {
    out << fmt12(std::get<double>(v));
  } else if (std::holds_alternative<std::int64_t>(v)) {
    out << std::get<std::int64_t>(v);
  } else {
    // Our string cells are plain identifiers/messages; quote only if needed.
    const std::string& s = std::get<std::string>(v);
    bool needs_quote = s.find_first_of(",\"\n") != std::string::npos;
    if (!needs_quote) {
      out << s;
    } else {
      out << '"';
      for (char c : s) {
        if (c == '"') out << '"';
        out << c;
      }
      out << '"';
    }
  }
}

void json_string(const std::string& s, std::ostream& out) {
  out << '"';
  for (char c : s) {
    switch (c) {
      case '"': out << "\\\""; break;
      case '\\': out << "\\\\"; break;
      case '\n': out << "\\n"; break;
      case '\r': out << "\\r"; break;
      case '\t': out << "\\t"; break;
      default:
        if (static_cast<unsigned char>(c) < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof(buf), "\\u%04x", c);
          out << buf;
        } else {
          out << c;
        }
    }
  }
  out << '"';
}

void json_cell(const Value& v, std::ostream& out) {
  if (std::holds_alternative<double>(v)) {
    double x = std::get<double>(v);
    if (std::isfinite(x))
      out << fmt12(x);
    else
      out << "null";  // JSON has no NaN/inf
  } else if (std::holds_alternative<std::int64_t>(v)) {
    out << std::get<std::int64_t>(v);
  } else {
    json_string(std::get<std::string>(v), out);
  }
}

}  // namespace

void emit(const Table& table, OutputFormat format, std::ostream& out) {
  table.require_rectangular();
  if (format == OutputFormat::CsvHeadered) {
    for (std::size_t c = 0; c < table.header.size(); ++c) {
      if (c) out << ',';
      out << table.header[c];
    }
    out << '\n';
    for (const auto& row : table.rows) {
      for (std::size_t c = 0; c < row.size(); ++c) {
        if (c) out << ',';
        csv_cell(row[c], out);
      }
      out << '\n';
    }
  } else {
    out << "[\n";
    for (std::size_t r = 0; r < table.rows.size(); ++r) {
      out << "  {";
      for (std::size_t c = 0; c < table.header.size(); ++c) {
        if (c) out << ", ";
        json_string(table.header[c], out);
        out << ": ";
        json_cell(table.rows[r][c], out);
      }
      out << '}' << (r + 1 < table.rows.size() ? "," : "") << '\n';
    }
    out << "]\n";
  }
}

}  // namespace xychain
