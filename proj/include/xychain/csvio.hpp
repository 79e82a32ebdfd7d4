#pragma once

// Tabular output: CSV with a header row, or a JSON array of records
// mirroring the same fields.  Doubles are printed with 12 significant
// digits so that sweep output is reproducible byte-for-byte.

#include <cstdint>
#include <iosfwd>
#include <string>
#include <variant>
#include <vector>

namespace xychain {

enum class OutputFormat { CsvHeadered, JsonRecords };

// Throws DomainError on anything other than "csv" / "json".
OutputFormat parse_format(const std::string& name);

using Value = std::variant<double, std::int64_t, std::string>;

struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<Value>> rows;

  void require_rectangular() const;  // throws ShapeViolation on ragged rows
};

// %.12g rendering used for every double we emit.
std::string fmt12(double x);

void emit(const Table& table, OutputFormat format, std::ostream& out);

}  // namespace xychain
