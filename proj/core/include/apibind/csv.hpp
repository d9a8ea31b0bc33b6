// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

// RFC 4180 framing: comma separated, `"` quoting with `""` escapes, CRLF or
// LF line endings accepted, CRLF written. The first row is the header.
namespace apibind::csv {

class CsvError : public std::runtime_error {
 public:
  CsvError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
};

/// Throws CsvError on framing errors, including rows whose field count
/// differs from the header. Blank lines between records are skipped.
Table parse(std::string_view text);

std::string write(const Table& table);

std::string quote_field(std::string_view field);

}  // namespace apibind::csv
