// SPDX-License-Identifier: Apache-2.0
#include "apibind/csv.hpp"

namespace apibind::csv {

Table parse(std::string_view text) {
  if (text.starts_with("\xEF\xBB\xBF")) text.remove_prefix(3);

  std::vector<std::vector<std::string>> records;
  std::vector<std::size_t> record_lines;
  std::vector<std::string> record;
  std::string field;
  std::size_t line = 1;
  std::size_t record_line = 1;
  bool field_started = false;  // anything seen for the current record

  auto end_field = [&] {
    record.push_back(std::move(field));
    field.clear();
  };
  auto end_record = [&] {
    end_field();
    bool blank = record.size() == 1 && record.front().empty() && !field_started;
    if (!blank) {
      records.push_back(std::move(record));
      record_lines.push_back(record_line);
    }
    record.clear();
    field_started = false;
  };

  std::size_t i = 0;
  while (i < text.size()) {
    char c = text[i];
    if (c == '"') {
      if (!field.empty()) throw CsvError(line, "quote inside an unquoted field");
      field_started = true;
      ++i;
      bool closed = false;
      while (i < text.size()) {
        char d = text[i];
        if (d == '"') {
          if (i + 1 < text.size() && text[i + 1] == '"') {
            field += '"';
            i += 2;
            continue;
          }
          closed = true;
          ++i;
          break;
        }
        if (d == '\n') ++line;
        field += d;
        ++i;
      }
      if (!closed) throw CsvError(record_line, "unterminated quoted field");
      if (i < text.size() && text[i] != ',' && text[i] != '\n' &&
          !(text[i] == '\r' && i + 1 < text.size() && text[i + 1] == '\n')) {
        throw CsvError(line, "unexpected character after closing quote");
      }
      continue;
    }
    if (c == ',') {
      field_started = true;
      end_field();
      ++i;
      continue;
    }
    if (c == '\r' && i + 1 < text.size() && text[i + 1] == '\n') {
      end_record();
      i += 2;
      record_line = ++line;
      continue;
    }
    if (c == '\n') {
      end_record();
      ++i;
      record_line = ++line;
      continue;
    }
    field_started = true;
    field += c;
    ++i;
  }
  if (field_started || !field.empty()) end_record();

  if (records.empty()) throw CsvError(1, "empty file: missing header row");
  Table table;
  table.header = std::move(records.front());
  for (std::size_t r = 1; r < records.size(); ++r) {
    if (records[r].size() != table.header.size()) {
      throw CsvError(record_lines[r], "expected " + std::to_string(table.header.size()) +
                                          " fields, found " + std::to_string(records[r].size()));
    }
    table.rows.push_back(std::move(records[r]));
  }
  return table;
}

std::string quote_field(std::string_view field) {
  if (field.find_first_of(",\"\r\n") == std::string_view::npos) return std::string(field);
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

std::string write(const Table& table) {
  std::string out;
  auto write_row = [&](const std::vector<std::string>& row) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) out += ',';
      out += quote_field(row[i]);
    }
    out += "\r\n";
  };
  write_row(table.header);
  for (const auto& row : table.rows) write_row(row);
  return out;
}

}  // namespace apibind::csv
