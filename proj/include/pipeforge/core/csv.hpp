#pragma once

#include <fstream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "pipeforge/core/error.hpp"

namespace pipeforge {

// Column-major table of raw cell strings, as read from a delimited file with a
// header row.
struct Table {
  std::string name;
  std::vector<std::string> column_names;
  std::vector<std::vector<std::string>> columns;

  std::size_t row_count() const { return columns.empty() ? 0 : columns.front().size(); }
  std::size_t column_count() const { return columns.size(); }

  // Index of the named column, or column_count() when absent.
  std::size_t find_column(std::string_view column) const {
    for (std::size_t i = 0; i < column_names.size(); ++i) {
      if (column_names[i] == column) return i;
    }
    return column_names.size();
  }
};

namespace csv {

// RFC 4180 style record splitting: quoted fields may contain the delimiter,
// doubled quotes and newlines.
inline std::vector<std::vector<std::string>> parse_records(std::string_view data, char delimiter = ',') {
  std::vector<std::vector<std::string>> records;
  std::vector<std::string> record;
  std::string field;
  bool in_quotes = false;
  bool field_started = false;
  std::size_t i = 0;
  auto end_field = [&] {
    record.push_back(std::move(field));
    field.clear();
    field_started = false;
  };
  auto end_record = [&] {
    end_field();
    if (!(record.size() == 1 && record.front().empty())) records.push_back(std::move(record));
    record.clear();
  };
  while (i < data.size()) {
    const char c = data[i];
    if (in_quotes) {
      if (c == '"') {
        if (i + 1 < data.size() && data[i + 1] == '"') {
          field.push_back('"');
          ++i;
        } else {
          in_quotes = false;
        }
      } else {
        field.push_back(c);
      }
    } else if (c == '"' && !field_started) {
      in_quotes = true;
      field_started = true;
    } else if (c == delimiter) {
      end_field();
    } else if (c == '\n' || c == '\r') {
      if (c == '\r' && i + 1 < data.size() && data[i + 1] == '\n') ++i;
      end_record();
    } else {
      field.push_back(c);
      field_started = true;
    }
    ++i;
  }
  if (in_quotes) throw FormatError("unterminated quoted field");
  if (field_started || !field.empty() || !record.empty()) end_record();
  return records;
}

inline Table parse_table(std::string_view data, char delimiter = ',', std::string name = {}) {
  auto records = parse_records(data, delimiter);
  if (records.empty()) throw FormatError("csv has no header row");
  Table table;
  table.name = std::move(name);
  table.column_names = std::move(records.front());
  table.columns.assign(table.column_names.size(), {});
  for (std::size_t r = 1; r < records.size(); ++r) {
    auto& rec = records[r];
    if (rec.size() != table.column_names.size()) {
      throw FormatError("csv row " + std::to_string(r + 1) + " has " + std::to_string(rec.size()) +
                        " fields, expected " + std::to_string(table.column_names.size()));
    }
    for (std::size_t c = 0; c < rec.size(); ++c) table.columns[c].push_back(std::move(rec[c]));
  }
  return table;
}

inline Table read_table(const std::string& path, char delimiter = ',', std::string name = {}) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FormatError("cannot open csv file " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_table(buf.str(), delimiter, std::move(name));
}

// Field quoted for output when it holds a delimiter, quote or line break.
inline std::string field(std::string_view s) {
  if (s.find_first_of(",\"\r\n") == std::string_view::npos) return std::string(s);
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace csv
}  // namespace pipeforge
