#pragma once

#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

#include "dgascan/errors.hpp"

namespace dgascan::detail {

/// Opens a file for line-by-line reading, raising FileUnreadable on failure.
inline std::ifstream open_text(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) raise(errc::file_unreadable, "cannot open '" + path.string() + "'");
  return in;
}

/// Reads one line, stripping a trailing '\r' so CRLF and LF inputs behave
/// identically.
inline bool getline_crlf(std::istream& in, std::string& line) {
  if (!std::getline(in, line)) return false;
  if (!line.empty() && line.back() == '\r') line.pop_back();
  return true;
}

/// Splits a single CSV record into fields. Handles double-quoted fields with
/// "" escapes. Embedded newlines are out of scope; vendor Top-N files keep
/// one record per line.
inline std::vector<std::string> split_csv_row(const std::string& line) {
  std::vector<std::string> fields;
  std::string field;
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    char c = line[i];
    if (quoted) {
      if (c == '"') {
        if (i + 1 < line.size() && line[i + 1] == '"') {
          field += '"';
          ++i;
        } else {
          quoted = false;
        }
      } else {
        field += c;
      }
    } else if (c == '"' && field.empty()) {
      quoted = true;
    } else if (c == ',') {
      fields.push_back(std::move(field));
      field.clear();
    } else {
      field += c;
    }
  }
  fields.push_back(std::move(field));
  return fields;
}

}  // namespace dgascan::detail
