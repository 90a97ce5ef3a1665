#pragma once

#include <charconv>
#include <cstdio>
#include <string>

namespace dgascan::detail {

/// Formats a double with 17 significant digits (general form, no locale).
/// 17 digits round-trip any binary64 value, so parsing the text back
/// reproduces the original bits.
inline std::string to_string_sig17(double value) {
  char buf[64];
  auto [ptr, ec] =
      std::to_chars(buf, buf + sizeof(buf), value, std::chars_format::general, 17);
  return std::string(buf, ptr);
}

/// Formats a double with exactly six digits after the decimal point.
inline std::string to_string_fixed6(double value) {
  char buf[64];
  int n = std::snprintf(buf, sizeof(buf), "%.6f", value);
  return std::string(buf, buf + (n > 0 ? n : 0));
}

}  // namespace dgascan::detail
