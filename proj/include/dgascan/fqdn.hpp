#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "dgascan/errors.hpp"

namespace dgascan {

inline constexpr std::size_t kMaxLabelLength = 63;
inline constexpr std::size_t kMaxNameLength = 253;

/// A validated, normalized fully-qualified domain name.
///
/// `normalized` is the lowercase form every scoring and statistics routine
/// operates on. `raw` keeps the caller's spelling (minus one trailing dot)
/// for display. `prefix` holds everything left of the last two labels, the
/// part of a name where machine-generated payloads usually live.
struct Fqdn {
  std::string raw;
  std::string normalized;
  std::vector<std::string> labels;
  std::string prefix;

  bool operator==(const Fqdn&) const = default;
};

/// Joins all labels except the last two with dots. Empty for names of one
/// or two labels. This approximates "everything left of the registrable
/// domain" without a public-suffix database; multi-label suffixes such as
/// .co.uk are treated as if the registrable domain were the last two labels.
inline std::string prefix_of(const std::vector<std::string>& labels) {
  if (labels.size() <= 2) return "";
  std::string out;
  for (std::size_t i = 0; i + 2 < labels.size(); ++i) {
    if (i > 0) out += '.';
    out += labels[i];
  }
  return out;
}

inline std::string prefix_of(const Fqdn& fqdn) { return prefix_of(fqdn.labels); }

namespace detail {

inline bool is_label_char(char c, bool strict) {
  if ((c >= 'a' && c <= 'z') || (c >= '0' && c <= '9') || c == '-') return true;
  return !strict && c == '_';
}

inline std::string_view trim(std::string_view s) {
  constexpr std::string_view ws = " \t\r\n";
  auto first = s.find_first_not_of(ws);
  if (first == std::string_view::npos) return {};
  auto last = s.find_last_not_of(ws);
  return s.substr(first, last - first + 1);
}

}  // namespace detail

/// Parses and normalizes a raw domain-name string.
///
/// Accepts uppercase input (lowercased), strips one trailing dot, and splits
/// on '.'. Lenient mode (default) allows [a-z0-9-_] inside labels; strict
/// mode drops '_' per RFC1035. Throws Error with codes EmptyInput,
/// IllegalCharacter, EmptyLabel, LabelTooLong, or NameTooLong.
inline Fqdn validate_fqdn(std::string_view raw, bool strict = false) {
  std::string_view trimmed = detail::trim(raw);
  if (trimmed.empty()) raise(errc::empty_input, "domain name is empty");

  if (trimmed.size() > 1 && trimmed.back() == '.') {
    trimmed.remove_suffix(1);
  } else if (trimmed == ".") {
    raise(errc::empty_label, "name consists of a single dot");
  }

  Fqdn fqdn;
  fqdn.raw.assign(trimmed);
  fqdn.normalized.reserve(trimmed.size());
  for (char c : trimmed) {
    fqdn.normalized += (c >= 'A' && c <= 'Z') ? static_cast<char>(c - 'A' + 'a') : c;
  }

  if (fqdn.normalized.size() > kMaxNameLength) {
    raise(errc::name_too_long, "name is " + std::to_string(fqdn.normalized.size()) +
                                   " characters, limit is " + std::to_string(kMaxNameLength));
  }

  std::string label;
  auto flush_label = [&](std::size_t at) {
    if (label.empty()) raise(errc::empty_label, "empty label at position " + std::to_string(at));
    if (label.size() > kMaxLabelLength) {
      raise(errc::label_too_long, "label '" + label + "' is " + std::to_string(label.size()) +
                                      " characters, limit is " + std::to_string(kMaxLabelLength));
    }
    fqdn.labels.push_back(std::move(label));
    label.clear();
  };

  for (std::size_t i = 0; i < fqdn.normalized.size(); ++i) {
    char c = fqdn.normalized[i];
    if (c == '.') {
      flush_label(i);
    } else if (detail::is_label_char(c, strict)) {
      label += c;
    } else {
      raise(errc::illegal_character,
            std::string("illegal character '") + c + "' at position " + std::to_string(i));
    }
  }
  flush_label(fqdn.normalized.size());

  fqdn.prefix = prefix_of(fqdn.labels);
  return fqdn;
}

}  // namespace dgascan
