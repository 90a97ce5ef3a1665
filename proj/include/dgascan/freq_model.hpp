#pragma once

#include <algorithm>
#include <array>
#include <cctype>
#include <cmath>
#include <cstddef>
#include <filesystem>
#include <map>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "dgascan/detail/format.hpp"
#include "dgascan/detail/io.hpp"
#include "dgascan/errors.hpp"
#include "dgascan/fqdn.hpp"

namespace dgascan {

enum class ModelSource { builtin, cisco, majestic, plain_corpus };

inline const char* model_source_name(ModelSource s) noexcept {
  switch (s) {
    case ModelSource::builtin: return "builtin";
    case ModelSource::cisco: return "cisco";
    case ModelSource::majestic: return "majestic";
    case ModelSource::plain_corpus: return "plain-corpus";
  }
  return "?";
}

/// The 39 characters every model assigns probability mass to, before any
/// additional observed characters: a-z, 0-9, '-', '.', '_'.
inline std::string base_alphabet() {
  std::string a;
  for (char c = 'a'; c <= 'z'; ++c) a += c;
  for (char c = '0'; c <= '9'; ++c) a += c;
  a += '-';
  a += '.';
  a += '_';
  return a;
}

/// Character-probability distribution over the domain-name alphabet.
///
/// `probabilities` holds every character with p(c) > 0, keyed in codepoint
/// order. With smoothing_epsilon > 0 that is the full base alphabet plus any
/// observed extras; with epsilon == 0 only observed characters survive.
struct CharFrequencyModel {
  std::map<char, double> probabilities;
  ModelSource source = ModelSource::builtin;
  std::string source_path;
  double smoothing_epsilon = 0.0;
  std::size_t sample_size = 0;

  std::string alphabet() const {
    std::string a;
    a.reserve(probabilities.size());
    for (const auto& [c, p] : probabilities) a += c;
    return a;
  }

  double probability(char c) const {
    auto it = probabilities.find(c);
    return it == probabilities.end() ? 0.0 : it->second;
  }

  /// Smallest assigned probability; the fallback mass for characters the
  /// model has never seen. 0 for an empty model.
  double min_probability() const {
    double m = 0.0;
    bool first = true;
    for (const auto& [c, p] : probabilities) {
      if (first || p < m) m = p;
      first = false;
    }
    return m;
  }
};

/// Builds a character-probability model by counting every character
/// occurrence (dots included) across the normalized corpus.
///
/// p(c) = (count(c) + epsilon) / (total + epsilon * |alphabet|), with
/// alphabet = base alphabet plus any observed characters. epsilon defaults
/// to add-one smoothing so no character in the alphabet ends up at zero.
/// Characters whose probability comes out exactly zero (possible only with
/// epsilon == 0) are dropped. Throws EmptyCorpus for an empty input.
inline CharFrequencyModel build_model(const std::vector<Fqdn>& domains,
                                      double epsilon = 1.0) {
  if (domains.empty()) raise(errc::empty_corpus, "no domains to build a model from");

  std::array<std::size_t, 256> counts{};
  std::size_t total = 0;
  for (const Fqdn& d : domains) {
    for (char c : d.normalized) {
      ++counts[static_cast<unsigned char>(c)];
      ++total;
    }
  }

  std::array<bool, 256> in_alphabet{};
  std::size_t alphabet_size = 0;
  for (char c : base_alphabet()) {
    in_alphabet[static_cast<unsigned char>(c)] = true;
    ++alphabet_size;
  }
  for (int i = 0; i < 256; ++i) {
    if (counts[i] > 0 && !in_alphabet[i]) {
      in_alphabet[i] = true;
      ++alphabet_size;
    }
  }

  CharFrequencyModel model;
  model.smoothing_epsilon = epsilon;
  model.sample_size = domains.size();

  const double denom = static_cast<double>(total) + epsilon * static_cast<double>(alphabet_size);
  for (int i = 0; i < 256; ++i) {
    if (!in_alphabet[i]) continue;
    const double p = (static_cast<double>(counts[i]) + epsilon) / denom;
    if (p > 0.0) model.probabilities.emplace(static_cast<char>(i), p);
  }
  return model;
}

/// Shannon entropy of the model distribution itself, in bits. A diagnostic:
/// how spread out the reference corpus is over its alphabet.
inline double model_entropy(const CharFrequencyModel& model) {
  double h = 0.0;
  for (const auto& [c, p] : model.probabilities) {
    if (p > 0.0) h -= p * std::log2(p);
  }
  return h;
}

/// Per-file load outcome for the corpus loaders: how many rows became
/// domains and how many were rejected.
struct LoadSummary {
  std::size_t yielded = 0;
  std::size_t skipped = 0;
};

struct LoadResult {
  std::vector<Fqdn> domains;
  LoadSummary summary;
};

/// Loads a Cisco Umbrella Top-N file: headerless lines of `rank,domain`.
/// Rows missing the comma or failing validation are counted and skipped.
/// Throws FileUnreadable or, when nothing survives, AllRowsRejected.
inline LoadResult load_cisco_csv(const std::filesystem::path& path) {
  auto in = detail::open_text(path);
  LoadResult result;
  std::string line;
  while (detail::getline_crlf(in, line)) {
    if (line.empty()) continue;
    auto comma = line.find(',');
    if (comma == std::string::npos) {
      ++result.summary.skipped;
      continue;
    }
    try {
      result.domains.push_back(validate_fqdn(line.substr(comma + 1)));
      ++result.summary.yielded;
    } catch (const Error&) {
      ++result.summary.skipped;
    }
  }
  if (result.domains.empty()) {
    raise(errc::all_rows_rejected, "no usable rows in '" + path.string() + "'");
  }
  return result;
}

/// Loads a Majestic Million file: a header row naming a `Domain` column
/// (matched case-insensitively), then standard CSV rows. Throws
/// FileUnreadable, MissingDomainColumn, or AllRowsRejected.
inline LoadResult load_majestic_csv(const std::filesystem::path& path) {
  auto in = detail::open_text(path);
  std::string line;
  if (!detail::getline_crlf(in, line)) {
    raise(errc::missing_domain_column, "'" + path.string() + "' has no header row");
  }

  auto lower = [](std::string s) {
    std::transform(s.begin(), s.end(), s.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return s;
  };

  const auto header = detail::split_csv_row(line);
  std::size_t domain_col = header.size();
  for (std::size_t i = 0; i < header.size(); ++i) {
    if (lower(std::string(detail::trim(header[i]))) == "domain") {
      domain_col = i;
      break;
    }
  }
  if (domain_col == header.size()) {
    raise(errc::missing_domain_column, "no 'Domain' column in '" + path.string() + "'");
  }

  LoadResult result;
  while (detail::getline_crlf(in, line)) {
    if (line.empty()) continue;
    const auto fields = detail::split_csv_row(line);
    if (fields.size() <= domain_col) {
      ++result.summary.skipped;
      continue;
    }
    try {
      result.domains.push_back(validate_fqdn(fields[domain_col]));
      ++result.summary.yielded;
    } catch (const Error&) {
      ++result.summary.skipped;
    }
  }
  if (result.domains.empty()) {
    raise(errc::all_rows_rejected, "no usable rows in '" + path.string() + "'");
  }
  return result;
}

/// Writes the model as `char,probability` CSV, one row per character in
/// codepoint order, probabilities at 17 significant digits.
inline void dump_model(const CharFrequencyModel& model, std::ostream& out) {
  out << "char,probability\n";
  for (const auto& [c, p] : model.probabilities) {
    out << c << ',' << detail::to_string_sig17(p) << '\n';
  }
}

}  // namespace dgascan
