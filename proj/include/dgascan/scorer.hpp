#pragma once

#include <array>
#include <cmath>
#include <cstddef>
#include <string_view>

#include "dgascan/fqdn.hpp"
#include "dgascan/freq_model.hpp"

namespace dgascan {

enum class ScoreMode { instring, corpus };

inline const char* score_mode_name(ScoreMode m) noexcept {
  return m == ScoreMode::instring ? "instring" : "corpus";
}

/// One scored domain. `length` and `prefix_length` always describe the full
/// normalized name and its prefix, independent of which string the entropy
/// was computed over.
struct DomainScore {
  Fqdn fqdn;
  double entropy_bits = 0.0;
  std::size_t length = 0;
  std::size_t prefix_length = 0;
  ScoreMode mode = ScoreMode::corpus;
};

/// Classic Shannon entropy of the character distribution inside `text`:
/// -sum q(c) log2 q(c) with q the relative frequency within the string.
/// Characters are aggregated in codepoint order, so any permutation of the
/// same characters produces bit-identical output.
inline double instring_entropy(std::string_view text) {
  if (text.empty()) return 0.0;
  std::array<std::size_t, 256> counts{};
  for (char c : text) ++counts[static_cast<unsigned char>(c)];

  const double n = static_cast<double>(text.size());
  double h = 0.0;
  for (std::size_t count : counts) {
    if (count == 0) continue;
    const double q = static_cast<double>(count) / n;
    h -= q * std::log2(q);
  }
  return h;
}

/// Corpus-weighted entropy: every character occurrence contributes the
/// model's per-symbol term p(c) * log2(1/p(c)), so the score grows with
/// string length. Characters absent from the model alphabet fall back to
/// the smallest model probability and bump `unknown_chars` when provided.
/// Aggregation is in codepoint order (permutation-stable).
inline double corpus_entropy(std::string_view text, const CharFrequencyModel& model,
                             std::size_t* unknown_chars = nullptr) {
  std::array<std::size_t, 256> counts{};
  for (char c : text) ++counts[static_cast<unsigned char>(c)];

  const double min_p = model.min_probability();
  double h = 0.0;
  for (int i = 0; i < 256; ++i) {
    if (counts[i] == 0) continue;
    double p = model.probability(static_cast<char>(i));
    if (p <= 0.0) {
      if (unknown_chars) *unknown_chars += counts[i];
      p = min_p;
      if (p <= 0.0) continue;  // empty model: nothing to contribute
    }
    h += static_cast<double>(counts[i]) * (p * std::log2(1.0 / p));
  }
  return h;
}

/// Scores a domain with in-string entropy. With `prefix_only` the formula
/// runs over the subdomain prefix instead of the whole name (an empty
/// prefix scores 0).
inline DomainScore score_instring(const Fqdn& fqdn, bool prefix_only = false) {
  DomainScore score;
  score.fqdn = fqdn;
  score.entropy_bits = instring_entropy(prefix_only ? fqdn.prefix : fqdn.normalized);
  score.length = fqdn.normalized.size();
  score.prefix_length = fqdn.prefix.size();
  score.mode = ScoreMode::instring;
  return score;
}

/// Scores a domain with corpus-weighted entropy against `model`.
inline DomainScore score_corpus(const Fqdn& fqdn, const CharFrequencyModel& model,
                                bool prefix_only = false,
                                std::size_t* unknown_chars = nullptr) {
  DomainScore score;
  score.fqdn = fqdn;
  score.entropy_bits =
      corpus_entropy(prefix_only ? fqdn.prefix : fqdn.normalized, model, unknown_chars);
  score.length = fqdn.normalized.size();
  score.prefix_length = fqdn.prefix.size();
  score.mode = ScoreMode::corpus;
  return score;
}

}  // namespace dgascan
