#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <filesystem>
#include <span>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

#include "dgascan/detail/io.hpp"
#include "dgascan/errors.hpp"
#include "dgascan/scorer.hpp"

namespace dgascan {

/// Means and population standard deviations over a score set, plus the
/// flagging waterline mean_entropy + sigma_k * stddev_entropy.
struct CorpusStats {
  std::size_t n = 0;
  double mean_entropy = 0.0;
  double stddev_entropy = 0.0;
  double mean_length = 0.0;
  double stddev_length = 0.0;
  double mean_prefix_length = 0.0;
  double stddev_prefix_length = 0.0;
  double sigma_k = 2.0;
  double threshold = 0.0;
};

namespace detail {

/// Two-pass mean / population standard deviation (divide by n).
template <typename Proj>
inline void mean_stddev(std::span<const DomainScore> scores, Proj proj, double& mean,
                        double& stddev) {
  const double n = static_cast<double>(scores.size());
  double sum = 0.0;
  for (const DomainScore& s : scores) sum += proj(s);
  mean = sum / n;

  double sq = 0.0;
  for (const DomainScore& s : scores) {
    const double d = proj(s) - mean;
    sq += d * d;
  }
  stddev = std::sqrt(sq / n);
}

}  // namespace detail

/// Computes corpus statistics over entropy, name length, and prefix length.
/// Standard deviations are population deviations, so a single score yields
/// stddev 0 and a threshold equal to its own entropy. Throws EmptyScoreSet.
inline CorpusStats compute_stats(std::span<const DomainScore> scores, double sigma_k = 2.0) {
  if (scores.empty()) raise(errc::empty_score_set, "no scores to summarize");
  if (!(sigma_k > 0.0)) throw std::invalid_argument("sigma_k must be > 0");

  CorpusStats stats;
  stats.n = scores.size();
  stats.sigma_k = sigma_k;
  detail::mean_stddev(
      scores, [](const DomainScore& s) { return s.entropy_bits; }, stats.mean_entropy,
      stats.stddev_entropy);
  detail::mean_stddev(
      scores, [](const DomainScore& s) { return static_cast<double>(s.length); },
      stats.mean_length, stats.stddev_length);
  detail::mean_stddev(
      scores, [](const DomainScore& s) { return static_cast<double>(s.prefix_length); },
      stats.mean_prefix_length, stats.stddev_prefix_length);
  stats.threshold = stats.mean_entropy + stats.sigma_k * stats.stddev_entropy;
  return stats;
}

/// Known-benign patterns that suppress flagging. Two kinds:
///   example.com      exact normalized match
///   *.example.com    example.com itself or any name below it
class Allowlist {
 public:
  /// Adds one pattern. '*' is legal only as a leading "*." wildcard;
  /// anything else throws InvalidPattern.
  void add_pattern(std::string_view pattern) {
    auto p = detail::trim(pattern);
    if (p.empty()) return;
    bool wildcard = false;
    if (p.size() >= 2 && p[0] == '*' && p[1] == '.') {
      wildcard = true;
      p.remove_prefix(2);
    }
    if (p.find('*') != std::string_view::npos) {
      raise(errc::invalid_pattern,
            "'" + std::string(pattern) + "': '*' is only allowed as a leading '*.'");
    }
    std::string key = normalize_key(p, pattern);
    if (wildcard) {
      suffixes_.insert(std::move(key));
    } else {
      exact_.insert(std::move(key));
    }
  }

  /// True when a normalized FQDN matches an exact entry, equals a wildcard
  /// suffix, or ends with ".<suffix>".
  bool matches(const std::string& normalized) const {
    if (exact_.count(normalized)) return true;
    if (suffixes_.empty()) return false;
    std::string_view tail = normalized;
    while (true) {
      if (suffixes_.count(std::string(tail))) return true;
      auto dot = tail.find('.');
      if (dot == std::string_view::npos) return false;
      tail.remove_prefix(dot + 1);
    }
  }

  bool empty() const { return exact_.empty() && suffixes_.empty(); }
  std::size_t size() const { return exact_.size() + suffixes_.size(); }

 private:
  static std::string normalize_key(std::string_view p, std::string_view original) {
    if (!p.empty() && p.back() == '.') p.remove_suffix(1);
    if (p.empty()) {
      raise(errc::invalid_pattern, "'" + std::string(original) + "': empty domain part");
    }
    std::string key;
    key.reserve(p.size());
    for (char c : p) {
      key += (c >= 'A' && c <= 'Z') ? static_cast<char>(c - 'A' + 'a') : c;
    }
    return key;
  }

  std::unordered_set<std::string> exact_;
  std::unordered_set<std::string> suffixes_;
};

/// Loads an allowlist file: one pattern per line, '#' comments and blank
/// lines ignored. Throws FileUnreadable or InvalidPattern.
inline Allowlist load_allowlist(const std::filesystem::path& path) {
  auto in = detail::open_text(path);
  Allowlist allowlist;
  std::string line;
  while (detail::getline_crlf(in, line)) {
    auto entry = detail::trim(line);
    if (entry.empty() || entry.front() == '#') continue;
    allowlist.add_pattern(entry);
  }
  return allowlist;
}

/// Stats plus the ordered partition of above-threshold scores into suspects
/// and allowlist-suppressed entries.
struct DetectionReport {
  CorpusStats stats;
  std::vector<DomainScore> suspects;
  std::vector<DomainScore> allowlisted;
};

/// Ordering used for every emitted score list: ascending entropy, ties
/// broken by normalized name.
inline bool score_order(const DomainScore& a, const DomainScore& b) {
  if (a.entropy_bits != b.entropy_bits) return a.entropy_bits < b.entropy_bits;
  return a.fqdn.normalized < b.fqdn.normalized;
}

/// Partitions scores against the waterline: strictly above threshold and
/// not allowlisted -> suspects; strictly above but allowlisted ->
/// allowlisted; everything else is ignored. A score exactly at the
/// threshold is never flagged.
inline DetectionReport flag_suspects(std::span<const DomainScore> scores,
                                     const CorpusStats& stats,
                                     const Allowlist& allowlist = {}) {
  DetectionReport report;
  report.stats = stats;
  for (const DomainScore& score : scores) {
    if (!(score.entropy_bits > stats.threshold)) continue;
    if (allowlist.matches(score.fqdn.normalized)) {
      report.allowlisted.push_back(score);
    } else {
      report.suspects.push_back(score);
    }
  }
  std::sort(report.suspects.begin(), report.suspects.end(), score_order);
  std::sort(report.allowlisted.begin(), report.allowlisted.end(), score_order);
  return report;
}

}  // namespace dgascan
