#pragma once

#include <algorithm>
#include <cstddef>
#include <filesystem>
#include <fstream>
#include <span>
#include <string>
#include <vector>

#include "dgascan/detail/format.hpp"
#include "dgascan/errors.hpp"
#include "dgascan/stats.hpp"

namespace dgascan {

namespace detail {

inline constexpr const char* kScoreCsvHeader = "entropy_bits,fqdn,length,prefix_length,mode";

// Fields never contain commas or quotes: entropy is numeric and FQDNs are
// restricted to [a-z0-9-._], so no CSV escaping is needed.
inline void write_score_row(std::ostream& out, const DomainScore& s) {
  out << to_string_sig17(s.entropy_bits) << ',' << s.fqdn.normalized << ',' << s.length << ','
      << s.prefix_length << ',' << score_mode_name(s.mode) << '\n';
}

inline std::ofstream open_writable(const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) raise(errc::path_unwritable, "cannot write '" + path.string() + "'");
  return out;
}

}  // namespace detail

/// Writes the suspects CSV: a header line, then one row per suspect in
/// report order, entropy at 17 significant digits, LF line endings.
/// Returns the number of data rows written.
inline std::size_t write_suspects_csv(const DetectionReport& report,
                                      const std::filesystem::path& path) {
  auto out = detail::open_writable(path);
  out << detail::kScoreCsvHeader << '\n';
  for (const DomainScore& s : report.suspects) detail::write_score_row(out, s);
  out.flush();
  if (!out) raise(errc::path_unwritable, "write failed on '" + path.string() + "'");
  return report.suspects.size();
}

/// Writes every score (suspect or not) in the standard score order.
/// Same format as the suspects CSV.
inline std::size_t write_scores_csv(std::span<const DomainScore> scores,
                                    const std::filesystem::path& path) {
  std::vector<DomainScore> sorted(scores.begin(), scores.end());
  std::sort(sorted.begin(), sorted.end(), score_order);

  auto out = detail::open_writable(path);
  out << detail::kScoreCsvHeader << '\n';
  for (const DomainScore& s : sorted) detail::write_score_row(out, s);
  out.flush();
  if (!out) raise(errc::path_unwritable, "write failed on '" + path.string() + "'");
  return sorted.size();
}

/// Renders the human-readable run summary: the suspect list, the entropy
/// waterline, and the corpus averages at six decimal places.
inline std::string render_summary(const DetectionReport& report) {
  using detail::to_string_fixed6;
  using detail::to_string_sig17;

  std::string out;
  for (const DomainScore& s : report.suspects) {
    out += "Shannon_Entropy: " + to_string_sig17(s.entropy_bits) +
           "; Suspect_FQDN: " + s.fqdn.normalized + '\n';
  }
  out += '\n';
  out += "### Entropy Test ###\n";
  out += "Shannon_Entropy > " + to_string_sig17(report.stats.threshold) +
         " is statistically significant!\n";
  out += '\n';
  out += "### Averages ###\n";
  out += "Avg URL Length is: " + to_string_fixed6(report.stats.mean_length) +
         ", StdDev is: " + to_string_fixed6(report.stats.stddev_length) + '\n';
  out += "Avg Entropy is: " + to_string_fixed6(report.stats.mean_entropy) +
         ", StdDev is: " + to_string_fixed6(report.stats.stddev_entropy) + '\n';
  out += "Avg Prefix Length is: " + to_string_fixed6(report.stats.mean_prefix_length) +
         ", StdDev is: " + to_string_fixed6(report.stats.stddev_prefix_length) + '\n';
  out += '\n';
  out += "COMPLETE - see saved output files.\n";
  return out;
}

}  // namespace dgascan
