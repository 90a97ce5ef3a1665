#pragma once

#include <cstddef>
#include <filesystem>
#include <string>
#include <unordered_set>
#include <vector>

#include "dgascan/detail/io.hpp"
#include "dgascan/errors.hpp"
#include "dgascan/fqdn.hpp"

namespace dgascan {

/// Bookkeeping for one ingest pass. For every candidate line exactly one
/// counter moves, so yielded + skipped + deduplicated equals the number of
/// candidates seen.
struct IngestSummary {
  std::size_t yielded = 0;
  std::size_t skipped = 0;
  std::size_t deduplicated = 0;
};

struct IngestResult {
  std::vector<Fqdn> domains;
  IngestSummary summary;
};

namespace detail {

class IngestAccumulator {
 public:
  IngestAccumulator(IngestResult& result, bool dedupe, bool strict)
      : result_(result), dedupe_(dedupe), strict_(strict) {}

  void add_candidate(std::string_view text) {
    Fqdn fqdn;
    try {
      fqdn = validate_fqdn(text, strict_);
    } catch (const Error&) {
      ++result_.summary.skipped;
      return;
    }
    if (dedupe_ && !seen_.insert(fqdn.normalized).second) {
      ++result_.summary.deduplicated;
      return;
    }
    result_.domains.push_back(std::move(fqdn));
    ++result_.summary.yielded;
  }

 private:
  IngestResult& result_;
  bool dedupe_;
  bool strict_;
  std::unordered_set<std::string> seen_;
};

/// Pulls the queried domain out of a dnsmasq-style line:
///   ... query[TYPE] DOMAIN from IP
/// Returns false for every other line shape (forwards, replies, cached ...).
inline bool extract_pihole_query(const std::string& line, std::string_view& domain) {
  auto q = line.find("query[");
  if (q == std::string::npos) return false;
  auto close = line.find(']', q + 6);
  if (close == std::string::npos) return false;

  std::string_view rest = std::string_view(line).substr(close + 1);
  auto skip_spaces = [](std::string_view& s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  };
  auto take_token = [&](std::string_view& s) {
    std::size_t end = 0;
    while (end < s.size() && s[end] != ' ' && s[end] != '\t') ++end;
    auto tok = s.substr(0, end);
    s.remove_prefix(end);
    return tok;
  };

  skip_spaces(rest);
  auto name = take_token(rest);
  skip_spaces(rest);
  auto from = take_token(rest);
  skip_spaces(rest);
  auto ip = take_token(rest);
  if (name.empty() || from != "from" || ip.empty()) return false;
  domain = name;
  return true;
}

}  // namespace detail

/// Reads a plain log: one domain per line. Blank lines are ignored; every
/// other line is a candidate that is trimmed and validated. With `dedupe`
/// the first occurrence of each normalized name wins and file order is
/// preserved. Throws FileUnreadable, or AllLinesRejected when no domain
/// survives.
inline IngestResult read_plain(const std::filesystem::path& path, bool dedupe = true,
                               bool strict = false) {
  auto in = detail::open_text(path);
  IngestResult result;
  detail::IngestAccumulator acc(result, dedupe, strict);
  std::string line;
  while (detail::getline_crlf(in, line)) {
    auto candidate = detail::trim(line);
    if (candidate.empty()) continue;
    acc.add_candidate(candidate);
  }
  if (result.domains.empty()) {
    raise(errc::all_lines_rejected, "no usable domains in '" + path.string() + "'");
  }
  return result;
}

/// Reads a Pi-hole (dnsmasq) log, keeping only `query[...]` lines so one
/// lookup is counted once rather than once per forward/reply line. The
/// extracted domains validate exactly as in read_plain.
inline IngestResult read_pihole(const std::filesystem::path& path, bool dedupe = true,
                                bool strict = false) {
  auto in = detail::open_text(path);
  IngestResult result;
  detail::IngestAccumulator acc(result, dedupe, strict);
  std::string line;
  std::string_view domain;
  while (detail::getline_crlf(in, line)) {
    if (detail::extract_pihole_query(line, domain)) acc.add_candidate(domain);
  }
  if (result.domains.empty()) {
    raise(errc::all_lines_rejected, "no query lines in '" + path.string() + "'");
  }
  return result;
}

}  // namespace dgascan
