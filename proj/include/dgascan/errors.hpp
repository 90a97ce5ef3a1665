#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace dgascan {

/// Failure categories surfaced by the library. Each maps to exactly one
/// throw site family; the CLI translates them into process exit codes.
enum class errc {
  // fqdn validation
  empty_input,
  illegal_character,
  label_too_long,
  name_too_long,
  empty_label,
  // model building / loading
  empty_corpus,
  file_unreadable,
  missing_domain_column,
  all_rows_rejected,
  // ingest
  all_lines_rejected,
  // allowlist
  invalid_pattern,
  // report
  path_unwritable,
  // stats
  empty_score_set,
  // cli
  usage_error,
};

inline const char* errc_name(errc code) noexcept {
  switch (code) {
    case errc::empty_input: return "EmptyInput";
    case errc::illegal_character: return "IllegalCharacter";
    case errc::label_too_long: return "LabelTooLong";
    case errc::name_too_long: return "NameTooLong";
    case errc::empty_label: return "EmptyLabel";
    case errc::empty_corpus: return "EmptyCorpus";
    case errc::file_unreadable: return "FileUnreadable";
    case errc::missing_domain_column: return "MissingDomainColumn";
    case errc::all_rows_rejected: return "AllRowsRejected";
    case errc::all_lines_rejected: return "AllLinesRejected";
    case errc::invalid_pattern: return "InvalidPattern";
    case errc::path_unwritable: return "PathUnwritable";
    case errc::empty_score_set: return "EmptyScoreSet";
    case errc::usage_error: return "UsageError";
  }
  return "UnknownError";
}

class Error : public std::runtime_error {
 public:
  Error(errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what),
        code_(code) {}

  errc code() const noexcept { return code_; }

 private:
  errc code_;
};

[[noreturn]] inline void raise(errc code, const std::string& what) {
  throw Error(code, what);
}

}  // namespace dgascan
