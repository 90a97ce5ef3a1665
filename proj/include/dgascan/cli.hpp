#pragma once

#include <filesystem>
#include <iostream>
#include <map>
#include <string>

#include <CLI11.hpp>

#include "dgascan/builtin_model.hpp"
#include "dgascan/errors.hpp"
#include "dgascan/freq_model.hpp"
#include "dgascan/ingest.hpp"
#include "dgascan/report.hpp"
#include "dgascan/scorer.hpp"
#include "dgascan/stats.hpp"

namespace dgascan {

enum class InputFormat { plain, pihole };

/// Fully validated configuration for one scan run.
struct RunConfig {
  std::filesystem::path input_path;
  InputFormat input_format = InputFormat::plain;
  ModelSource model_source = ModelSource::builtin;
  std::filesystem::path model_path;
  ScoreMode mode = ScoreMode::corpus;
  double sigma_k = 2.0;
  bool dedupe = true;
  bool strict = false;
  bool score_prefix_only = false;
  bool model_info = false;
  std::filesystem::path allowlist_path;
  std::filesystem::path suspects_csv = "suspects.csv";
  std::filesystem::path all_scores_csv;
  std::filesystem::path dump_model_path;
};

/// Thrown by parse_args for --help; carries the full help text.
struct HelpRequested {
  std::string text;
};

inline constexpr const char* kUsageSynopsis =
    "usage: dgascan --input FILE [--format plain|pihole]\n"
    "               [--model builtin|cisco|majestic|corpus] [--model-file FILE]\n"
    "               [--mode corpus|instring] [--sigma K] [--allowlist FILE]\n"
    "               [--out FILE] [--out-all FILE] [--dump-model FILE]\n"
    "               [--no-dedupe] [--strict] [--score-prefix-only] [--model-info]";

/// Parses command-line arguments into a RunConfig. Throws HelpRequested for
/// --help and Error(usage_error) for anything invalid: unknown flags, a
/// non-positive --sigma, a file-backed --model without --model-file (or a
/// --model-file with the builtin model), or a missing --input.
inline RunConfig parse_args(int argc, const char* const* argv) {
  RunConfig config;
  std::string input, model_file, allowlist, out = "suspects.csv", out_all, dump_model;
  bool no_dedupe = false;

  CLI::App app{"Flags DGA-style command-and-control domains in DNS logs by entropy outlier scoring."};
  app.set_help_flag("-h,--help", "print this help and exit");
  app.add_option("--input", input, "DNS log to scan")->option_text("FILE");
  app.add_option("--format", config.input_format, "input format (default: plain)")
      ->transform(CLI::CheckedTransformer(
          std::map<std::string, InputFormat>{{"plain", InputFormat::plain},
                                             {"pihole", InputFormat::pihole}},
          CLI::ignore_case));
  app.add_option("--model", config.model_source, "character model source (default: builtin)")
      ->transform(CLI::CheckedTransformer(
          std::map<std::string, ModelSource>{{"builtin", ModelSource::builtin},
                                             {"cisco", ModelSource::cisco},
                                             {"majestic", ModelSource::majestic},
                                             {"corpus", ModelSource::plain_corpus}},
          CLI::ignore_case));
  app.add_option("--model-file", model_file, "corpus file for --model cisco|majestic|corpus")
      ->option_text("FILE");
  app.add_option("--mode", config.mode, "scoring mode (default: corpus)")
      ->transform(CLI::CheckedTransformer(
          std::map<std::string, ScoreMode>{{"corpus", ScoreMode::corpus},
                                           {"instring", ScoreMode::instring}},
          CLI::ignore_case));
  app.add_option("--sigma", config.sigma_k, "flag entropies above mean + K*stddev (default: 2.0)")
      ->check(CLI::PositiveNumber)
      ->option_text("K");
  app.add_option("--allowlist", allowlist, "known-benign patterns to suppress")
      ->option_text("FILE");
  app.add_option("--out", out, "suspects CSV path (default: suspects.csv)")->option_text("FILE");
  app.add_option("--out-all", out_all, "also write every score as CSV")->option_text("FILE");
  app.add_option("--dump-model", dump_model, "export the character model as CSV")
      ->option_text("FILE");
  app.add_flag("--no-dedupe", no_dedupe, "score repeated queries once per occurrence");
  app.add_flag("--strict", config.strict, "RFC1035 validation (rejects '_')");
  app.add_flag("--score-prefix-only", config.score_prefix_only,
               "score the subdomain prefix instead of the whole name");
  app.add_flag("--model-info", config.model_info, "print model diagnostics to stderr");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    throw HelpRequested{app.help()};
  } catch (const CLI::ParseError& e) {
    raise(errc::usage_error, std::string(e.what()) + "\n" + kUsageSynopsis);
  }

  config.input_path = input;
  config.model_path = model_file;
  config.allowlist_path = allowlist;
  config.suspects_csv = out;
  config.all_scores_csv = out_all;
  config.dump_model_path = dump_model;
  config.dedupe = !no_dedupe;

  if (config.model_source != ModelSource::builtin && config.model_path.empty()) {
    raise(errc::usage_error,
          std::string("--model ") + model_source_name(config.model_source) +
              " requires --model-file\n" + kUsageSynopsis);
  }
  if (config.model_source == ModelSource::builtin && !config.model_path.empty()) {
    raise(errc::usage_error,
          std::string("--model-file is only valid with --model cisco|majestic|corpus\n") +
              kUsageSynopsis);
  }
  if (config.input_path.empty() && !config.model_info && config.dump_model_path.empty()) {
    raise(errc::usage_error, std::string("--input is required\n") + kUsageSynopsis);
  }
  return config;
}

namespace detail {

inline CharFrequencyModel load_model(const RunConfig& config, std::ostream& err) {
  auto finish = [&](LoadResult&& loaded, ModelSource source) {
    err << "model corpus: yielded=" << loaded.summary.yielded
        << " skipped=" << loaded.summary.skipped << '\n';
    CharFrequencyModel model = build_model(loaded.domains);
    model.source = source;
    model.source_path = config.model_path.string();
    return model;
  };

  switch (config.model_source) {
    case ModelSource::builtin:
      return builtin_model();
    case ModelSource::cisco:
      return finish(load_cisco_csv(config.model_path), ModelSource::cisco);
    case ModelSource::majestic:
      return finish(load_majestic_csv(config.model_path), ModelSource::majestic);
    case ModelSource::plain_corpus: {
      auto ingest = read_plain(config.model_path, /*dedupe=*/false);
      return finish(LoadResult{std::move(ingest.domains),
                               {ingest.summary.yielded, ingest.summary.skipped}},
                    ModelSource::plain_corpus);
    }
  }
  raise(errc::usage_error, "unknown model source");
}

}  // namespace detail

/// Runs the full pipeline: ingest -> model -> score -> stats -> report.
///
/// The summary goes to `out` (stdout in the CLI); ingest counts and
/// diagnostics go to `err`. Exit codes: 0 success with no suspects, 1 at
/// least one suspect, 2 usage error, 3 I/O or data error.
inline int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    const CharFrequencyModel model = detail::load_model(config, err);

    if (config.model_info) {
      err << "model: source=" << model_source_name(model.source);
      if (!model.source_path.empty()) err << " file=" << model.source_path;
      err << " sample_size=" << model.sample_size
          << " epsilon=" << detail::to_string_sig17(model.smoothing_epsilon)
          << " alphabet=" << model.probabilities.size()
          << " entropy_bits=" << detail::to_string_fixed6(model_entropy(model)) << '\n';
    }
    if (!config.dump_model_path.empty()) {
      auto model_out = detail::open_writable(config.dump_model_path);
      dump_model(model, model_out);
      model_out.flush();
      if (!model_out) {
        raise(errc::path_unwritable, "write failed on '" + config.dump_model_path.string() + "'");
      }
    }
    if (config.input_path.empty()) return 0;  // model-only invocation

    const IngestResult ingest = config.input_format == InputFormat::pihole
                                    ? read_pihole(config.input_path, config.dedupe, config.strict)
                                    : read_plain(config.input_path, config.dedupe, config.strict);
    err << "ingest: yielded=" << ingest.summary.yielded << " skipped=" << ingest.summary.skipped
        << " deduplicated=" << ingest.summary.deduplicated << '\n';

    std::size_t unknown_chars = 0;
    std::vector<DomainScore> scores;
    scores.reserve(ingest.domains.size());
    for (const Fqdn& fqdn : ingest.domains) {
      scores.push_back(config.mode == ScoreMode::corpus
                           ? score_corpus(fqdn, model, config.score_prefix_only, &unknown_chars)
                           : score_instring(fqdn, config.score_prefix_only));
    }
    if (unknown_chars > 0) {
      err << "scorer: " << unknown_chars
          << " character occurrences outside the model alphabet (scored at minimum probability)\n";
    }

    const CorpusStats stats = compute_stats(scores, config.sigma_k);
    const Allowlist allowlist =
        config.allowlist_path.empty() ? Allowlist{} : load_allowlist(config.allowlist_path);
    const DetectionReport report = flag_suspects(scores, stats, allowlist);

    write_suspects_csv(report, config.suspects_csv);
    if (!config.all_scores_csv.empty()) write_scores_csv(scores, config.all_scores_csv);
    if (!report.allowlisted.empty()) {
      err << "allowlist: suppressed " << report.allowlisted.size()
          << " above-threshold domain(s)\n";
    }

    out << render_summary(report);
    return report.suspects.empty() ? 0 : 1;
  } catch (const Error& e) {
    err << "dgascan: " << e.what() << '\n';
    return e.code() == errc::usage_error ? 2 : 3;
  } catch (const std::exception& e) {
    err << "dgascan: " << e.what() << '\n';
    return 3;
  }
}

/// Entry point used by the dgascan binary.
inline int cli_main(int argc, const char* const* argv) {
  try {
    const RunConfig config = parse_args(argc, argv);
    return run(config, std::cout, std::cerr);
  } catch (const HelpRequested& help) {
    std::cout << help.text;
    return 0;
  } catch (const Error& e) {
    std::cerr << "dgascan: " << e.what() << '\n';
    return e.code() == errc::usage_error ? 2 : 3;
  }
}

}  // namespace dgascan
