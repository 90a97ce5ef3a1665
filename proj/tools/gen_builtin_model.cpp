// Regenerates the compiled-in character-probability table from the seed
// corpus:
//
//   gen_builtin_model data/seed_domains.txt include/dgascan/builtin_model_data.hpp
//
// The emitted header is committed; rebuild it whenever the seed list
// changes. Probabilities are printed with 17 significant digits so the
// compiled constants reproduce the generator's doubles bit-for-bit.

#include <fstream>
#include <iostream>
#include <string>

#include "dgascan/detail/format.hpp"
#include "dgascan/freq_model.hpp"
#include "dgascan/ingest.hpp"

int main(int argc, char** argv) {
  if (argc != 3) {
    std::cerr << "usage: gen_builtin_model <seed-domains-file> <output-header>\n";
    return 2;
  }

  try {
    const auto ingest = dgascan::read_plain(argv[1], /*dedupe=*/false);
    if (ingest.summary.skipped > 0) {
      std::cerr << "gen_builtin_model: " << ingest.summary.skipped
                << " seed lines failed validation\n";
      return 1;
    }
    const auto model = dgascan::build_model(ingest.domains, /*epsilon=*/1.0);

    std::ofstream out(argv[2], std::ios::binary);
    if (!out) {
      std::cerr << "gen_builtin_model: cannot write '" << argv[2] << "'\n";
      return 1;
    }

    out << "// Generated by tools/gen_builtin_model from data/seed_domains.txt.\n";
    out << "// Do not edit by hand; rerun the generator instead.\n";
    out << "#pragma once\n\n";
    out << "#include <cstddef>\n\n";
    out << "namespace dgascan::detail {\n\n";
    out << "struct BuiltinModelEntry {\n  char ch;\n  double probability;\n};\n\n";
    out << "inline constexpr double kBuiltinEpsilon = "
        << dgascan::detail::to_string_sig17(model.smoothing_epsilon) << ";\n";
    out << "inline constexpr std::size_t kBuiltinSampleSize = " << model.sample_size << ";\n\n";
    out << "inline constexpr BuiltinModelEntry kBuiltinTable[] = {\n";
    for (const auto& [c, p] : model.probabilities) {
      out << "    {'" << (c == '\'' || c == '\\' ? std::string{'\\', c} : std::string{c})
          << "', " << dgascan::detail::to_string_sig17(p) << "},\n";
    }
    out << "};\n\n";
    out << "}  // namespace dgascan::detail\n";
    out.flush();
    if (!out) {
      std::cerr << "gen_builtin_model: write failed\n";
      return 1;
    }
    std::cout << "wrote " << argv[2] << " (" << model.probabilities.size() << " characters, "
              << model.sample_size << " seed domains)\n";
    return 0;
  } catch (const std::exception& e) {
    std::cerr << "gen_builtin_model: " << e.what() << '\n';
    return 1;
  }
}
