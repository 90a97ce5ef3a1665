#pragma once

#include "dgascan/builtin_model_data.hpp"
#include "dgascan/freq_model.hpp"

namespace dgascan {

/// Returns the compiled-in character-probability model, so the scanner runs
/// with zero external files. The table is generated from the committed seed
/// corpus (data/seed_domains.txt, add-one smoothing) by
/// tools/gen_builtin_model; see that tool for regeneration.
inline CharFrequencyModel builtin_model() {
  CharFrequencyModel model;
  model.source = ModelSource::builtin;
  model.smoothing_epsilon = detail::kBuiltinEpsilon;
  model.sample_size = detail::kBuiltinSampleSize;
  for (const auto& entry : detail::kBuiltinTable) {
    model.probabilities.emplace(entry.ch, entry.probability);
  }
  return model;
}

}  // namespace dgascan
