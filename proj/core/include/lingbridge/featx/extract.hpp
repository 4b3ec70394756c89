#pragma once

#include <string_view>
#include <vector>

#include "lingbridge/corpus/narration.hpp"
#include "lingbridge/featx/cfg.hpp"
#include "lingbridge/featx/feature_matrix.hpp"
#include "lingbridge/featx/registry.hpp"

namespace lingbridge::featx {

/// Number of Unicode scalar values in a UTF-8 string (continuation bytes
/// are not counted).
std::size_t utf8_length(std::string_view text);

/// English inventory in registry order followed by the vocabulary's CFG
/// ratio block. Throws InputError for a non-English narration, a count-mode
/// vocabulary, or a vocabulary wider than the registry's CFG slots.
FeatureVector extract_english(const corpus::Narration& narration, const corpus::FrequencyLexicon& lexicon,
                              const CfgVocabulary& vocab);

/// Mandarin inventory in registry order followed by the CFG count block.
FeatureVector extract_mandarin(const corpus::Narration& narration, const corpus::FrequencyLexicon& lexicon,
                               const CfgVocabulary& vocab);

/// Dispatches on narration.lang.
FeatureVector extract(const corpus::Narration& narration, const corpus::FrequencyLexicon& lexicon,
                      const CfgVocabulary& vocab);

/// Extracts every narration (in parallel, up to `jobs` threads) into one
/// row-aligned matrix whose row ids are the narration ids.
FeatureMatrix extract_all(const std::vector<const corpus::Narration*>& narrations,
                          const corpus::FrequencyLexicon& lexicon, const CfgVocabulary& vocab, std::size_t jobs = 1);
FeatureMatrix extract_all(const std::vector<corpus::Narration>& narrations, const corpus::FrequencyLexicon& lexicon,
                          const CfgVocabulary& vocab, std::size_t jobs = 1);

}  // namespace lingbridge::featx
