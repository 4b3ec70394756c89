#pragma once

#include <vector>

#include "lingbridge/bridge/pipeline.hpp"
#include "lingbridge/corpus/narration.hpp"

namespace lingbridge::bridge {

/// Feature matrices extracted from raw corpora, plus the vocabularies and
/// pruning masks that produced them.
struct ExtractedCorpus {
  featx::FeatureMatrix parallel_source;
  featx::FeatureMatrix parallel_target;
  featx::FeatureMatrix db;
  Vector labels;
  PipelineFrontend frontend;
};

/// Builds CFG vocabularies (registry slot counts) and prunes constant
/// features on the parallel corpus; the labelled target-language set is
/// extracted with the target vocabulary and restricted to the kept columns.
ExtractedCorpus extract_corpus(const std::vector<corpus::ParallelPair>& parallel,
                               const std::vector<corpus::LabeledNarration>& db,
                               const corpus::FrequencyLexicon& source_lexicon,
                               const corpus::FrequencyLexicon& target_lexicon, std::size_t jobs = 1);

/// Source-language narrations through the frontend (extract + prune).
featx::FeatureMatrix extract_source(const PipelineFrontend& frontend, const std::vector<corpus::Narration>& narrations,
                                    const corpus::FrequencyLexicon& lexicon, std::size_t jobs = 1);
/// Target-language narrations (e.g. translations) through the frontend.
featx::FeatureMatrix extract_target(const PipelineFrontend& frontend, const std::vector<corpus::Narration>& narrations,
                                    const corpus::FrequencyLexicon& lexicon, std::size_t jobs = 1);

/// 1 for dementia, 0 for control.
Vector label_vector(const std::vector<corpus::LabeledNarration>& db);

}  // namespace lingbridge::bridge
