#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "lingbridge/bridge/pipeline.hpp"
#include "lingbridge/corpus/narration.hpp"
#include "lingbridge/eval/dementia_scores.hpp"

namespace lingbridge::eval {

struct AblationRow {
  std::size_t size = 0;
  std::size_t rep = 0;
  std::uint64_t seed = 0;
  /// Missing when the trial's predictions had a degenerate ranking.
  std::optional<double> spearman;
};

struct AblationSummaryRow {
  std::size_t size = 0;
  double mean = 0.0;
  /// Twice the sample standard deviation (0 with fewer than 2 reps).
  double two_std = 0.0;
  std::size_t valid_reps = 0;
};

struct AblationResult {
  std::vector<AblationRow> rows;
  std::vector<AblationSummaryRow> summary;
};

/// One end-to-end run on `size` sampled training items with its own seed.
using AblationTrial = std::function<std::optional<double>(std::size_t size, std::uint64_t seed)>;

/// Seed of rep r at a given size: derive_seed(base_seed, size, r).
std::uint64_t trial_seed(std::uint64_t base_seed, std::size_t size, std::size_t rep);

/// Runs reps trials per size (in parallel up to `jobs`) and summarizes.
AblationResult run_ablation(const std::vector<std::size_t>& sizes, std::size_t reps, std::uint64_t base_seed,
                            std::size_t jobs, const AblationTrial& trial);

AblationSummaryRow summarize(std::size_t size, const std::vector<AblationRow>& rows);

struct AblationOptions {
  std::vector<std::size_t> sizes;
  std::size_t reps = 10;
  std::uint64_t base_seed = 0;
  /// Window length bounds in lines (narration mode).
  std::size_t min_lines = 1;
  std::size_t max_lines = 50;
  bridge::PipelineOptions pipeline;
  std::size_t jobs = 1;
};

/// Pre-extracted inputs; a sample of size s draws s parallel rows with
/// replacement.
struct MatrixCorpus {
  const featx::FeatureMatrix* parallel_source = nullptr;
  const featx::FeatureMatrix* parallel_target = nullptr;
  const featx::FeatureMatrix* db = nullptr;
  const Vector* labels = nullptr;
  const featx::FeatureMatrix* eval_source = nullptr;
  const DementiaScores* scores = nullptr;
};

/// Raw corpora; a sample of size s is s windows of contiguous parallel
/// lines, re-extracted (vocabularies, pruning) per trial.
struct NarrationCorpus {
  const std::vector<corpus::ParallelPair>* parallel = nullptr;
  const std::vector<corpus::LabeledNarration>* db = nullptr;
  const std::vector<corpus::Narration>* eval = nullptr;
  const DementiaScores* scores = nullptr;
  const corpus::FrequencyLexicon* source_lexicon = nullptr;
  const corpus::FrequencyLexicon* target_lexicon = nullptr;
};

AblationResult ablate_sample_size(const MatrixCorpus& corpus, const AblationOptions& options);
AblationResult ablate_sample_size(const NarrationCorpus& corpus, const AblationOptions& options);

/// Reference rows: the same number of reps trained on every parallel row
/// (size = row count, seeds derive_seed(base_seed, 0, rep)).
AblationResult full_corpus_reference(const MatrixCorpus& corpus, const AblationOptions& options);

}  // namespace lingbridge::eval
