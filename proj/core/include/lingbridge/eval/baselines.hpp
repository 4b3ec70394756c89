#pragma once

#include <cstdint>
#include <vector>

#include "lingbridge/bridge/pipeline.hpp"
#include "lingbridge/eval/dementia_scores.hpp"
#include "lingbridge/featx/feature_matrix.hpp"

namespace lingbridge::eval {

struct UnilingualResult {
  double mean_rho = 0.0;
  std::vector<double> fold_rho;
};

/// Ridge-stabilized (1e-6) least squares from source features to
/// severity, scored by Spearman rho on each held-out fold; returns the mean
/// over folds. Throws InputError when a fold has fewer than 2 rows.
UnilingualResult unilingual_baseline(const Matrix& x, const Vector& severity, std::size_t folds = 5,
                                     std::uint64_t seed = 0, double ridge = 1e-6);

/// Spearman rho between the classifier's dementia probability on
/// target-language features (e.g. from translations) and severity.
double translate_baseline(const bridge::DementiaClassifier& classifier, const featx::FeatureMatrix& translated,
                          const DementiaScores& scores);

struct PipelineEvaluation {
  double rho = 0.0;
  std::vector<std::string> patient_ids;
  Vector probabilities;
};

/// Scores every row of `source` (row ids = patient ids) with the pipeline.
/// Throws InputError naming a patient without a score.
PipelineEvaluation evaluate_pipeline(const bridge::PipelineModel& pipeline, const featx::FeatureMatrix& source,
                                     const DementiaScores& scores);

}  // namespace lingbridge::eval
