#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lingbridge/bridge/classifier.hpp"
#include "lingbridge/bridge/correspondence.hpp"
#include "lingbridge/corpus/narration.hpp"
#include "lingbridge/featx/cfg.hpp"
#include "lingbridge/featx/prune.hpp"

namespace lingbridge::bridge {

/// plain: ElasticNet correspondence, classifier on every target.
/// rrr:   reduced-rank correspondence, classifier on every target.
/// jfs:   ElasticNet correspondence, classifier on the top-K targets by R^2.
enum class PipelineMode { plain, rrr, jfs };
std::string_view to_string(PipelineMode mode);
PipelineMode parse_pipeline_mode(std::string_view text);

/// How jfs picks K: the largest gap in sorted train R^2, a fixed value, or
/// the best end-to-end Spearman rho on supplied evaluation data.
enum class KPolicy { r2_gap, fixed, best_rho };
std::string_view to_string(KPolicy policy);
KPolicy parse_k_policy(std::string_view text);

/// Extraction state needed to score raw narrations.
struct PipelineFrontend {
  featx::PruneMask source_prune;
  featx::PruneMask target_prune;
  featx::CfgVocabulary source_vocab;
  featx::CfgVocabulary target_vocab;
};

struct PipelineModel {
  PipelineMode mode = PipelineMode::jfs;
  /// Absent for pipelines trained from feature matrices.
  std::optional<PipelineFrontend> frontend;
  CorrespondenceModel correspondence;
  /// Top-k targets by descending train R^2.
  std::vector<std::string> selected_targets;
  /// Trained on the selected targets (columns in correspondence order).
  DementiaClassifier classifier;
  /// Trained on every target; scores translated English directly.
  DementiaClassifier full_classifier;
  std::size_t k = 0;
  KPolicy k_policy = KPolicy::r2_gap;
};

struct Prediction {
  double probability = 0.0;
  /// Every target-language feature predicted by the correspondence.
  featx::FeatureVector mapped;
};

/// `source` may carry extra columns (e.g. unpruned extraction output);
/// the correspondence's source features are picked by name.
Prediction predict_dementia(const PipelineModel& pipeline, const featx::FeatureVector& source);
/// Extracts, prunes, maps and classifies one source-language narration.
/// Requires a pipeline with a frontend.
Prediction predict_dementia(const PipelineModel& pipeline, const corpus::Narration& narration,
                            const corpus::FrequencyLexicon& lexicon);
/// Probability per row of a source feature matrix.
Vector predict_dementia(const PipelineModel& pipeline, const featx::FeatureMatrix& source);

/// Names of the top-k targets by descending R^2 (ties by name).
/// Throws InputError unless 1 <= k <= target count.
std::vector<std::string> top_k_targets(const CorrespondenceModel& corr, std::size_t k);

/// Retrains the classifier on the top-k targets and assembles a jfs pipeline.
/// `db` must contain every target column.
PipelineModel joint_feature_select(const CorrespondenceModel& corr, const featx::FeatureMatrix& db,
                                   const Vector& labels, std::size_t k, const ClassifierOptions& options = {});

struct KSweepPoint {
  std::size_t k = 0;
  double db_accuracy = 0.0;
  /// Missing when no evaluation data was supplied or the ranking was degenerate.
  std::optional<double> spearman;
};

struct KSweepCurve {
  std::vector<KSweepPoint> points;
  /// K with the highest rho (smaller K on ties), if any rho was computed.
  std::optional<std::size_t> best_k() const;
};

/// Evaluation inputs: source features per patient and their severities.
struct EvalSet {
  const featx::FeatureMatrix* source = nullptr;
  const Vector* severity = nullptr;
};

/// Trains one classifier per K in 1..targets (in parallel up to options.jobs).
KSweepCurve sweep_k(const CorrespondenceModel& corr, const featx::FeatureMatrix& db, const Vector& labels,
                    const EvalSet& eval = {}, const ClassifierOptions& options = {});

struct PipelineOptions {
  PipelineMode mode = PipelineMode::jfs;
  CorrespondenceOptions correspondence;
  ClassifierOptions classifier;
  KPolicy k_policy = KPolicy::r2_gap;
  /// Used by KPolicy::fixed.
  std::size_t k = 0;
  /// Compute the K sweep even when the policy does not need it.
  bool sweep = false;
};

struct TrainedPipeline {
  PipelineModel model;
  std::optional<KSweepCurve> sweep;
};

/// Fits the correspondence on parallel source/target matrices, the
/// classifier(s) on the labelled target-language matrix, and chooses K.
/// KPolicy::best_rho requires `eval`.
TrainedPipeline train_pipeline(const featx::FeatureMatrix& parallel_source, const featx::FeatureMatrix& parallel_target,
                               const featx::FeatureMatrix& db, const Vector& labels, const PipelineOptions& options,
                               const EvalSet& eval = {});

}  // namespace lingbridge::bridge
