#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lingbridge/featx/feature_matrix.hpp"
#include "lingbridge/solvers/cv.hpp"
#include "lingbridge/solvers/elasticnet.hpp"
#include "lingbridge/solvers/rrr.hpp"

namespace lingbridge::bridge {

enum class CorrespondenceMode { independent, reduced_rank };
std::string_view to_string(CorrespondenceMode mode);
CorrespondenceMode parse_correspondence_mode(std::string_view text);

/// Regression of one target feature on all source features, in raw
/// (unstandardized) feature units.
struct TargetModel {
  std::string name;
  solvers::LinearModel model;
  /// Coefficient of determination on the training rows.
  double train_r2 = 0.0;
  /// The target was constant in training; the model is intercept-only.
  bool degenerate = false;
  /// Per-target hyperparameter search (independent mode only).
  std::optional<solvers::CvReport> cv;
};

/// Source-language feature vector -> target-language feature vector.
class CorrespondenceModel {
 public:
  CorrespondenceModel() = default;
  /// Independent mode: one model per target, stacked into an affine map.
  CorrespondenceModel(std::vector<std::string> source_names, std::vector<TargetModel> targets);
  /// Reduced-rank mode: the joint map plus per-target views of it.
  CorrespondenceModel(std::vector<std::string> source_names, std::vector<TargetModel> targets, solvers::LinearMap map,
                      std::optional<solvers::CvReport> rank_report);

  CorrespondenceMode mode() const noexcept { return mode_; }
  const std::vector<std::string>& source_names() const noexcept { return source_names_; }
  const std::vector<TargetModel>& targets() const noexcept { return targets_; }
  std::vector<std::string> target_names() const;
  const solvers::LinearMap& map() const noexcept { return map_; }
  const std::optional<solvers::CvReport>& rank_report() const noexcept { return rank_report_; }

  /// Target indices by descending train_r2, ties by name.
  std::vector<std::size_t> ranking() const;
  std::vector<std::string> ranked_target_names() const;

  /// rows x targets. `x` columns must be in source_names order.
  Matrix predict(const Matrix& x) const;
  /// Requires x.names == source_names; throws InputError listing missing
  /// and unexpected names otherwise.
  featx::FeatureVector map_features(const featx::FeatureVector& x) const;
  /// Selects source columns by name (extra columns are ignored).
  featx::FeatureMatrix map_matrix(const featx::FeatureMatrix& x) const;

 private:
  CorrespondenceMode mode_ = CorrespondenceMode::independent;
  std::vector<std::string> source_names_;
  std::vector<TargetModel> targets_;
  solvers::LinearMap map_;
  std::optional<solvers::CvReport> rank_report_;
};

struct CorrespondenceOptions {
  std::vector<solvers::ElasticNetParams> grid = solvers::default_elasticnet_grid();
  /// Empty means 1..min(source, target) dims.
  std::vector<std::size_t> rank_grid;
  std::size_t k_folds = 3;
  std::uint64_t seed = 0;
  solvers::SolverControl control;
  std::size_t jobs = 1;
};

/// One cross-validated ElasticNet per target column. Sources and targets
/// are z-scored for fitting; the stored models are mapped back to raw units.
/// Rows of `source` and `target` are parallel pairs.
CorrespondenceModel train_correspondence(const featx::FeatureMatrix& source, const featx::FeatureMatrix& target,
                                         const CorrespondenceOptions& options = {});

/// Reduced-rank regression on z-scored sources and targets with the rank
/// chosen by cross-validated mean squared error.
CorrespondenceModel train_correspondence_rrr(const featx::FeatureMatrix& source, const featx::FeatureMatrix& target,
                                             const CorrespondenceOptions& options = {});

/// Number of top-ranked targets before the largest drop between
/// consecutive sorted train R^2 values (ties -> smaller K).
std::size_t select_k_by_r2_gap(const CorrespondenceModel& model);

}  // namespace lingbridge::bridge
