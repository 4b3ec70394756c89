#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "lingbridge/featx/feature_matrix.hpp"
#include "lingbridge/solvers/cv.hpp"
#include "lingbridge/solvers/logistic.hpp"
#include "lingbridge/solvers/standardize.hpp"

namespace lingbridge::bridge {

struct ClassifierOptions {
  std::vector<double> c_grid = solvers::default_logistic_grid();
  std::size_t k_folds = 5;
  std::uint64_t seed = 0;
  solvers::LogisticControl control;
  std::size_t jobs = 1;
};

/// L1 logistic dementia classifier over named English features, z-scored
/// with the training-set statistics.
struct DementiaClassifier {
  std::vector<std::string> feature_names;
  solvers::Standardizer standardizer;
  solvers::LogisticModel model;
  solvers::CvReport cv;

  /// Mean held-out accuracy of the selected C.
  double cv_accuracy() const { return cv.mean_scores.at(cv.best_index); }

  /// Columns of `raw` must follow feature_names.
  Vector predict_proba(const Matrix& raw) const;
  /// Selects feature_names from `m` by name.
  Vector predict_proba(const featx::FeatureMatrix& m) const;
  double predict_proba(const featx::FeatureVector& v) const;
};

/// `labels` holds 1 for dementia and 0 for control.
DementiaClassifier train_classifier(const featx::FeatureMatrix& features, const Vector& labels,
                                    const ClassifierOptions& options = {});

}  // namespace lingbridge::bridge
