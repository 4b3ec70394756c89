#include "lingbridge/bridge/classifier.hpp"

namespace lingbridge::bridge {

Vector DementiaClassifier::predict_proba(const Matrix& raw) const {
  return model.predict_proba(standardizer.apply(raw));
}

Vector DementiaClassifier::predict_proba(const featx::FeatureMatrix& m) const {
  if (m.names == feature_names) return predict_proba(m.values);
  return predict_proba(m.select_columns(feature_names).values);
}

double DementiaClassifier::predict_proba(const featx::FeatureVector& v) const {
  Vector raw(static_cast<Eigen::Index>(feature_names.size()));
  for (std::size_t i = 0; i < feature_names.size(); ++i) raw(static_cast<Eigen::Index>(i)) = v.at(feature_names[i]);
  return model.predict_proba_one(standardizer.apply_row(raw));
}

DementiaClassifier train_classifier(const featx::FeatureMatrix& features, const Vector& labels,
                                    const ClassifierOptions& options) {
  if (features.rows() != static_cast<std::size_t>(labels.size())) {
    throw InputError("classifier: " + std::to_string(features.rows()) + " feature rows but " +
                     std::to_string(labels.size()) + " labels");
  }
  if (features.cols() == 0) throw InputError("classifier: no features");
  DementiaClassifier c;
  c.feature_names = features.names;
  c.standardizer = solvers::Standardizer::fit(features.values);
  const Matrix z = c.standardizer.apply(features.values);
  auto fitted = solvers::cv_logistic(z, labels, options.c_grid, options.k_folds, options.seed, options.control,
                                     options.jobs);
  c.model = std::move(fitted.model);
  c.cv = std::move(fitted.report);
  return c;
}

}  // namespace lingbridge::bridge
