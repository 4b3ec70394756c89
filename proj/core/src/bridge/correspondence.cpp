#include "lingbridge/bridge/correspondence.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_map>
#include <unordered_set>

#include "lingbridge/solvers/metrics.hpp"
#include "lingbridge/solvers/standardize.hpp"

namespace lingbridge::bridge {

std::string_view to_string(CorrespondenceMode mode) {
  return mode == CorrespondenceMode::independent ? "independent" : "reduced_rank";
}

CorrespondenceMode parse_correspondence_mode(std::string_view text) {
  if (text == "independent") return CorrespondenceMode::independent;
  if (text == "reduced_rank") return CorrespondenceMode::reduced_rank;
  throw InputError("unknown correspondence mode '" + std::string(text) + "'");
}

CorrespondenceModel::CorrespondenceModel(std::vector<std::string> source_names, std::vector<TargetModel> targets)
    : mode_(CorrespondenceMode::independent), source_names_(std::move(source_names)), targets_(std::move(targets)) {
  const auto p = static_cast<Eigen::Index>(source_names_.size());
  const auto q = static_cast<Eigen::Index>(targets_.size());
  map_.coefficients.resize(p, q);
  map_.intercepts.resize(q);
  for (Eigen::Index t = 0; t < q; ++t) {
    const auto& m = targets_[static_cast<std::size_t>(t)].model;
    if (m.weights.size() != p) throw InputError("target model '" + targets_[static_cast<std::size_t>(t)].name +
                                                "' has the wrong number of weights");
    map_.coefficients.col(t) = m.weights;
    map_.intercepts(t) = m.intercept;
  }
  map_.rank_bound = static_cast<std::size_t>(std::min(p, q));
}

CorrespondenceModel::CorrespondenceModel(std::vector<std::string> source_names, std::vector<TargetModel> targets,
                                         solvers::LinearMap map, std::optional<solvers::CvReport> rank_report)
    : mode_(CorrespondenceMode::reduced_rank),
      source_names_(std::move(source_names)),
      targets_(std::move(targets)),
      map_(std::move(map)),
      rank_report_(std::move(rank_report)) {
  if (map_.coefficients.rows() != static_cast<Eigen::Index>(source_names_.size()) ||
      map_.coefficients.cols() != static_cast<Eigen::Index>(targets_.size())) {
    throw InputError("reduced-rank map shape does not match the feature names");
  }
}

std::vector<std::string> CorrespondenceModel::target_names() const {
  std::vector<std::string> out;
  out.reserve(targets_.size());
  for (const auto& t : targets_) out.push_back(t.name);
  return out;
}

std::vector<std::size_t> CorrespondenceModel::ranking() const {
  std::vector<std::size_t> order(targets_.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (targets_[a].train_r2 != targets_[b].train_r2) return targets_[a].train_r2 > targets_[b].train_r2;
    return targets_[a].name < targets_[b].name;
  });
  return order;
}

std::vector<std::string> CorrespondenceModel::ranked_target_names() const {
  std::vector<std::string> out;
  for (std::size_t i : ranking()) out.push_back(targets_[i].name);
  return out;
}

Matrix CorrespondenceModel::predict(const Matrix& x) const { return map_.apply(x); }

featx::FeatureVector CorrespondenceModel::map_features(const featx::FeatureVector& x) const {
  if (x.names != source_names_) {
    std::unordered_set<std::string> have(x.names.begin(), x.names.end());
    std::unordered_set<std::string> want(source_names_.begin(), source_names_.end());
    std::string missing;
    std::string extra;
    for (const auto& n : source_names_) {
      if (!have.contains(n)) missing += (missing.empty() ? "" : ", ") + n;
    }
    for (const auto& n : x.names) {
      if (!want.contains(n)) extra += (extra.empty() ? "" : ", ") + n;
    }
    if (missing.empty() && extra.empty()) {
      throw InputError("source features are in a different order than the correspondence model expects");
    }
    throw InputError("source feature mismatch; missing: [" + missing + "] unexpected: [" + extra + "]");
  }
  const Vector in = x.as_vector();
  const Vector out = map_.coefficients.transpose() * in + map_.intercepts;
  featx::FeatureVector v;
  for (std::size_t t = 0; t < targets_.size(); ++t) v.push(targets_[t].name, out(static_cast<Eigen::Index>(t)));
  return v;
}

featx::FeatureMatrix CorrespondenceModel::map_matrix(const featx::FeatureMatrix& x) const {
  const featx::FeatureMatrix src = x.names == source_names_ ? x : x.select_columns(source_names_);
  featx::FeatureMatrix out;
  out.row_ids = src.row_ids;
  out.names = target_names();
  out.values = predict(src.values);
  return out;
}

namespace {

void check_training_inputs(const featx::FeatureMatrix& source, const featx::FeatureMatrix& target) {
  if (source.rows() != target.rows()) {
    throw InputError("parallel corpus sides differ in length: " + std::to_string(source.rows()) + " source rows vs " +
                     std::to_string(target.rows()) + " target rows");
  }
  if (source.cols() == 0 || target.cols() == 0) throw InputError("correspondence needs at least one feature per side");
  if (source.rows() < 2) throw InputError("correspondence needs at least 2 parallel pairs");
}

/// Raw-unit weights of a model fitted on z-scored inputs and response.
solvers::LinearModel to_raw_units(const solvers::LinearModel& z_model, const solvers::Standardizer& xs, double y_mean,
                                  double y_std) {
  solvers::LinearModel raw = z_model;
  raw.weights = z_model.weights.cwiseQuotient(xs.stds) * y_std;
  raw.intercept = y_mean + y_std * z_model.intercept - raw.weights.dot(xs.means);
  raw.objective_trace.clear();
  return raw;
}

}  // namespace

CorrespondenceModel train_correspondence(const featx::FeatureMatrix& source, const featx::FeatureMatrix& target,
                                         const CorrespondenceOptions& options) {
  check_training_inputs(source, target);
  const auto [zx, xs] = solvers::standardize(source.values);
  const auto ys = solvers::Standardizer::fit(target.values);
  const Matrix zy = ys.apply(target.values);
  const solvers::ElasticNetCv cv(zx, options.k_folds, options.seed);

  std::vector<TargetModel> models(target.cols());
  parallel_for(target.cols(), options.jobs, [&](std::size_t t) {
    const auto ti = static_cast<Eigen::Index>(t);
    TargetModel& tm = models[t];
    tm.name = target.names[t];
    if (ys.constant[t]) {
      tm.degenerate = true;
      tm.model.weights = Vector::Zero(source.values.cols());
      tm.model.intercept = ys.means(ti);
      tm.model.params = {0.0, 0.0};
      tm.train_r2 = 0.0;
      return;
    }
    auto fitted = cv.fit(zy.col(ti), options.grid, options.control);
    tm.model = to_raw_units(fitted.model, xs, ys.means(ti), ys.stds(ti));
    tm.cv = std::move(fitted.report);
    tm.train_r2 = solvers::r2_score(target.values.col(ti), tm.model.predict(source.values));
  });
  return CorrespondenceModel(source.names, std::move(models));
}

CorrespondenceModel train_correspondence_rrr(const featx::FeatureMatrix& source, const featx::FeatureMatrix& target,
                                             const CorrespondenceOptions& options) {
  check_training_inputs(source, target);
  const auto [zx, xs] = solvers::standardize(source.values);
  const auto ys = solvers::Standardizer::fit(target.values);
  const Matrix zy = ys.apply(target.values);

  std::vector<std::size_t> ranks = options.rank_grid;
  if (ranks.empty()) {
    const std::size_t max_rank = std::min(source.cols(), target.cols());
    for (std::size_t r = 1; r <= max_rank; ++r) ranks.push_back(r);
  }
  auto fitted = solvers::cv_rrr(zx, zy, ranks, options.k_folds, options.seed);

  // Back to raw units: B_raw = diag(1/sx) B diag(sy).
  solvers::LinearMap raw;
  raw.rank_bound = fitted.map.rank_bound;
  raw.rank_clamped = fitted.map.rank_clamped;
  raw.coefficients = xs.stds.cwiseInverse().asDiagonal() * fitted.map.coefficients * ys.stds.asDiagonal();
  raw.intercepts = ys.means + ys.stds.cwiseProduct(fitted.map.intercepts) - raw.coefficients.transpose() * xs.means;

  const Matrix pred = raw.apply(source.values);
  std::vector<TargetModel> models(target.cols());
  for (std::size_t t = 0; t < target.cols(); ++t) {
    const auto ti = static_cast<Eigen::Index>(t);
    TargetModel& tm = models[t];
    tm.name = target.names[t];
    tm.degenerate = ys.constant[t];
    tm.model.weights = raw.coefficients.col(ti);
    tm.model.intercept = raw.intercepts(ti);
    tm.model.params = {0.0, 0.0};
    tm.train_r2 = solvers::r2_score(target.values.col(ti), pred.col(ti));
  }
  return CorrespondenceModel(source.names, std::move(models), std::move(raw), std::move(fitted.report));
}

std::size_t select_k_by_r2_gap(const CorrespondenceModel& model) {
  const auto order = model.ranking();
  if (order.size() <= 1) return order.size();
  std::size_t best_k = 1;
  double best_gap = -1.0;
  for (std::size_t i = 0; i + 1 < order.size(); ++i) {
    const double gap = model.targets()[order[i]].train_r2 - model.targets()[order[i + 1]].train_r2;
    if (gap > best_gap) {
      best_gap = gap;
      best_k = i + 1;
    }
  }
  return best_k;
}

}  // namespace lingbridge::bridge
