#include "lingbridge/bridge/pipeline.hpp"

#include <unordered_set>

#include "lingbridge/eval/spearman.hpp"
#include "lingbridge/featx/extract.hpp"

namespace lingbridge::bridge {

std::string_view to_string(PipelineMode mode) {
  switch (mode) {
    case PipelineMode::plain: return "plain";
    case PipelineMode::rrr: return "rrr";
    case PipelineMode::jfs: return "jfs";
  }
  return "jfs";
}

PipelineMode parse_pipeline_mode(std::string_view text) {
  if (text == "plain") return PipelineMode::plain;
  if (text == "rrr") return PipelineMode::rrr;
  if (text == "jfs") return PipelineMode::jfs;
  throw InputError("unknown mode '" + std::string(text) + "' (expected plain, rrr or jfs)");
}

std::string_view to_string(KPolicy policy) {
  switch (policy) {
    case KPolicy::r2_gap: return "r2_gap";
    case KPolicy::fixed: return "fixed";
    case KPolicy::best_rho: return "best_rho";
  }
  return "r2_gap";
}

KPolicy parse_k_policy(std::string_view text) {
  if (text == "r2_gap") return KPolicy::r2_gap;
  if (text == "fixed") return KPolicy::fixed;
  if (text == "best_rho") return KPolicy::best_rho;
  throw InputError("unknown K policy '" + std::string(text) + "' (expected r2_gap, fixed or best_rho)");
}

namespace {

featx::FeatureVector pick(const featx::FeatureVector& v, const std::vector<std::string>& names) {
  if (v.names == names) return v;
  featx::FeatureVector out;
  std::string missing;
  for (const auto& n : names) {
    const auto idx = v.index_of(n);
    if (!idx) {
      missing += (missing.empty() ? "" : ", ") + n;
      continue;
    }
    out.push(n, v.values[*idx]);
  }
  if (!missing.empty()) throw InputError("source features missing: [" + missing + "]");
  return out;
}

/// Selected names in correspondence order, so K = all reproduces the
/// unselected classifier exactly.
std::vector<std::string> in_target_order(const CorrespondenceModel& corr, const std::vector<std::string>& selected) {
  const std::unordered_set<std::string> keep(selected.begin(), selected.end());
  std::vector<std::string> out;
  for (const auto& t : corr.targets()) {
    if (keep.contains(t.name)) out.push_back(t.name);
  }
  return out;
}

}  // namespace

Prediction predict_dementia(const PipelineModel& pipeline, const featx::FeatureVector& source) {
  Prediction p;
  p.mapped = pipeline.correspondence.map_features(pick(source, pipeline.correspondence.source_names()));
  p.probability = pipeline.classifier.predict_proba(p.mapped);
  return p;
}

Prediction predict_dementia(const PipelineModel& pipeline, const corpus::Narration& narration,
                            const corpus::FrequencyLexicon& lexicon) {
  if (!pipeline.frontend) {
    throw InputError("pipeline was trained from feature matrices and cannot score raw narrations");
  }
  const auto features = featx::extract(narration, lexicon, pipeline.frontend->source_vocab);
  return predict_dementia(pipeline, features);
}

Vector predict_dementia(const PipelineModel& pipeline, const featx::FeatureMatrix& source) {
  const auto mapped = pipeline.correspondence.map_matrix(source);
  return pipeline.classifier.predict_proba(mapped);
}

std::vector<std::string> top_k_targets(const CorrespondenceModel& corr, std::size_t k) {
  const std::size_t m = corr.targets().size();
  if (k < 1 || k > m) {
    throw InputError("K = " + std::to_string(k) + " is outside 1.." + std::to_string(m));
  }
  auto ranked = corr.ranked_target_names();
  ranked.resize(k);
  return ranked;
}

PipelineModel joint_feature_select(const CorrespondenceModel& corr, const featx::FeatureMatrix& db,
                                   const Vector& labels, std::size_t k, const ClassifierOptions& options) {
  PipelineModel p;
  p.mode = PipelineMode::jfs;
  p.correspondence = corr;
  p.selected_targets = top_k_targets(corr, k);
  p.k = k;
  p.k_policy = KPolicy::fixed;
  p.classifier = train_classifier(db.select_columns(in_target_order(corr, p.selected_targets)), labels, options);
  p.full_classifier = k == corr.targets().size()
                          ? p.classifier
                          : train_classifier(db.select_columns(corr.target_names()), labels, options);
  return p;
}

std::optional<std::size_t> KSweepCurve::best_k() const {
  std::optional<std::size_t> best;
  double best_rho = 0.0;
  for (const auto& pt : points) {
    if (!pt.spearman) continue;
    if (!best || *pt.spearman > best_rho) {
      best = pt.k;
      best_rho = *pt.spearman;
    }
  }
  return best;
}

KSweepCurve sweep_k(const CorrespondenceModel& corr, const featx::FeatureMatrix& db, const Vector& labels,
                    const EvalSet& eval, const ClassifierOptions& options) {
  const std::size_t m = corr.targets().size();
  const bool with_eval = eval.source != nullptr && eval.severity != nullptr;
  featx::FeatureMatrix mapped;
  if (with_eval) {
    if (eval.source->rows() != static_cast<std::size_t>(eval.severity->size())) {
      throw InputError("evaluation set has " + std::to_string(eval.source->rows()) + " rows but " +
                       std::to_string(eval.severity->size()) + " severities");
    }
    mapped = corr.map_matrix(*eval.source);
  }
  const auto ranked = corr.ranked_target_names();
  ClassifierOptions inner = options;
  inner.jobs = 1;

  KSweepCurve curve;
  curve.points.resize(m);
  parallel_for(m, options.jobs, [&](std::size_t i) {
    const std::size_t k = i + 1;
    const std::vector<std::string> top(ranked.begin(), ranked.begin() + static_cast<std::ptrdiff_t>(k));
    const auto clf = train_classifier(db.select_columns(in_target_order(corr, top)), labels, inner);
    KSweepPoint& pt = curve.points[i];
    pt.k = k;
    pt.db_accuracy = clf.cv_accuracy();
    if (with_eval) {
      try {
        pt.spearman = eval::spearman_rho(clf.predict_proba(mapped), *eval.severity);
      } catch (const eval::DegenerateRankingError&) {
        pt.spearman.reset();
      }
    }
  });
  return curve;
}

TrainedPipeline train_pipeline(const featx::FeatureMatrix& parallel_source, const featx::FeatureMatrix& parallel_target,
                               const featx::FeatureMatrix& db, const Vector& labels, const PipelineOptions& options,
                               const EvalSet& eval) {
  TrainedPipeline out;
  PipelineModel& p = out.model;
  p.mode = options.mode;
  p.correspondence = options.mode == PipelineMode::rrr
                         ? train_correspondence_rrr(parallel_source, parallel_target, options.correspondence)
                         : train_correspondence(parallel_source, parallel_target, options.correspondence);
  const auto all_targets = p.correspondence.target_names();
  const featx::FeatureMatrix db_targets = db.select_columns(all_targets);
  p.full_classifier = train_classifier(db_targets, labels, options.classifier);

  const std::size_t m = all_targets.size();
  if (options.mode != PipelineMode::jfs) {
    p.k = m;
    p.k_policy = KPolicy::fixed;
    p.selected_targets = p.correspondence.ranked_target_names();
    p.classifier = p.full_classifier;
    return out;
  }

  const bool need_sweep = options.sweep || options.k_policy == KPolicy::best_rho;
  if (options.k_policy == KPolicy::best_rho && (eval.source == nullptr || eval.severity == nullptr)) {
    throw InputError("K policy best_rho needs evaluation features and severities");
  }
  if (need_sweep) out.sweep = sweep_k(p.correspondence, db_targets, labels, eval, options.classifier);

  std::size_t k = 0;
  switch (options.k_policy) {
    case KPolicy::r2_gap: k = select_k_by_r2_gap(p.correspondence); break;
    case KPolicy::fixed: k = options.k; break;
    case KPolicy::best_rho: {
      const auto best = out.sweep->best_k();
      if (!best) throw NumericError("every K produced a degenerate ranking on the evaluation set");
      k = *best;
      break;
    }
  }
  p.k = k;
  p.k_policy = options.k_policy;
  p.selected_targets = top_k_targets(p.correspondence, k);
  p.classifier = k == m ? p.full_classifier
                        : train_classifier(db_targets.select_columns(in_target_order(p.correspondence, p.selected_targets)),
                                           labels, options.classifier);
  return out;
}

}  // namespace lingbridge::bridge
