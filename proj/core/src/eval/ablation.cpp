#include "lingbridge/eval/ablation.hpp"

#include <cmath>

#include "lingbridge/bridge/frontend.hpp"
#include "lingbridge/corpus/windows.hpp"
#include "lingbridge/eval/spearman.hpp"
#include "lingbridge/rng.hpp"

namespace lingbridge::eval {

std::uint64_t trial_seed(std::uint64_t base_seed, std::size_t size, std::size_t rep) {
  return derive_seed(base_seed, size, rep);
}

AblationSummaryRow summarize(std::size_t size, const std::vector<AblationRow>& rows) {
  AblationSummaryRow s;
  s.size = size;
  std::vector<double> v;
  for (const auto& r : rows) {
    if (r.size == size && r.spearman) v.push_back(*r.spearman);
  }
  s.valid_reps = v.size();
  if (v.empty()) return s;
  double sum = 0;
  for (double x : v) sum += x;
  s.mean = sum / static_cast<double>(v.size());
  if (v.size() >= 2) {
    double ss = 0;
    for (double x : v) ss += (x - s.mean) * (x - s.mean);
    s.two_std = 2.0 * std::sqrt(ss / static_cast<double>(v.size() - 1));
  }
  return s;
}

AblationResult run_ablation(const std::vector<std::size_t>& sizes, std::size_t reps, std::uint64_t base_seed,
                            std::size_t jobs, const AblationTrial& trial) {
  if (sizes.empty()) throw InputError("ablation needs at least one sample size");
  if (reps == 0) throw InputError("ablation needs at least one rep");
  AblationResult out;
  for (std::size_t size : sizes) {
    if (size == 0) throw InputError("ablation sample sizes must be positive");
    for (std::size_t r = 0; r < reps; ++r) out.rows.push_back({size, r, trial_seed(base_seed, size, r), std::nullopt});
  }
  parallel_for(out.rows.size(), jobs, [&](std::size_t i) {
    auto& row = out.rows[i];
    row.spearman = trial(row.size, row.seed);
  });
  for (std::size_t size : sizes) {
    bool seen = false;
    for (const auto& s : out.summary) seen = seen || s.size == size;
    if (!seen) out.summary.push_back(summarize(size, out.rows));
  }
  return out;
}

namespace {

bridge::PipelineOptions seeded(const bridge::PipelineOptions& base, std::uint64_t seed) {
  bridge::PipelineOptions o = base;
  o.correspondence.seed = seed;
  o.classifier.seed = seed;
  o.correspondence.jobs = 1;
  o.classifier.jobs = 1;
  o.sweep = false;
  return o;
}

std::optional<double> score(const bridge::PipelineModel& model, const featx::FeatureMatrix& eval_source,
                            const DementiaScores& scores) {
  try {
    return spearman_rho(bridge::predict_dementia(model, eval_source), scores.aligned(eval_source.row_ids));
  } catch (const DegenerateRankingError&) {
    return std::nullopt;
  }
}

void check(const MatrixCorpus& c) {
  if (!c.parallel_source || !c.parallel_target || !c.db || !c.labels || !c.eval_source || !c.scores) {
    throw InputError("ablation: incomplete feature-matrix corpus");
  }
}

std::optional<double> matrix_trial(const MatrixCorpus& c, const AblationOptions& options,
                                   const std::vector<std::size_t>& rows, std::uint64_t seed) {
  const auto src = c.parallel_source->select_rows(rows);
  const auto tgt = c.parallel_target->select_rows(rows);
  const auto opts = seeded(options.pipeline, seed);
  bridge::EvalSet eval;
  Vector severity;
  if (opts.k_policy == bridge::KPolicy::best_rho) {
    severity = c.scores->aligned(c.eval_source->row_ids);
    eval = {c.eval_source, &severity};
  }
  const auto trained = bridge::train_pipeline(src, tgt, *c.db, *c.labels, opts, eval);
  return score(trained.model, *c.eval_source, *c.scores);
}

}  // namespace

AblationResult ablate_sample_size(const MatrixCorpus& corpus, const AblationOptions& options) {
  check(corpus);
  const std::size_t n = corpus.parallel_source->rows();
  return run_ablation(options.sizes, options.reps, options.base_seed, options.jobs,
                      [&](std::size_t size, std::uint64_t seed) {
                        const auto spans = corpus::sample_window_spans(n, size, 1, 1, seed);
                        std::vector<std::size_t> rows;
                        rows.reserve(spans.size());
                        for (const auto& s : spans) rows.push_back(s.start);
                        return matrix_trial(corpus, options, rows, seed);
                      });
}

AblationResult full_corpus_reference(const MatrixCorpus& corpus, const AblationOptions& options) {
  check(corpus);
  const std::size_t n = corpus.parallel_source->rows();
  std::vector<std::size_t> all(n);
  for (std::size_t i = 0; i < n; ++i) all[i] = i;
  AblationResult out;
  for (std::size_t r = 0; r < options.reps; ++r) out.rows.push_back({n, r, derive_seed(options.base_seed, 0, r), {}});
  parallel_for(out.rows.size(), options.jobs, [&](std::size_t i) {
    out.rows[i].spearman = matrix_trial(corpus, options, all, out.rows[i].seed);
  });
  out.summary.push_back(summarize(n, out.rows));
  return out;
}

AblationResult ablate_sample_size(const NarrationCorpus& corpus, const AblationOptions& options) {
  if (!corpus.parallel || !corpus.db || !corpus.eval || !corpus.scores || !corpus.source_lexicon ||
      !corpus.target_lexicon) {
    throw InputError("ablation: incomplete narration corpus");
  }
  return run_ablation(
      options.sizes, options.reps, options.base_seed, options.jobs, [&](std::size_t size, std::uint64_t seed) {
        const auto windows =
            corpus::sample_windows(*corpus.parallel, size, options.min_lines, options.max_lines, seed);
        const auto extracted =
            bridge::extract_corpus(windows, *corpus.db, *corpus.source_lexicon, *corpus.target_lexicon, 1);
        const auto eval_source =
            bridge::extract_source(extracted.frontend, *corpus.eval, *corpus.source_lexicon, 1);
        const auto opts = seeded(options.pipeline, seed);
        bridge::EvalSet eval;
        Vector severity;
        if (opts.k_policy == bridge::KPolicy::best_rho) {
          severity = corpus.scores->aligned(eval_source.row_ids);
          eval = {&eval_source, &severity};
        }
        auto trained = bridge::train_pipeline(extracted.parallel_source, extracted.parallel_target, extracted.db,
                                              extracted.labels, opts, eval);
        return score(trained.model, eval_source, *corpus.scores);
      });
}

}  // namespace lingbridge::eval
