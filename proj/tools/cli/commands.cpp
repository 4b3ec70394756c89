#include "commands.hpp"

#include <cmath>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iomanip>
#include <optional>
#include <ostream>
#include <set>
#include <sstream>

#include <nlohmann/json.hpp>

#include "io.hpp"
#include "lingbridge/bridge/frontend.hpp"
#include "lingbridge/bridge/serialize.hpp"
#include "lingbridge/common.hpp"
#include "lingbridge/corpus/loaders.hpp"
#include "lingbridge/corpus/windows.hpp"
#include "lingbridge/csv.hpp"
#include "lingbridge/eval/ablation.hpp"
#include "lingbridge/eval/baselines.hpp"
#include "lingbridge/eval/dementia_scores.hpp"
#include "lingbridge/eval/spearman.hpp"
#include "lingbridge/eval/synthetic.hpp"
#include "lingbridge/featx/extract.hpp"
#include "lingbridge/featx/prune.hpp"
#include "lingbridge/featx/registry.hpp"

namespace lingbridge::cli {
namespace fs = std::filesystem;
using corpus::Language;

namespace {

std::string read_text(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open " + path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

corpus::FrequencyLexicon lexicon_at(const std::string& path, const std::string& what) {
  require_file(path, what);
  return corpus::load_lexicon(path);
}

fs::path data_dir(const RunConfig& c) {
  if (c.data.empty()) throw InputError("--data is required");
  if (!fs::is_directory(c.data)) throw InputError("data directory not found: " + c.data);
  return c.data;
}

featx::FeatureMatrix matrix_at(const fs::path& path) {
  require_file(path.string(), "feature matrix");
  return featx::load_feature_csv(path.string());
}

/// Explicit --tasks / --severity first, then eval_tasks.csv or
/// eval_severity.csv inside the data directory.
std::optional<eval::DementiaScores> resolve_scores(const RunConfig& c) {
  if (!c.tasks.empty()) {
    require_file(c.tasks, "task score table");
    return eval::derive_dementia_scores(corpus::load_task_scores(c.tasks));
  }
  if (!c.severity.empty()) {
    require_file(c.severity, "severity table");
    auto [ids, sev] = read_severity(c.severity);
    return eval::scores_from_severity(std::move(ids), std::move(sev));
  }
  if (!c.data.empty()) {
    fs::path tasks = fs::path(c.data) / "eval_tasks.csv";
    fs::path sev = fs::path(c.data) / "eval_severity.csv";
    if (fs::is_regular_file(tasks)) return eval::derive_dementia_scores(corpus::load_task_scores(tasks.string()));
    if (fs::is_regular_file(sev)) {
      auto [ids, s] = read_severity(sev.string());
      return eval::scores_from_severity(std::move(ids), std::move(s));
    }
  }
  return std::nullopt;
}

eval::DementiaScores require_scores(const RunConfig& c) {
  auto s = resolve_scores(c);
  if (!s) throw InputError("no dementia scores: pass --tasks or --severity (or put eval_tasks.csv in --data)");
  return *s;
}

std::string fmt(double v) {
  std::ostringstream s;
  s << std::fixed << std::setprecision(4) << v;
  return s.str();
}

// -- extract ----------------------------------------------------------------

void extract_paired(const RunConfig& c, std::ostream& out) {
  require_file(c.parallel, "parallel corpus");
  require_file(c.db, "labelled corpus");
  auto lex_zh = lexicon_at(c.lexicon_zh, "Mandarin lexicon");
  auto lex_en = lexicon_at(c.lexicon_en, "English lexicon");

  auto lines = corpus::load_parallel(c.parallel);
  auto pairs = c.samples > 0 ? corpus::sample_windows(lines, c.samples, c.min_lines, c.max_lines, c.seed) : lines;
  auto db = corpus::load_labeled_narrations(c.db, Language::en);
  auto ex = bridge::extract_corpus(pairs, db, lex_zh, lex_en, c.jobs);

  OutputDir dir(c);
  dir.write_matrix("parallel_src.csv", ex.parallel_source);
  dir.write_matrix("parallel_tgt.csv", ex.parallel_target);
  dir.write_matrix("db.csv", ex.db);
  dir.write("db_labels.csv", labels_csv(ex.db.row_ids, ex.labels));
  dir.write("vocab_src.json", ex.frontend.source_vocab.to_json());
  dir.write("vocab_tgt.json", ex.frontend.target_vocab.to_json());
  dir.write("prune_src.json", ex.frontend.source_prune.to_json());
  dir.write("prune_tgt.json", ex.frontend.target_prune.to_json());
  out << "parallel: " << ex.parallel_source.rows() << " samples, " << ex.parallel_source.cols() << " source / "
      << ex.parallel_target.cols() << " target features\n";
  out << "db: " << ex.db.rows() << " narrations\n";

  if (!c.eval.empty()) {
    require_file(c.eval, "evaluation corpus");
    auto m = bridge::extract_source(ex.frontend, corpus::load_narrations(c.eval, Language::zh), lex_zh, c.jobs);
    dir.write_matrix("eval_src.csv", m);
    out << "eval: " << m.rows() << " narrations\n";
  }
  if (!c.translated.empty()) {
    require_file(c.translated, "translated corpus");
    auto m = bridge::extract_target(ex.frontend, corpus::load_narrations(c.translated, Language::en), lex_en, c.jobs);
    dir.write_matrix("translated_en.csv", m);
    out << "translated: " << m.rows() << " narrations\n";
  }
}

void extract_single(const RunConfig& c, std::ostream& out) {
  require_file(c.input, "input corpus");
  if (c.lang.empty()) throw InputError("--lang is required with --input");
  auto lang = corpus::parse_language(c.lang);
  auto lexicon = lexicon_at(c.lexicon, "lexicon");
  auto narrations = corpus::load_narrations(c.input, lang);

  const auto& reg = featx::FeatureRegistry::for_language(lang);
  featx::CfgVocabulary vocab;
  if (!c.vocab.empty()) {
    require_file(c.vocab, "CFG vocabulary");
    vocab = featx::CfgVocabulary::from_json(read_text(c.vocab));
  } else {
    vocab = featx::build_cfg_vocab(narrations, reg.cfg_slots(), reg.cfg_mode());
  }
  auto m = featx::extract_all(narrations, lexicon, vocab, c.jobs);

  std::optional<featx::PruneMask> mask;
  if (!c.prune_mask.empty()) {
    require_file(c.prune_mask, "prune mask");
    mask = featx::PruneMask::from_json(read_text(c.prune_mask));
    m = mask->apply(m);
  } else if (!c.no_prune) {
    auto [pruned, fitted] = featx::prune_constant(m);
    m = std::move(pruned);
    mask = std::move(fitted);
  }

  OutputDir dir(c);
  dir.write_matrix(c.name + ".csv", m);
  dir.write(c.name + "_vocab.json", vocab.to_json());
  if (mask) dir.write(c.name + "_prune.json", mask->to_json());
  out << c.name << ": " << m.rows() << " narrations x " << m.cols() << " features\n";
}

// -- train --------------------------------------------------------------------

struct TrainingData {
  featx::FeatureMatrix psrc, ptgt, db;
  Vector labels;
  std::optional<featx::FeatureMatrix> eval_src;
  std::optional<eval::DementiaScores> scores;
  Vector eval_severity;
  std::optional<bridge::PipelineFrontend> frontend;
};

TrainingData load_training(const RunConfig& c) {
  auto dir = data_dir(c);
  TrainingData d;
  d.psrc = matrix_at(dir / "parallel_src.csv");
  d.ptgt = matrix_at(dir / "parallel_tgt.csv");
  if (d.psrc.row_ids != d.ptgt.row_ids) throw InputError("parallel_src.csv and parallel_tgt.csv rows are not aligned");
  d.db = matrix_at(dir / "db.csv");
  require_file((dir / "db_labels.csv").string(), "labels");
  d.labels = read_labels((dir / "db_labels.csv").string(), d.db.row_ids);

  if (fs::is_regular_file(dir / "eval_src.csv")) {
    d.scores = resolve_scores(c);
    if (d.scores) {
      d.eval_src = featx::load_feature_csv((dir / "eval_src.csv").string());
      d.eval_severity = d.scores->aligned(d.eval_src->row_ids);
    }
  }

  const char* parts[] = {"vocab_src.json", "vocab_tgt.json", "prune_src.json", "prune_tgt.json"};
  bool all = true;
  for (const char* p : parts) all = all && fs::is_regular_file(dir / p);
  if (all) {
    bridge::PipelineFrontend f;
    f.source_vocab = featx::CfgVocabulary::from_json(read_text((dir / parts[0]).string()));
    f.target_vocab = featx::CfgVocabulary::from_json(read_text((dir / parts[1]).string()));
    f.source_prune = featx::PruneMask::from_json(read_text((dir / parts[2]).string()));
    f.target_prune = featx::PruneMask::from_json(read_text((dir / parts[3]).string()));
    d.frontend = std::move(f);
  }
  return d;
}

std::string r2_report_csv(const bridge::CorrespondenceModel& corr, const std::vector<std::string>& selected) {
  std::set<std::string> chosen(selected.begin(), selected.end());
  std::ostringstream s;
  csv::write_row(s, {"rank", "feature", "r2", "selected"});
  auto order = corr.ranking();
  for (std::size_t i = 0; i < order.size(); ++i) {
    const auto& t = corr.targets()[order[i]];
    csv::write_row(s, {std::to_string(i + 1), t.name, csv::format_double(t.train_r2),
                       chosen.count(t.name) ? "1" : "0"});
  }
  return s.str();
}

std::string k_sweep_csv(const bridge::KSweepCurve& curve) {
  std::ostringstream s;
  csv::write_row(s, {"k", "db_accuracy", "spearman"});
  for (const auto& p : curve.points) {
    csv::write_row(s, {std::to_string(p.k), csv::format_double(p.db_accuracy),
                       p.spearman ? csv::format_double(*p.spearman) : ""});
  }
  return s.str();
}

std::string rank_selection_csv(const solvers::CvReport& report) {
  std::ostringstream s;
  csv::write_row(s, {"rank", "cv_mse", "selected"});
  for (std::size_t i = 0; i < report.grid.size(); ++i) {
    auto rank = static_cast<std::size_t>(report.grid[i].at("rank"));
    csv::write_row(s, {std::to_string(rank), csv::format_double(report.mean_scores[i]),
                       i == report.best_index ? "1" : "0"});
  }
  return s.str();
}

// -- evaluate -------------------------------------------------------------------

struct LoadedPipeline {
  std::string path;
  bridge::PipelineModel model;
};

std::string model_label(const LoadedPipeline& p, const std::vector<LoadedPipeline>& all) {
  std::string mode(bridge::to_string(p.model.mode));
  std::size_t same = 0;
  for (const auto& q : all) same += q.model.mode == p.model.mode;
  if (same == 1) return mode;
  return mode + ":" + fs::path(p.path).stem().string();
}

// -- ablate -------------------------------------------------------------------

std::string ablation_csv(const eval::AblationResult& r) {
  std::ostringstream s;
  csv::write_row(s, {"size", "rep", "seed", "spearman"});
  for (const auto& row : r.rows) {
    csv::write_row(s, {std::to_string(row.size), std::to_string(row.rep), std::to_string(row.seed),
                       row.spearman ? csv::format_double(*row.spearman) : ""});
  }
  return s.str();
}

std::string summary_csv(const eval::AblationResult& r) {
  std::ostringstream s;
  csv::write_row(s, {"size", "mean", "two_std", "valid_reps"});
  for (const auto& row : r.summary) {
    csv::write_row(s, {std::to_string(row.size), csv::format_double(row.mean), csv::format_double(row.two_std),
                       std::to_string(row.valid_reps)});
  }
  return s.str();
}

void print_summary(std::ostream& out, const char* title, const eval::AblationResult& r) {
  out << title << "\n";
  for (const auto& row : r.summary) {
    out << "  size " << row.size << ": mean rho " << fmt(row.mean) << " +/- " << fmt(row.two_std) << " ("
        << row.valid_reps << " reps)\n";
  }
}

}  // namespace

void cmd_extract(const RunConfig& c, std::ostream& out, std::ostream&) {
  if (!c.parallel.empty()) {
    extract_paired(c, out);
  } else if (!c.input.empty()) {
    extract_single(c, out);
  } else {
    throw InputError("extract needs --parallel (corpus mode) or --input (single-file mode)");
  }
}

void cmd_train(const RunConfig& c, std::ostream& out, std::ostream&) {
  auto options = pipeline_options(c);
  auto d = load_training(c);
  bridge::EvalSet eval;
  if (d.eval_src) eval = {&*d.eval_src, &d.eval_severity};
  auto trained = bridge::train_pipeline(d.psrc, d.ptgt, d.db, d.labels, options, eval);
  auto& model = trained.model;
  model.frontend = d.frontend;

  std::string mode(bridge::to_string(model.mode));
  OutputDir dir(c);
  dir.write("pipeline_" + mode + ".json", bridge::pipeline_to_json(model));
  dir.write("r2_report_" + mode + ".csv", r2_report_csv(model.correspondence, model.selected_targets));
  if (trained.sweep) dir.write("k_sweep.csv", k_sweep_csv(*trained.sweep));
  if (model.mode == bridge::PipelineMode::rrr && model.correspondence.rank_report()) {
    dir.write("rank_selection.csv", rank_selection_csv(*model.correspondence.rank_report()));
  }

  out << "mode " << mode << ": " << model.correspondence.targets().size() << " targets, k = " << model.k;
  if (model.mode == bridge::PipelineMode::jfs) out << " (" << bridge::to_string(model.k_policy) << ")";
  out << "\n";
  if (model.mode == bridge::PipelineMode::rrr) {
    out << "selected rank " << model.correspondence.map().rank_bound << "\n";
  }
  out << "db cv accuracy " << fmt(model.classifier.cv_accuracy()) << "\n";
  if (trained.sweep) {
    if (auto best = trained.sweep->best_k()) out << "best-rho k " << *best << "\n";
  }
}

void cmd_evaluate(const RunConfig& c, std::ostream& out, std::ostream& err) {
  if (c.pipelines.empty()) throw InputError("evaluate needs at least one --pipeline");
  std::vector<LoadedPipeline> pipelines;
  for (const auto& p : c.pipelines) {
    require_file(p, "pipeline");
    pipelines.push_back({p, bridge::load_pipeline(p)});
  }
  auto scores = require_scores(c);
  const auto& first = pipelines.front().model;

  // Source features per pipeline: shared eval_src.csv, or each pipeline's
  // own frontend applied to Mandarin narrations.
  std::optional<corpus::FrequencyLexicon> lex_zh;
  std::optional<std::vector<corpus::Narration>> eval_narrations;
  std::optional<featx::FeatureMatrix> eval_matrix;
  if (!c.eval.empty()) {
    require_file(c.eval, "evaluation corpus");
    lex_zh = lexicon_at(c.lexicon_zh, "Mandarin lexicon");
    eval_narrations = corpus::load_narrations(c.eval, Language::zh);
  } else {
    eval_matrix = matrix_at(data_dir(c) / "eval_src.csv");
  }
  auto source_for = [&](const bridge::PipelineModel& m) {
    if (eval_matrix) return *eval_matrix;
    if (!m.frontend) throw InputError("pipeline has no extraction frontend; evaluate it on eval_src.csv via --data");
    return bridge::extract_source(*m.frontend, *eval_narrations, *lex_zh, c.jobs);
  };

  // A model whose predictions are all equal has no ranking; its row is left
  // empty rather than aborting the whole comparison.
  std::vector<std::pair<std::string, std::optional<double>>> rows;
  auto ranked = [&](const std::string& name, const std::function<double()>& rho) {
    try {
      rows.emplace_back(name, rho());
    } catch (const eval::DegenerateRankingError&) {
      err << "notice: " << name << " predictions are constant; spearman undefined\n";
      rows.emplace_back(name, std::nullopt);
    }
  };
  {
    auto src = source_for(first);
    auto uni = eval::unilingual_baseline(src.values, scores.aligned(src.row_ids), c.unilingual_folds, c.seed);
    rows.emplace_back("unilingual", uni.mean_rho);
  }

  std::optional<featx::FeatureMatrix> translated;
  if (!c.translated.empty()) {
    require_file(c.translated, "translated corpus");
    if (!first.frontend) throw InputError("pipeline has no extraction frontend; pass translated_en.csv via --data");
    auto lex_en = lexicon_at(c.lexicon_en, "English lexicon");
    translated = bridge::extract_target(*first.frontend, corpus::load_narrations(c.translated, Language::en), lex_en,
                                        c.jobs);
  } else if (!c.data.empty() && fs::is_regular_file(fs::path(c.data) / "translated_en.csv")) {
    translated = featx::load_feature_csv((fs::path(c.data) / "translated_en.csv").string());
  }
  if (translated) {
    ranked("translate", [&] { return eval::translate_baseline(first.full_classifier, *translated, scores); });
  } else {
    err << "notice: no translated input; translate baseline omitted\n";
  }

  for (const auto& p : pipelines) {
    auto src = source_for(p.model);
    ranked(model_label(p, pipelines), [&] { return eval::evaluate_pipeline(p.model, src, scores).rho; });
  }

  std::ostringstream s;
  csv::write_row(s, {"model", "spearman"});
  for (const auto& [name, rho] : rows) csv::write_row(s, {name, rho ? csv::format_double(*rho) : ""});
  OutputDir dir(c);
  dir.write("results.csv", s.str());

  out << std::left << std::setw(16) << "model" << std::right << std::setw(10) << "rho" << std::setw(10) << "|rho|"
      << "\n";
  for (const auto& [name, rho] : rows) {
    out << std::left << std::setw(16) << name << std::right << std::setw(10) << (rho ? fmt(*rho) : "n/a")
        << std::setw(10) << (rho ? fmt(std::abs(*rho)) : "n/a") << "\n";
  }
}

void cmd_ablate(const RunConfig& c, std::ostream& out, std::ostream&) {
  if (c.sizes.empty()) throw InputError("sizes must be non-empty");
  eval::AblationOptions options;
  options.sizes = c.sizes;
  options.reps = c.reps;
  options.base_seed = c.seed;
  options.min_lines = c.min_lines;
  options.max_lines = c.max_lines;
  options.pipeline = pipeline_options(c);
  options.jobs = c.jobs;

  eval::AblationResult result;
  std::optional<eval::AblationResult> reference;
  if (!c.parallel.empty()) {
    if (c.reference) throw InputError("--reference is only available with feature matrices (--data)");
    require_file(c.parallel, "parallel corpus");
    require_file(c.db, "labelled corpus");
    require_file(c.eval, "evaluation corpus");
    auto lex_zh = lexicon_at(c.lexicon_zh, "Mandarin lexicon");
    auto lex_en = lexicon_at(c.lexicon_en, "English lexicon");
    auto scores = require_scores(c);
    auto lines = corpus::load_parallel(c.parallel);
    auto db = corpus::load_labeled_narrations(c.db, Language::en);
    auto ev = corpus::load_narrations(c.eval, Language::zh);
    eval::NarrationCorpus corpus{&lines, &db, &ev, &scores, &lex_zh, &lex_en};
    result = eval::ablate_sample_size(corpus, options);
  } else {
    auto dir = data_dir(c);
    auto psrc = matrix_at(dir / "parallel_src.csv");
    auto ptgt = matrix_at(dir / "parallel_tgt.csv");
    if (psrc.row_ids != ptgt.row_ids) throw InputError("parallel_src.csv and parallel_tgt.csv rows are not aligned");
    auto db = matrix_at(dir / "db.csv");
    require_file((dir / "db_labels.csv").string(), "labels");
    Vector labels = read_labels((dir / "db_labels.csv").string(), db.row_ids);
    auto ev = matrix_at(dir / "eval_src.csv");
    auto scores = require_scores(c);
    eval::MatrixCorpus corpus{&psrc, &ptgt, &db, &labels, &ev, &scores};
    result = eval::ablate_sample_size(corpus, options);
    if (c.reference) reference = eval::full_corpus_reference(corpus, options);
  }

  OutputDir dir(c);
  dir.write("ablation.csv", ablation_csv(result));
  dir.write("ablation_summary.csv", summary_csv(result));
  print_summary(out, "sample-size ablation", result);
  if (reference) {
    dir.write("ablation_reference.csv", summary_csv(*reference));
    print_summary(out, "full-corpus reference", *reference);
  }
}

void cmd_synth(const RunConfig& c, std::ostream& out, std::ostream&) {
  auto cfg = c.synth;
  cfg.seed = c.seed;
  auto bench = eval::generate_synthetic_benchmark(cfg);

  OutputDir dir(c);
  dir.write_matrix("parallel_src.csv", bench.parallel_source);
  dir.write_matrix("parallel_tgt.csv", bench.parallel_target);
  dir.write_matrix("db.csv", bench.db);
  dir.write("db_labels.csv", labels_csv(bench.db.row_ids, bench.db_labels));
  dir.write_matrix("eval_src.csv", bench.eval_source);
  dir.write("eval_tasks.csv", task_scores_csv(bench.eval_tasks));
  dir.write("eval_severity.csv", severity_csv(bench.eval_source.row_ids, bench.eval_severity));
  dir.write_matrix("translated_en.csv", bench.translated);

  nlohmann::ordered_json truth = {
      {"clean_targets", bench.clean_targets},
      {"noise_targets", bench.noise_targets},
      {"config",
       {{"n_parallel", cfg.n_parallel},
        {"src_dim", cfg.src_dim},
        {"tgt_dim", cfg.tgt_dim},
        {"true_rank", cfg.true_rank},
        {"noise_sigma", cfg.noise_sigma},
        {"noise_fraction", cfg.noise_fraction},
        {"n_eval", cfg.n_eval},
        {"n_db", cfg.n_db},
        {"n_tasks", cfg.n_tasks},
        {"label_gain", cfg.label_gain},
        {"proxy_noise", cfg.proxy_noise},
        {"task_noise", cfg.task_noise},
        {"translation_noise", cfg.translation_noise},
        {"seed", cfg.seed}}},
  };
  dir.write("truth.json", truth.dump(1) + "\n");
  out << "synthetic benchmark: " << cfg.n_parallel << " parallel rows, " << bench.clean_targets.size() << " clean / "
      << bench.noise_targets.size() << " noise targets, " << cfg.n_db << " labelled, " << cfg.n_eval
      << " evaluation patients\n";
}

}  // namespace lingbridge::cli
