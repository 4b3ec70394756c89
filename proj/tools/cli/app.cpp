#include "app.hpp"

#include <algorithm>
#include <memory>
#include <ostream>

#include "CLI11.hpp"
#include "commands.hpp"
#include "config.hpp"
#include "lingbridge/common.hpp"

namespace lingbridge::cli {
namespace {

// Config keys may be written n_parallel or n-parallel.
class IniConfig : public CLI::ConfigINI {
 public:
  std::vector<CLI::ConfigItem> from_config(std::istream& input) const override {
    auto items = CLI::ConfigINI::from_config(input);
    for (auto& item : items) std::replace(item.name.begin(), item.name.end(), '_', '-');
    return items;
  }
};

void add_options(CLI::App& app, RunConfig& c) {
  app.set_config("--config", "", "INI-style key = value file; flags override its keys");
  app.config_formatter(std::make_shared<IniConfig>());
  app.allow_config_extras(CLI::config_extras_mode::error);

  auto* g = app.add_option_group("General");
  g->add_option("--seed", c.seed, "Base seed for every random stream")->capture_default_str();
  g->add_option("--jobs", c.jobs, "Worker thread cap")->check(CLI::PositiveNumber)->capture_default_str();
  g->add_option("--mode", c.mode, "Pipeline mode")->check(CLI::IsMember({"plain", "rrr", "jfs"}))->capture_default_str();
  g->add_option("--out", c.out, "Output directory")->capture_default_str();

  auto* in = app.add_option_group("Inputs");
  in->add_option("--parallel", c.parallel, "Parallel corpus JSONL (zh source, en target)");
  in->add_option("--db", c.db, "Labelled English narrations JSONL");
  in->add_option("--eval", c.eval, "Mandarin evaluation narrations JSONL");
  in->add_option("--translated", c.translated, "Translated English evaluation narrations JSONL");
  in->add_option("--tasks", c.tasks, "Task score CSV (patient_id,<task>...)");
  in->add_option("--severity", c.severity, "Severity CSV (patient_id,severity)");
  in->add_option("--lexicon-en", c.lexicon_en, "English frequency lexicon TSV");
  in->add_option("--lexicon-zh", c.lexicon_zh, "Mandarin frequency lexicon TSV");
  in->add_option("--data", c.data, "Directory of feature-matrix CSVs");
  in->add_option("--input", c.input, "Narration JSONL for single-file extraction");
  in->add_option("--lang", c.lang, "Language of --input")->check(CLI::IsMember({"en", "zh"}));
  in->add_option("--lexicon", c.lexicon, "Lexicon for single-file extraction");
  in->add_option("--vocab", c.vocab, "Reuse a CFG vocabulary JSON");
  in->add_option("--prune-mask", c.prune_mask, "Reuse a prune mask JSON");
  in->add_flag("--no-prune", c.no_prune, "Keep constant features");
  in->add_option("--name", c.name, "Output stem for single-file extraction")->capture_default_str();
  in->add_option("--samples", c.samples, "Windows sampled from the parallel corpus (0 = use lines)")
      ->capture_default_str();
  in->add_option("--min-lines", c.min_lines, "Shortest window")->capture_default_str();
  in->add_option("--max-lines", c.max_lines, "Longest window")->capture_default_str();

  auto* tr = app.add_option_group("Training");
  tr->add_option("--alpha-grid", c.alpha_grid, "ElasticNet alpha grid")->delimiter(',')->capture_default_str();
  tr->add_option("--l1-ratio-grid", c.l1_ratio_grid, "ElasticNet l1_ratio grid")->delimiter(',')->capture_default_str();
  tr->add_option("--rank-grid", c.rank_grid, "RRR ranks to search (default: all)")->delimiter(',');
  tr->add_option("--c-grid", c.c_grid, "Logistic C grid")->delimiter(',')->capture_default_str();
  tr->add_option("--corr-folds", c.corr_folds, "Correspondence CV folds")->capture_default_str();
  tr->add_option("--clf-folds", c.clf_folds, "Classifier CV folds")->capture_default_str();
  tr->add_option("--k-policy", c.k_policy, "How jfs picks K")
      ->check(CLI::IsMember({"r2_gap", "fixed", "best_rho"}))
      ->capture_default_str();
  tr->add_option("--k", c.k, "K for --k-policy fixed")->capture_default_str();
  tr->add_flag("--no-sweep", c.no_sweep, "Skip the K sweep in jfs mode");
  tr->add_option("--tol", c.tol, "ElasticNet tolerance")->capture_default_str();
  tr->add_option("--max-iter", c.max_iter, "ElasticNet sweep cap")->capture_default_str();
  tr->add_option("--logistic-tol", c.logistic_tol, "Logistic tolerance")->capture_default_str();
  tr->add_option("--logistic-max-iter", c.logistic_max_iter, "Logistic iteration cap")->capture_default_str();

  auto* ev = app.add_option_group("Evaluation and ablation");
  ev->add_option("--pipeline", c.pipelines, "Pipeline JSON (repeatable or comma separated)")->delimiter(',');
  ev->add_option("--unilingual-folds", c.unilingual_folds, "Folds of the unilingual baseline")->capture_default_str();
  ev->add_option("--sizes", c.sizes, "Ablation sample sizes")->delimiter(',')->capture_default_str();
  ev->add_option("--reps", c.reps, "Repetitions per size")->check(CLI::PositiveNumber)->capture_default_str();
  ev->add_flag("--reference", c.reference, "Also run the full-corpus reference");

  auto& s = c.synth;
  auto* sy = app.add_option_group("Synthetic generator");
  sy->add_option("--n-parallel", s.n_parallel)->capture_default_str();
  sy->add_option("--src-dim", s.src_dim)->capture_default_str();
  sy->add_option("--tgt-dim", s.tgt_dim)->capture_default_str();
  sy->add_option("--rank", s.true_rank, "Rank of the planted map")->capture_default_str();
  sy->add_option("--noise-sigma", s.noise_sigma)->capture_default_str();
  sy->add_option("--noise-fraction", s.noise_fraction, "Share of pure-noise targets")->capture_default_str();
  sy->add_option("--n-eval", s.n_eval)->capture_default_str();
  sy->add_option("--n-db", s.n_db)->capture_default_str();
  sy->add_option("--n-tasks", s.n_tasks)->capture_default_str();
  sy->add_option("--label-gain", s.label_gain)->capture_default_str();
  sy->add_option("--proxy-noise", s.proxy_noise)->capture_default_str();
  sy->add_option("--task-noise", s.task_noise)->capture_default_str();
  sy->add_option("--translation-noise", s.translation_noise)->capture_default_str();
}

using Command = void (*)(const RunConfig&, std::ostream&, std::ostream&);

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  RunConfig config;
  CLI::App app{"Cross-lingual feature transfer for dementia detection"};
  app.name("lingbridge");
  app.require_subcommand(1, 1);
  add_options(app, config);

  const std::pair<const char*, std::pair<const char*, Command>> commands[] = {
      {"extract", {"Extract and prune feature matrices from narration JSONL", cmd_extract}},
      {"train", {"Train a pipeline from feature matrices", cmd_train}},
      {"evaluate", {"Score pipelines and baselines against dementia severity", cmd_evaluate}},
      {"ablate", {"Parallel-corpus sample-size ablation", cmd_ablate}},
      {"synth", {"Write a synthetic benchmark in feature-matrix form", cmd_synth}},
  };
  for (const auto& [name, spec] : commands) app.add_subcommand(name, spec.first)->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? 0 : 1;
  }

  try {
    for (const auto& [name, spec] : commands) {
      if (app.got_subcommand(name)) {
        config.command = name;
        spec.second(config, out, err);
      }
    }
    return 0;
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace lingbridge::cli
