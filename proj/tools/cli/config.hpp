#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "lingbridge/bridge/pipeline.hpp"
#include "lingbridge/eval/synthetic.hpp"

namespace lingbridge::cli {

/// Every knob of every subcommand. Defaults here are the documented
/// defaults; a config file overrides them and flags override the file.
struct RunConfig {
  std::string command;

  std::uint64_t seed = 0;
  std::size_t jobs = 1;
  std::string mode = "jfs";
  std::string out = "out";

  // corpora and lexicons
  std::string parallel;
  std::string db;
  std::string eval;
  std::string translated;
  std::string tasks;
  std::string severity;
  std::string lexicon_en;
  std::string lexicon_zh;
  std::string data;

  // single-file extraction
  std::string input;
  std::string lang;
  std::string lexicon;
  std::string vocab;
  std::string prune_mask;
  bool no_prune = false;
  std::string name = "features";

  // window sampling over the parallel corpus (0 samples = use lines as-is)
  std::size_t samples = 50000;
  std::size_t min_lines = 1;
  std::size_t max_lines = 50;

  // training
  std::vector<double> alpha_grid{1e-4, 1e-3, 1e-2, 1e-1, 1.0, 10.0};
  std::vector<double> l1_ratio_grid{0.1, 0.5, 0.9, 1.0};
  std::vector<std::size_t> rank_grid;
  std::vector<double> c_grid{1.0, 10.0, 100.0, 1000.0};
  std::size_t corr_folds = 3;
  std::size_t clf_folds = 5;
  std::string k_policy = "r2_gap";
  std::size_t k = 0;
  bool no_sweep = false;
  double tol = 1e-7;
  std::size_t max_iter = 10000;
  double logistic_tol = 1e-6;
  std::size_t logistic_max_iter = 20000;

  // evaluation
  std::vector<std::string> pipelines;
  std::size_t unilingual_folds = 5;

  // ablation
  std::vector<std::size_t> sizes{10, 100, 1000, 10000, 50000};
  std::size_t reps = 10;
  bool reference = false;

  // synthetic generator
  eval::SyntheticConfig synth;
};

/// Stable `key=value` lines over every field that can change outputs
/// (`jobs` and `out` are excluded).
std::string canonical_config(const RunConfig& config);
/// "fnv1a64:<16 hex digits>" of canonical_config.
std::string config_hash(const RunConfig& config);

/// Pipeline training options implied by the config.
bridge::PipelineOptions pipeline_options(const RunConfig& config);

}  // namespace lingbridge::cli
