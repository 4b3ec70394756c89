#include "config.hpp"

#include <cstdio>
#include <sstream>
#include <type_traits>

#include "lingbridge/common.hpp"
#include "lingbridge/csv.hpp"

namespace lingbridge::cli {
namespace {

class Canon {
 public:
  void add(const char* key, const std::string& v) { out_ << key << '=' << v << '\n'; }
  void add(const char* key, double v) { add(key, csv::format_double(v)); }
  void add(const char* key, std::uint64_t v) { add(key, std::to_string(v)); }
  void add(const char* key, bool v) { add(key, std::string(v ? "true" : "false")); }
  template <class T>
  void add(const char* key, const std::vector<T>& vs) {
    std::string joined;
    for (std::size_t i = 0; i < vs.size(); ++i) {
      if (i) joined += ',';
      if constexpr (std::is_same_v<T, double>) {
        joined += csv::format_double(vs[i]);
      } else if constexpr (std::is_same_v<T, std::string>) {
        joined += vs[i];
      } else {
        joined += std::to_string(vs[i]);
      }
    }
    add(key, joined);
  }
  std::string str() const { return out_.str(); }

 private:
  std::ostringstream out_;
};

std::uint64_t fnv1a64(const std::string& text) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : text) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

}  // namespace

std::string canonical_config(const RunConfig& c) {
  Canon k;
  k.add("command", c.command);
  k.add("seed", c.seed);
  k.add("mode", c.mode);
  k.add("parallel", c.parallel);
  k.add("db", c.db);
  k.add("eval", c.eval);
  k.add("translated", c.translated);
  k.add("tasks", c.tasks);
  k.add("severity", c.severity);
  k.add("lexicon_en", c.lexicon_en);
  k.add("lexicon_zh", c.lexicon_zh);
  k.add("data", c.data);
  k.add("input", c.input);
  k.add("lang", c.lang);
  k.add("lexicon", c.lexicon);
  k.add("vocab", c.vocab);
  k.add("prune_mask", c.prune_mask);
  k.add("no_prune", c.no_prune);
  k.add("name", c.name);
  k.add("samples", std::uint64_t{c.samples});
  k.add("min_lines", std::uint64_t{c.min_lines});
  k.add("max_lines", std::uint64_t{c.max_lines});
  k.add("alpha_grid", c.alpha_grid);
  k.add("l1_ratio_grid", c.l1_ratio_grid);
  k.add("rank_grid", c.rank_grid);
  k.add("c_grid", c.c_grid);
  k.add("corr_folds", std::uint64_t{c.corr_folds});
  k.add("clf_folds", std::uint64_t{c.clf_folds});
  k.add("k_policy", c.k_policy);
  k.add("k", std::uint64_t{c.k});
  k.add("no_sweep", c.no_sweep);
  k.add("tol", c.tol);
  k.add("max_iter", std::uint64_t{c.max_iter});
  k.add("logistic_tol", c.logistic_tol);
  k.add("logistic_max_iter", std::uint64_t{c.logistic_max_iter});
  k.add("pipeline", c.pipelines);
  k.add("unilingual_folds", std::uint64_t{c.unilingual_folds});
  k.add("sizes", c.sizes);
  k.add("reps", std::uint64_t{c.reps});
  k.add("reference", c.reference);
  const auto& s = c.synth;
  k.add("n_parallel", std::uint64_t{s.n_parallel});
  k.add("src_dim", std::uint64_t{s.src_dim});
  k.add("tgt_dim", std::uint64_t{s.tgt_dim});
  k.add("rank", std::uint64_t{s.true_rank});
  k.add("noise_sigma", s.noise_sigma);
  k.add("noise_fraction", s.noise_fraction);
  k.add("n_eval", std::uint64_t{s.n_eval});
  k.add("n_db", std::uint64_t{s.n_db});
  k.add("n_tasks", std::uint64_t{s.n_tasks});
  k.add("label_gain", s.label_gain);
  k.add("proxy_noise", s.proxy_noise);
  k.add("task_noise", s.task_noise);
  k.add("translation_noise", s.translation_noise);
  return k.str();
}

std::string config_hash(const RunConfig& config) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(fnv1a64(canonical_config(config))));
  return std::string("fnv1a64:") + buf;
}

bridge::PipelineOptions pipeline_options(const RunConfig& c) {
  if (c.alpha_grid.empty() || c.l1_ratio_grid.empty()) throw InputError("alpha_grid and l1_ratio_grid must be non-empty");
  if (c.c_grid.empty()) throw InputError("c_grid must be non-empty");
  bridge::PipelineOptions o;
  o.mode = bridge::parse_pipeline_mode(c.mode);
  o.k_policy = bridge::parse_k_policy(c.k_policy);
  o.k = c.k;
  o.sweep = o.mode == bridge::PipelineMode::jfs && !c.no_sweep;

  o.correspondence.grid.clear();
  for (double l1 : c.l1_ratio_grid) {
    for (double a : c.alpha_grid) o.correspondence.grid.push_back({a, l1});
  }
  o.correspondence.rank_grid = c.rank_grid;
  o.correspondence.k_folds = c.corr_folds;
  o.correspondence.seed = c.seed;
  o.correspondence.control.tol = c.tol;
  o.correspondence.control.max_iter = c.max_iter;
  o.correspondence.jobs = c.jobs;

  o.classifier.c_grid = c.c_grid;
  o.classifier.k_folds = c.clf_folds;
  o.classifier.seed = c.seed;
  o.classifier.control.tol = c.logistic_tol;
  o.classifier.control.max_iter = c.logistic_max_iter;
  o.classifier.jobs = c.jobs;
  return o;
}

}  // namespace lingbridge::cli
