#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "lingbridge/corpus/narration.hpp"
#include "lingbridge/featx/feature_matrix.hpp"

namespace lingbridge::eval {

/// Planted-truth benchmark in feature space.
///
/// Parallel corpus: source rows x ~ N(0, I). "Clean" targets are x W + noise
/// with W of the given rank (unit-norm columns); the remaining targets are
/// pure N(0, 1) noise, i.e. not reconstructable from the source.
///
/// Labelled target-language set: the same clean-target law; a latent
/// severity mixes a direction of the clean targets with an equal share of
/// independent variation, and the noise targets become noisy proxies of
/// that severity. Labels are Bernoulli(sigmoid(label_gain * severity)).
///
/// Evaluation patients: source rows with severity fixed by the clean
/// direction alone, neuropsychological task scores that fall with severity,
/// and "translated" target features (clean targets with translation noise,
/// noise targets random).
struct SyntheticConfig {
  std::size_t n_parallel = 2000;
  std::size_t src_dim = 40;
  std::size_t tgt_dim = 30;
  std::size_t true_rank = 10;
  double noise_sigma = 0.1;
  double noise_fraction = 0.5;
  std::size_t n_eval = 49;
  std::size_t n_db = 551;
  std::size_t n_tasks = 3;
  double label_gain = 3.0;
  double proxy_noise = 0.7;
  double task_noise = 0.3;
  double translation_noise = 1.0;
  std::uint64_t seed = 0;
};

/// Throws InputError describing the first invalid field.
void validate(const SyntheticConfig& config);

struct SyntheticBenchmark {
  featx::FeatureMatrix parallel_source;
  featx::FeatureMatrix parallel_target;
  featx::FeatureMatrix db;
  Vector db_labels;
  featx::FeatureMatrix eval_source;
  corpus::TaskScoreTable eval_tasks;
  /// Planted severity of each evaluation patient (higher = more impaired).
  Vector eval_severity;
  featx::FeatureMatrix translated;
  std::vector<std::string> clean_targets;
  std::vector<std::string> noise_targets;
  Matrix mapping;  // src_dim x clean targets
};

SyntheticBenchmark generate_synthetic_benchmark(const SyntheticConfig& config);

}  // namespace lingbridge::eval
