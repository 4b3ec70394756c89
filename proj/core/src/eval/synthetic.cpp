#include "lingbridge/eval/synthetic.hpp"

#include <algorithm>
#include <cmath>

#include "lingbridge/rng.hpp"

namespace lingbridge::eval {

namespace {

std::string indexed(const char* prefix, std::size_t i, std::size_t width) {
  std::string digits = std::to_string(i);
  if (digits.size() < width) digits.insert(0, width - digits.size(), '0');
  return prefix + digits;
}

std::vector<std::string> names(const char* prefix, std::size_t n) {
  const std::size_t width = std::to_string(n == 0 ? 0 : n - 1).size();
  std::vector<std::string> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(indexed(prefix, i, width));
  return out;
}

Matrix normal_matrix(Rng& rng, std::size_t rows, std::size_t cols) {
  Matrix m(static_cast<Eigen::Index>(rows), static_cast<Eigen::Index>(cols));
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) m(i, j) = rng.normal();
  }
  return m;
}

double sigmoid(double z) { return 1.0 / (1.0 + std::exp(-z)); }

}  // namespace

void validate(const SyntheticConfig& c) {
  auto fail = [](const std::string& msg) { throw InputError("synthetic config: " + msg); };
  if (c.n_parallel < 2) fail("n_parallel must be >= 2");
  if (c.src_dim < 1) fail("src_dim must be >= 1");
  if (c.tgt_dim < 1) fail("tgt_dim must be >= 1");
  if (!(c.noise_fraction >= 0.0 && c.noise_fraction < 1.0)) fail("noise_fraction must lie in [0, 1)");
  const auto n_noise = static_cast<std::size_t>(std::llround(static_cast<double>(c.tgt_dim) * c.noise_fraction));
  const std::size_t n_clean = c.tgt_dim - std::min(n_noise, c.tgt_dim);
  if (n_clean < 1) fail("noise_fraction leaves no clean target");
  if (c.true_rank < 1 || c.true_rank > std::min(c.src_dim, n_clean)) {
    fail("true_rank must lie in 1..min(src_dim, clean targets) = " + std::to_string(std::min(c.src_dim, n_clean)));
  }
  if (!(c.noise_sigma >= 0.0) || !std::isfinite(c.noise_sigma)) fail("noise_sigma must be finite and >= 0");
  if (c.n_eval < 2) fail("n_eval must be >= 2");
  if (c.n_db < 10) fail("n_db must be >= 10");
  if (c.n_tasks < 1) fail("n_tasks must be >= 1");
  if (!(c.label_gain > 0.0) || !std::isfinite(c.label_gain)) fail("label_gain must be finite and > 0");
  for (double v : {c.proxy_noise, c.task_noise, c.translation_noise}) {
    if (!(v >= 0.0) || !std::isfinite(v)) fail("noise scales must be finite and >= 0");
  }
}

SyntheticBenchmark generate_synthetic_benchmark(const SyntheticConfig& c) {
  validate(c);
  Rng rng(c.seed);
  const std::size_t p = c.src_dim;
  const std::size_t q = c.tgt_dim;
  const auto n_noise = static_cast<std::size_t>(std::llround(static_cast<double>(q) * c.noise_fraction));
  const std::size_t n_clean = q - n_noise;

  Matrix w = normal_matrix(rng, p, c.true_rank) * normal_matrix(rng, c.true_rank, n_clean);
  for (Eigen::Index j = 0; j < w.cols(); ++j) {
    const double norm = w.col(j).norm();
    if (norm > 0) w.col(j) /= norm;
  }
  const auto perm = rng.permutation(q);
  std::vector<std::size_t> clean(perm.begin(), perm.begin() + static_cast<std::ptrdiff_t>(n_clean));
  std::vector<std::size_t> noise(perm.begin() + static_cast<std::ptrdiff_t>(n_clean), perm.end());
  std::sort(clean.begin(), clean.end());
  std::sort(noise.begin(), noise.end());

  Vector u(static_cast<Eigen::Index>(n_clean));
  for (Eigen::Index i = 0; i < u.size(); ++i) u(i) = rng.normal();
  u /= u.norm();
  // x ~ N(0, I) makes x W u exactly N(0, |W u|^2).
  const Vector wu = w * u;
  const double wu_norm = wu.norm();
  if (!(wu_norm > 0)) throw NumericError("synthetic generator: degenerate severity direction");

  const auto src_names = names("src_", p);
  const auto tgt_names = names("tgt_", q);

  // Fills the target-language matrix; noise targets get `noise_fill`.
  auto english = [&](const Matrix& x, double clean_noise, auto&& noise_fill) {
    const Matrix signal = x * w;
    Matrix y(x.rows(), static_cast<Eigen::Index>(q));
    for (Eigen::Index i = 0; i < x.rows(); ++i) {
      for (std::size_t c_idx = 0; c_idx < n_clean; ++c_idx) {
        y(i, static_cast<Eigen::Index>(clean[c_idx])) =
            signal(i, static_cast<Eigen::Index>(c_idx)) + clean_noise * rng.normal();
      }
      for (std::size_t t : noise) y(i, static_cast<Eigen::Index>(t)) = noise_fill(i);
    }
    return y;
  };
  auto frame = [](const char* prefix, std::size_t rows, std::vector<std::string> cols, Matrix values) {
    featx::FeatureMatrix m;
    m.row_ids = names(prefix, rows);
    m.names = std::move(cols);
    m.values = std::move(values);
    return m;
  };

  SyntheticBenchmark b;
  b.mapping = w;
  for (std::size_t t : clean) b.clean_targets.push_back(tgt_names[t]);
  for (std::size_t t : noise) b.noise_targets.push_back(tgt_names[t]);

  // Parallel corpus.
  {
    Matrix x = normal_matrix(rng, c.n_parallel, p);
    Matrix y = english(x, c.noise_sigma, [&](Eigen::Index) { return rng.normal(); });
    b.parallel_source = frame("par_", c.n_parallel, src_names, std::move(x));
    b.parallel_target = frame("par_", c.n_parallel, tgt_names, std::move(y));
  }

  // Labelled target-language set.
  {
    const Matrix x = normal_matrix(rng, c.n_db, p);
    const Vector s_clean = x * wu / wu_norm;
    Vector severity(s_clean.size());
    for (Eigen::Index i = 0; i < severity.size(); ++i) severity(i) = (s_clean(i) + rng.normal()) / std::sqrt(2.0);
    Matrix y = english(x, c.noise_sigma, [&](Eigen::Index i) { return severity(i) + c.proxy_noise * rng.normal(); });
    b.db_labels.resize(severity.size());
    for (Eigen::Index i = 0; i < severity.size(); ++i) {
      b.db_labels(i) = rng.bernoulli(sigmoid(c.label_gain * severity(i))) ? 1.0 : 0.0;
    }
    const double positives = b.db_labels.sum();
    if (positives == 0.0 || positives == static_cast<double>(c.n_db)) {
      throw NumericError("synthetic generator: labelled set drew a single class; try another seed");
    }
    b.db = frame("db_", c.n_db, tgt_names, std::move(y));
  }

  // Evaluation patients.
  {
    Matrix x = normal_matrix(rng, c.n_eval, p);
    b.eval_severity = x * wu / wu_norm;
    b.eval_tasks.patient_ids = names("patient_", c.n_eval);
    b.eval_tasks.task_names = names("task_", c.n_tasks);
    b.eval_tasks.scores.resize(static_cast<Eigen::Index>(c.n_eval), static_cast<Eigen::Index>(c.n_tasks));
    for (Eigen::Index t = 0; t < static_cast<Eigen::Index>(c.n_tasks); ++t) {
      const double offset = 20.0 + 5.0 * static_cast<double>(t);
      const double scale = 2.0 + static_cast<double>(t);
      for (Eigen::Index i = 0; i < b.eval_severity.size(); ++i) {
        b.eval_tasks.scores(i, t) = offset + scale * (-b.eval_severity(i) + c.task_noise * rng.normal());
      }
    }
    Matrix translated = english(x, c.translation_noise, [&](Eigen::Index) { return rng.normal(); });
    b.eval_source = frame("patient_", c.n_eval, src_names, std::move(x));
    b.translated = frame("patient_", c.n_eval, tgt_names, std::move(translated));
  }
  return b;
}

}  // namespace lingbridge::eval
