#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "lingbridge/common.hpp"
#include "lingbridge/solvers/elasticnet.hpp"
#include "lingbridge/solvers/logistic.hpp"
#include "lingbridge/solvers/rrr.hpp"

namespace lingbridge::solvers {

enum class CvMetric { mse, accuracy };
std::string_view to_string(CvMetric metric);
CvMetric parse_cv_metric(std::string_view text);

/// Fold id of every row: rows are shuffled with `seed` and dealt out
/// round-robin, so fold sizes differ by at most one.
/// Throws InputError unless 2 <= k <= n.
std::vector<std::size_t> assign_folds(std::size_t n, std::size_t k, std::uint64_t seed);

/// Row indices inside (or outside) fold `f`.
std::vector<std::size_t> fold_rows(const std::vector<std::size_t>& folds, std::size_t f, bool inside);

using GridPoint = std::map<std::string, double>;

struct CvReport {
  CvMetric metric = CvMetric::mse;
  std::size_t k_folds = 0;
  std::uint64_t seed = 0;
  std::vector<GridPoint> grid;
  /// grid point x fold.
  std::vector<std::vector<double>> fold_scores;
  std::vector<double> mean_scores;
  std::size_t best_index = 0;

  const GridPoint& best() const { return grid.at(best_index); }
};

/// Scores every grid point on every fold. `score_fold(train, test)` returns
/// one score per grid point. The winner has the lowest MSE or highest
/// accuracy; `prefer(a, b)` breaks exact ties (true when a should win),
/// falling back to the earlier index.
CvReport cv_grid_search(std::size_t n_rows, std::vector<GridPoint> grid, std::size_t k_folds, std::uint64_t seed,
                        CvMetric metric,
                        const std::function<std::vector<double>(const std::vector<std::size_t>& train,
                                                                const std::vector<std::size_t>& test)>& score_fold,
                        const std::function<bool(std::size_t, std::size_t)>& prefer = {});

struct ElasticNetCvResult {
  LinearModel model;
  CvReport report;
};

/// Per-fold Gram matrices for one design, shared by every response fitted
/// against it. Ties go to the larger alpha.
class ElasticNetCv {
 public:
  ElasticNetCv(const Matrix& x, std::size_t k_folds, std::uint64_t seed);

  ElasticNetCvResult fit(const Vector& y, const std::vector<ElasticNetParams>& grid,
                         const SolverControl& control = {}) const;
  const std::vector<std::size_t>& folds() const noexcept { return folds_; }

 private:
  std::size_t k_folds_;
  std::uint64_t seed_;
  std::vector<std::size_t> folds_;
  std::vector<std::vector<std::size_t>> train_rows_;
  std::vector<std::vector<std::size_t>> test_rows_;
  std::vector<ElasticNetProblem> fold_problems_;
  std::vector<Matrix> test_x_;
  ElasticNetProblem full_;
};

ElasticNetCvResult cv_elasticnet(const Matrix& x, const Vector& y, const std::vector<ElasticNetParams>& grid,
                                 std::size_t k_folds, std::uint64_t seed, const SolverControl& control = {});

struct LogisticCvResult {
  LogisticModel model;
  CvReport report;
};

/// Accuracy-scored search over C; ties go to the smaller C. A training fold
/// holding one class predicts that class for its test rows.
LogisticCvResult cv_logistic(const Matrix& x, const Vector& y, const std::vector<double>& c_grid, std::size_t k_folds,
                             std::uint64_t seed, const LogisticControl& control = {}, std::size_t jobs = 1);

struct RrrCvResult {
  LinearMap map;
  CvReport report;
};

/// Mean held-out MSE over all targets for every rank; ties go to the
/// smaller rank. Ranks must be >= 1.
RrrCvResult cv_rrr(const Matrix& x, const Matrix& y, const std::vector<std::size_t>& ranks, std::size_t k_folds,
                   std::uint64_t seed, double ridge = 1e-8);

Matrix take_rows(const Matrix& m, const std::vector<std::size_t>& rows);
Vector take_rows(const Vector& v, const std::vector<std::size_t>& rows);

}  // namespace lingbridge::solvers
