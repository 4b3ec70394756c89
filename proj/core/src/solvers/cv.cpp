#include "lingbridge/solvers/cv.hpp"

#include <algorithm>
#include <cmath>

#include "lingbridge/rng.hpp"
#include "lingbridge/solvers/metrics.hpp"

namespace lingbridge::solvers {

std::string_view to_string(CvMetric metric) { return metric == CvMetric::mse ? "mse" : "accuracy"; }

CvMetric parse_cv_metric(std::string_view text) {
  if (text == "mse") return CvMetric::mse;
  if (text == "accuracy") return CvMetric::accuracy;
  throw InputError("unknown CV metric '" + std::string(text) + "'");
}

std::vector<std::size_t> assign_folds(std::size_t n, std::size_t k, std::uint64_t seed) {
  if (k < 2) throw InputError("cross-validation needs at least 2 folds");
  if (n < k) throw InputError("cannot split " + std::to_string(n) + " rows into " + std::to_string(k) + " folds");
  Rng rng(seed);
  const auto perm = rng.permutation(n);
  std::vector<std::size_t> folds(n);
  for (std::size_t pos = 0; pos < n; ++pos) folds[perm[pos]] = pos % k;
  return folds;
}

std::vector<std::size_t> fold_rows(const std::vector<std::size_t>& folds, std::size_t f, bool inside) {
  std::vector<std::size_t> rows;
  for (std::size_t i = 0; i < folds.size(); ++i) {
    if ((folds[i] == f) == inside) rows.push_back(i);
  }
  return rows;
}

Matrix take_rows(const Matrix& m, const std::vector<std::size_t>& rows) {
  Matrix out(static_cast<Eigen::Index>(rows.size()), m.cols());
  for (std::size_t i = 0; i < rows.size(); ++i) out.row(static_cast<Eigen::Index>(i)) = m.row(static_cast<Eigen::Index>(rows[i]));
  return out;
}

Vector take_rows(const Vector& v, const std::vector<std::size_t>& rows) {
  Vector out(static_cast<Eigen::Index>(rows.size()));
  for (std::size_t i = 0; i < rows.size(); ++i) out(static_cast<Eigen::Index>(i)) = v(static_cast<Eigen::Index>(rows[i]));
  return out;
}

CvReport cv_grid_search(std::size_t n_rows, std::vector<GridPoint> grid, std::size_t k_folds, std::uint64_t seed,
                        CvMetric metric,
                        const std::function<std::vector<double>(const std::vector<std::size_t>& train,
                                                                const std::vector<std::size_t>& test)>& score_fold,
                        const std::function<bool(std::size_t, std::size_t)>& prefer) {
  if (grid.empty()) throw InputError("cross-validation grid is empty");
  CvReport report;
  report.metric = metric;
  report.k_folds = k_folds;
  report.seed = seed;
  report.grid = std::move(grid);
  const std::size_t g = report.grid.size();
  const auto folds = assign_folds(n_rows, k_folds, seed);
  report.fold_scores.assign(g, std::vector<double>(k_folds, 0.0));
  for (std::size_t f = 0; f < k_folds; ++f) {
    const auto scores = score_fold(fold_rows(folds, f, false), fold_rows(folds, f, true));
    if (scores.size() != g) throw Error("cross-validation scorer returned the wrong number of scores");
    for (std::size_t i = 0; i < g; ++i) report.fold_scores[i][f] = scores[i];
  }
  report.mean_scores.resize(g);
  for (std::size_t i = 0; i < g; ++i) {
    double s = 0;
    for (double v : report.fold_scores[i]) s += v;
    report.mean_scores[i] = s / static_cast<double>(k_folds);
  }
  std::size_t best = 0;
  for (std::size_t i = 1; i < g; ++i) {
    const double a = report.mean_scores[i];
    const double b = report.mean_scores[best];
    const bool better = metric == CvMetric::mse ? a < b : a > b;
    if (better && a != b) {
      best = i;
    } else if (a == b && prefer && prefer(i, best)) {
      best = i;
    }
  }
  if (!std::isfinite(report.mean_scores[best])) throw NumericError("cross-validation produced no finite score");
  report.best_index = best;
  return report;
}

namespace {
GridPoint to_point(const ElasticNetParams& p) { return {{"alpha", p.alpha}, {"l1_ratio", p.l1_ratio}}; }
}  // namespace

ElasticNetCv::ElasticNetCv(const Matrix& x, std::size_t k_folds, std::uint64_t seed)
    : k_folds_(k_folds), seed_(seed), folds_(assign_folds(static_cast<std::size_t>(x.rows()), k_folds, seed)),
      full_(x) {
  for (std::size_t f = 0; f < k_folds; ++f) {
    train_rows_.push_back(fold_rows(folds_, f, false));
    test_rows_.push_back(fold_rows(folds_, f, true));
    fold_problems_.emplace_back(take_rows(x, train_rows_.back()));
    test_x_.push_back(take_rows(x, test_rows_.back()));
  }
}

ElasticNetCvResult ElasticNetCv::fit(const Vector& y, const std::vector<ElasticNetParams>& grid,
                                     const SolverControl& control) const {
  if (grid.empty()) throw InputError("cross-validation grid is empty");
  std::vector<GridPoint> points;
  for (const auto& p : grid) points.push_back(to_point(p));
  std::size_t fold = 0;
  auto score = [&](const std::vector<std::size_t>&, const std::vector<std::size_t>&) {
    const auto models = fold_problems_[fold].fit_grid(take_rows(y, train_rows_[fold]), grid, control);
    const Vector y_test = take_rows(y, test_rows_[fold]);
    std::vector<double> mse;
    for (const auto& m : models) mse.push_back(mean_squared_error(y_test, m.predict(test_x_[fold])));
    ++fold;
    return mse;
  };
  auto prefer = [&](std::size_t a, std::size_t b) { return grid[a].alpha > grid[b].alpha; };
  ElasticNetCvResult out;
  out.report = cv_grid_search(folds_.size(), std::move(points), k_folds_, seed_, CvMetric::mse, score, prefer);
  out.model = full_.fit(y, grid[out.report.best_index], control);
  return out;
}

ElasticNetCvResult cv_elasticnet(const Matrix& x, const Vector& y, const std::vector<ElasticNetParams>& grid,
                                 std::size_t k_folds, std::uint64_t seed, const SolverControl& control) {
  if (x.rows() != y.size()) throw InputError("cv_elasticnet: X and y row counts differ");
  return ElasticNetCv(x, k_folds, seed).fit(y, grid, control);
}

namespace {
bool single_class(const Vector& y) { return (y.array() == y(0)).all(); }
}  // namespace

LogisticCvResult cv_logistic(const Matrix& x, const Vector& y, const std::vector<double>& c_grid, std::size_t k_folds,
                             std::uint64_t seed, const LogisticControl& control, std::size_t jobs) {
  if (x.rows() != y.size()) throw InputError("cv_logistic: X and y row counts differ");
  if (c_grid.empty()) throw InputError("cross-validation grid is empty");
  std::vector<GridPoint> points;
  for (double c : c_grid) points.push_back({{"C", c}});
  auto score = [&](const std::vector<std::size_t>& train, const std::vector<std::size_t>& test) {
    const Matrix xt = take_rows(x, train);
    const Vector yt = take_rows(y, train);
    const Matrix xv = take_rows(x, test);
    const Vector yv = take_rows(y, test);
    std::vector<double> acc(c_grid.size());
    if (single_class(yt)) {
      const double a = accuracy(yv, Vector::Constant(yv.size(), yt(0)));
      std::fill(acc.begin(), acc.end(), a);
      return acc;
    }
    parallel_for(c_grid.size(), jobs, [&](std::size_t i) {
      acc[i] = accuracy(yv, logistic_l1_fit(xt, yt, c_grid[i], control).predict(xv));
    });
    return acc;
  };
  auto prefer = [&](std::size_t a, std::size_t b) { return c_grid[a] < c_grid[b]; };
  LogisticCvResult out;
  out.report = cv_grid_search(static_cast<std::size_t>(x.rows()), std::move(points), k_folds, seed,
                              CvMetric::accuracy, score, prefer);
  out.model = logistic_l1_fit(x, y, c_grid[out.report.best_index], control);
  return out;
}

RrrCvResult cv_rrr(const Matrix& x, const Matrix& y, const std::vector<std::size_t>& ranks, std::size_t k_folds,
                   std::uint64_t seed, double ridge) {
  if (x.rows() != y.rows()) throw InputError("cv_rrr: X and Y row counts differ");
  if (ranks.empty()) throw InputError("cross-validation grid is empty");
  std::vector<GridPoint> points;
  for (std::size_t r : ranks) {
    if (r == 0) throw InputError("rrr: rank bound must be >= 1");
    points.push_back({{"rank", static_cast<double>(r)}});
  }
  auto score = [&](const std::vector<std::size_t>& train, const std::vector<std::size_t>& test) {
    const RrrSolution sol(take_rows(x, train), take_rows(y, train), ridge);
    const Matrix xv = take_rows(x, test);
    const Matrix yv = take_rows(y, test);
    std::vector<double> mse;
    for (std::size_t r : ranks) {
      const Matrix diff = yv - sol.at_rank(r).apply(xv);
      mse.push_back(diff.squaredNorm() / static_cast<double>(diff.size()));
    }
    return mse;
  };
  auto prefer = [&](std::size_t a, std::size_t b) { return ranks[a] < ranks[b]; };
  RrrCvResult out;
  out.report = cv_grid_search(static_cast<std::size_t>(x.rows()), std::move(points), k_folds, seed, CvMetric::mse,
                              score, prefer);
  out.map = rrr_fit(x, y, ranks[out.report.best_index], ridge);
  return out;
}

}  // namespace lingbridge::solvers
