#include "lingbridge/solvers/elasticnet.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace lingbridge::solvers {

namespace {

double soft_threshold(double z, double gamma) {
  if (z > gamma) return z - gamma;
  if (z < -gamma) return z + gamma;
  return 0.0;
}

void check_params(const ElasticNetParams& p) {
  if (!(p.alpha >= 0.0) || !std::isfinite(p.alpha)) throw InputError("elasticnet: alpha must be finite and >= 0");
  if (!(p.l1_ratio >= 0.0 && p.l1_ratio <= 1.0)) throw InputError("elasticnet: l1_ratio must lie in [0, 1]");
}

}  // namespace

Vector LinearModel::predict(const Matrix& x) const {
  if (x.cols() != weights.size()) {
    throw InputError("linear model expects " + std::to_string(weights.size()) + " features, got " +
                     std::to_string(x.cols()));
  }
  return (x * weights).array() + intercept;
}

double LinearModel::predict_one(const Vector& row) const { return row.dot(weights) + intercept; }

std::vector<ElasticNetParams> default_elasticnet_grid() {
  std::vector<ElasticNetParams> grid;
  for (double l1 : {0.1, 0.5, 0.9, 1.0}) {
    for (double a : {1e-4, 1e-3, 1e-2, 1e-1, 1.0, 10.0}) grid.push_back({a, l1});
  }
  return grid;
}

ElasticNetProblem::ElasticNetProblem(const Matrix& x) : n_(x.rows()) {
  if (n_ < 2) throw InputError("elasticnet: need at least 2 rows, got " + std::to_string(n_));
  if (!all_finite(x)) throw InputError("elasticnet: design matrix contains non-finite values");
  x_mean_ = x.colwise().mean().transpose();
  xc_ = x.rowwise() - x_mean_.transpose();
  gram_.noalias() = xc_.transpose() * xc_;
  gram_ /= static_cast<double>(n_);
}

LinearModel ElasticNetProblem::fit(const Vector& y, const ElasticNetParams& params, const SolverControl& control,
                                   const Vector* warm_start) const {
  check_params(params);
  if (y.size() != n_) {
    throw InputError("elasticnet: response has " + std::to_string(y.size()) + " rows, design has " +
                     std::to_string(n_));
  }
  if (!all_finite(y)) throw InputError("elasticnet: response contains non-finite values");

  const Eigen::Index p = gram_.cols();
  const double nd = static_cast<double>(n_);
  const double y_mean = y.mean();
  const Vector yc = y.array() - y_mean;
  const Vector c = xc_.transpose() * yc / nd;
  const double yy = yc.squaredNorm() / nd;
  const double l1 = params.alpha * params.l1_ratio;
  const double l2 = params.alpha * (1.0 - params.l1_ratio);

  Vector beta = Vector::Zero(p);
  if (warm_start != nullptr && warm_start->size() == p) beta = *warm_start;
  Vector g_beta = gram_ * beta;

  auto objective = [&]() {
    const double fit = 0.5 * (yy - 2.0 * c.dot(beta) + beta.dot(g_beta));
    return fit + l1 * beta.lpNorm<1>() + 0.5 * l2 * beta.squaredNorm();
  };

  LinearModel model;
  model.params = params;
  model.converged = false;
  if (control.record_objective) model.objective_trace.push_back(objective());

  for (std::size_t sweep = 0; sweep < control.max_iter; ++sweep) {
    double max_delta = 0.0;
    for (Eigen::Index j = 0; j < p; ++j) {
      const double gjj = gram_(j, j);
      const double denom = gjj + l2;
      const double old = beta(j);
      const double updated = denom > 0.0 ? soft_threshold(c(j) - g_beta(j) + gjj * old, l1) / denom : 0.0;
      const double delta = updated - old;
      if (delta != 0.0) {
        beta(j) = updated;
        g_beta.noalias() += gram_.col(j) * delta;
        max_delta = std::max(max_delta, std::abs(delta));
      }
    }
    model.iterations = sweep + 1;
    if (control.record_objective) model.objective_trace.push_back(objective());
    if (max_delta < control.tol) {
      model.converged = true;
      break;
    }
  }
  if (!all_finite(beta)) throw NumericError("elasticnet: coefficients diverged");
  model.weights = std::move(beta);
  model.intercept = y_mean - x_mean_.dot(model.weights);
  return model;
}

std::vector<LinearModel> ElasticNetProblem::fit_grid(const Vector& y, const std::vector<ElasticNetParams>& grid,
                                                     const SolverControl& control) const {
  std::vector<std::size_t> order(grid.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (grid[a].l1_ratio != grid[b].l1_ratio) return grid[a].l1_ratio < grid[b].l1_ratio;
    return grid[a].alpha > grid[b].alpha;
  });
  std::vector<LinearModel> out(grid.size());
  const LinearModel* prev = nullptr;
  for (std::size_t idx : order) {
    if (prev != nullptr && prev->params == grid[idx]) {
      out[idx] = *prev;  // duplicate point: identical fit, not a second warm start
    } else {
      const bool same_path = prev != nullptr && prev->params.l1_ratio == grid[idx].l1_ratio;
      out[idx] = fit(y, grid[idx], control, same_path ? &prev->weights : nullptr);
    }
    prev = &out[idx];
  }
  return out;
}

LinearModel elasticnet_fit(const Matrix& x, const Vector& y, double alpha, double l1_ratio, double tol,
                           std::size_t max_iter) {
  SolverControl control;
  control.tol = tol;
  control.max_iter = max_iter;
  return elasticnet_fit(x, y, ElasticNetParams{alpha, l1_ratio}, control);
}

LinearModel elasticnet_fit(const Matrix& x, const Vector& y, const ElasticNetParams& params,
                           const SolverControl& control) {
  if (x.rows() != y.size()) {
    throw InputError("elasticnet: X has " + std::to_string(x.rows()) + " rows but y has " + std::to_string(y.size()));
  }
  return ElasticNetProblem(x).fit(y, params, control);
}

double elasticnet_objective(const Matrix& x, const Vector& y, const LinearModel& model) {
  const Vector r = y - model.predict(x);
  const double l1 = model.params.alpha * model.params.l1_ratio;
  const double l2 = model.params.alpha * (1.0 - model.params.l1_ratio);
  return r.squaredNorm() / (2.0 * static_cast<double>(y.size())) + l1 * model.weights.lpNorm<1>() +
         0.5 * l2 * model.weights.squaredNorm();
}

}  // namespace lingbridge::solvers
