#pragma once

#include <vector>

#include "lingbridge/common.hpp"

namespace lingbridge::solvers {

/// Minimizes (1/2n)||y - Xb - b0||^2 + alpha (l1_ratio ||b||_1 + (1 - l1_ratio)/2 ||b||^2).
struct ElasticNetParams {
  double alpha = 1.0;
  double l1_ratio = 0.5;
  friend bool operator==(const ElasticNetParams&, const ElasticNetParams&) = default;
};

struct SolverControl {
  /// Stop once the largest coefficient change in a sweep is below tol.
  double tol = 1e-7;
  std::size_t max_iter = 10000;
  /// Record the objective after every sweep in LinearModel::objective_trace.
  bool record_objective = false;
};

struct LinearModel {
  Vector weights;
  double intercept = 0.0;
  ElasticNetParams params;
  bool converged = true;
  std::size_t iterations = 0;
  std::vector<double> objective_trace;

  Vector predict(const Matrix& x) const;
  double predict_one(const Vector& row) const;
};

/// alpha in {1e-4, 1e-3, 1e-2, 1e-1, 1, 10} x l1_ratio in {0.1, 0.5, 0.9, 1}.
std::vector<ElasticNetParams> default_elasticnet_grid();

/// Coordinate descent on one design matrix, reused across responses and
/// hyperparameters. Holds the centered Gram matrix X'X/n, so each sweep
/// costs O(p * nonzero updates) independent of the row count.
class ElasticNetProblem {
 public:
  /// Throws InputError on fewer than 2 rows or non-finite entries.
  explicit ElasticNetProblem(const Matrix& x);

  Eigen::Index rows() const noexcept { return n_; }
  Eigen::Index cols() const noexcept { return gram_.cols(); }

  /// `warm_start`, when given, initializes the coefficients.
  LinearModel fit(const Vector& y, const ElasticNetParams& params, const SolverControl& control = {},
                  const Vector* warm_start = nullptr) const;

  /// Fits every grid point, warm-starting along decreasing alpha for each
  /// l1_ratio. Results are returned in grid order.
  std::vector<LinearModel> fit_grid(const Vector& y, const std::vector<ElasticNetParams>& grid,
                                    const SolverControl& control = {}) const;

 private:
  Eigen::Index n_ = 0;
  Vector x_mean_;
  Matrix gram_;  // Xc' Xc / n
  Matrix xc_;    // centered design, for X'y
};

LinearModel elasticnet_fit(const Matrix& x, const Vector& y, double alpha, double l1_ratio, double tol = 1e-7,
                           std::size_t max_iter = 10000);
LinearModel elasticnet_fit(const Matrix& x, const Vector& y, const ElasticNetParams& params,
                           const SolverControl& control);

/// Value of the penalized objective for a fitted model.
double elasticnet_objective(const Matrix& x, const Vector& y, const LinearModel& model);

}  // namespace lingbridge::solvers
