#pragma once

#include <vector>

#include "lingbridge/common.hpp"

namespace lingbridge::solvers {

/// Minimizes mean log-loss + (1 / c_inv_reg) ||w||_1; the intercept is not
/// penalized.
struct LogisticModel {
  Vector weights;
  double intercept = 0.0;
  double c_inv_reg = 1.0;
  bool converged = true;
  std::size_t iterations = 0;

  /// P(y = 1 | x) per row, strictly inside (0, 1).
  Vector predict_proba(const Matrix& x) const;
  double predict_proba_one(const Vector& row) const;
  /// 1 where the probability is >= 0.5, else 0.
  Vector predict(const Matrix& x) const;
};

struct LogisticControl {
  /// Stop when the proximal-gradient mapping is below tol in max-norm.
  double tol = 1e-6;
  std::size_t max_iter = 20000;
};

/// C in {1, 10, 100, 1000}.
std::vector<double> default_logistic_grid();

/// Accelerated proximal gradient (FISTA) with backtracking and adaptive
/// restart, from zero initialization. `y` holds 0/1 labels.
/// Throws InputError on single-class or non-binary labels.
LogisticModel logistic_l1_fit(const Matrix& x, const Vector& y, double c_inv_reg, const LogisticControl& control = {});

/// Mean log-loss of (weights, intercept) and its gradient; the gradient's
/// last entry is the intercept component.
double logistic_loss(const Matrix& x, const Vector& y, const Vector& weights, double intercept,
                     Vector* gradient = nullptr);

}  // namespace lingbridge::solvers
