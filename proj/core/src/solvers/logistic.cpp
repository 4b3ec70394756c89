#include "lingbridge/solvers/logistic.hpp"

#include <algorithm>
#include <cmath>

namespace lingbridge::solvers {

namespace {

double sigmoid(double z) {
  if (z >= 0) return 1.0 / (1.0 + std::exp(-z));
  const double e = std::exp(z);
  return e / (1.0 + e);
}

/// log(1 + exp(z)) without overflow.
double softplus(double z) { return z > 0 ? z + std::log1p(std::exp(-z)) : std::log1p(std::exp(z)); }

void check_labels(const Vector& y) {
  bool has0 = false;
  bool has1 = false;
  for (Eigen::Index i = 0; i < y.size(); ++i) {
    if (y(i) == 0.0) {
      has0 = true;
    } else if (y(i) == 1.0) {
      has1 = true;
    } else {
      throw InputError("logistic: labels must be 0 or 1");
    }
  }
  if (!has0 || !has1) throw InputError("logistic: labels contain a single class");
}

// theta = [w; b]
double smooth(const Matrix& x, const Vector& y, const Vector& theta, Vector* grad) {
  const Eigen::Index p = x.cols();
  const double n = static_cast<double>(x.rows());
  const Vector z = (x * theta.head(p)).array() + theta(p);
  double loss = 0.0;
  Vector resid(z.size());
  for (Eigen::Index i = 0; i < z.size(); ++i) {
    loss += softplus(z(i)) - y(i) * z(i);
    resid(i) = sigmoid(z(i)) - y(i);
  }
  if (grad != nullptr) {
    grad->resize(p + 1);
    grad->head(p).noalias() = x.transpose() * resid / n;
    (*grad)(p) = resid.sum() / n;
  }
  return loss / n;
}

Vector prox(const Vector& v, double threshold) {
  Vector out = v;
  const Eigen::Index p = v.size() - 1;
  for (Eigen::Index j = 0; j < p; ++j) {
    const double a = std::abs(v(j)) - threshold;
    out(j) = a > 0 ? std::copysign(a, v(j)) : 0.0;
  }
  return out;
}

}  // namespace

Vector LogisticModel::predict_proba(const Matrix& x) const {
  if (x.cols() != weights.size()) {
    throw InputError("logistic model expects " + std::to_string(weights.size()) + " features, got " +
                     std::to_string(x.cols()));
  }
  Vector z = (x * weights).array() + intercept;
  for (Eigen::Index i = 0; i < z.size(); ++i) z(i) = sigmoid(z(i));
  return z;
}

double LogisticModel::predict_proba_one(const Vector& row) const { return sigmoid(row.dot(weights) + intercept); }

Vector LogisticModel::predict(const Matrix& x) const {
  return (predict_proba(x).array() >= 0.5).cast<double>();
}

std::vector<double> default_logistic_grid() { return {1.0, 10.0, 100.0, 1000.0}; }

double logistic_loss(const Matrix& x, const Vector& y, const Vector& weights, double intercept, Vector* gradient) {
  Vector theta(weights.size() + 1);
  theta << weights, intercept;
  return smooth(x, y, theta, gradient);
}

LogisticModel logistic_l1_fit(const Matrix& x, const Vector& y, double c_inv_reg, const LogisticControl& control) {
  if (!(c_inv_reg > 0.0) || !std::isfinite(c_inv_reg)) throw InputError("logistic: C must be finite and > 0");
  if (x.rows() != y.size()) {
    throw InputError("logistic: X has " + std::to_string(x.rows()) + " rows but y has " + std::to_string(y.size()));
  }
  if (!all_finite(x)) throw InputError("logistic: design matrix contains non-finite values");
  check_labels(y);

  const Eigen::Index p = x.cols();
  const double lambda = 1.0 / c_inv_reg;
  // Start from a cheap lower estimate of the Lipschitz constant; backtracking
  // raises it as needed.
  double lip = 0.25 * (x.colwise().squaredNorm().maxCoeff() / static_cast<double>(x.rows()) + 1.0);
  if (!(lip > 0.0)) lip = 0.25;

  Vector theta = Vector::Zero(p + 1);
  Vector momentum = theta;
  double t = 1.0;
  Vector grad;

  LogisticModel model;
  model.c_inv_reg = c_inv_reg;
  model.converged = false;

  for (std::size_t it = 0; it < control.max_iter; ++it) {
    const double f_m = smooth(x, y, momentum, &grad);
    Vector next;
    for (;;) {
      next = prox(momentum - grad / lip, lambda / lip);
      const Vector step = next - momentum;
      const double f_next = smooth(x, y, next, nullptr);
      if (f_next <= f_m + grad.dot(step) + 0.5 * lip * step.squaredNorm() + 1e-12 * std::abs(f_m)) break;
      lip *= 2.0;
      if (!std::isfinite(lip)) throw NumericError("logistic: step size collapsed");
    }
    model.iterations = it + 1;
    const double mapping = (lip * (momentum - next)).lpNorm<Eigen::Infinity>();
    if (mapping < control.tol) {
      theta = next;
      model.converged = true;
      break;
    }
    // Restart momentum whenever it points uphill.
    if ((momentum - next).dot(next - theta) > 0.0) t = 1.0;
    const double t_next = 0.5 * (1.0 + std::sqrt(1.0 + 4.0 * t * t));
    momentum = next + ((t - 1.0) / t_next) * (next - theta);
    theta = std::move(next);
    t = t_next;
  }
  if (!all_finite(theta)) throw NumericError("logistic: coefficients diverged");
  model.weights = theta.head(p);
  model.intercept = theta(p);
  return model;
}

}  // namespace lingbridge::solvers
