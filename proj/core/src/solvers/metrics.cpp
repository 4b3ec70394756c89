#include "lingbridge/solvers/metrics.hpp"

namespace lingbridge::solvers {

namespace {
void check_lengths(const Vector& a, const Vector& b, const char* what) {
  if (a.size() != b.size() || a.size() == 0) {
    throw InputError(std::string(what) + ": length mismatch or empty input (" + std::to_string(a.size()) + " vs " +
                     std::to_string(b.size()) + ")");
  }
}
}  // namespace

double r2_score(const Vector& y_true, const Vector& y_pred) {
  check_lengths(y_true, y_pred, "r2_score");
  const double ss_tot = (y_true.array() - y_true.mean()).square().sum();
  if (ss_tot == 0.0) return 0.0;
  const double ss_res = (y_true - y_pred).squaredNorm();
  return 1.0 - ss_res / ss_tot;
}

double mean_squared_error(const Vector& y_true, const Vector& y_pred) {
  check_lengths(y_true, y_pred, "mean_squared_error");
  return (y_true - y_pred).squaredNorm() / static_cast<double>(y_true.size());
}

double accuracy(const Vector& y_true, const Vector& y_pred) {
  check_lengths(y_true, y_pred, "accuracy");
  return (y_true.array() == y_pred.array()).cast<double>().mean();
}

}  // namespace lingbridge::solvers
