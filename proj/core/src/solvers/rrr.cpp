#include "lingbridge/solvers/rrr.hpp"

#include <algorithm>

namespace lingbridge::solvers {

Matrix LinearMap::apply(const Matrix& x) const {
  if (x.cols() != coefficients.rows()) {
    throw InputError("linear map expects " + std::to_string(coefficients.rows()) + " source features, got " +
                     std::to_string(x.cols()));
  }
  return (x * coefficients).rowwise() + intercepts.transpose();
}

RrrSolution::RrrSolution(const Matrix& x, const Matrix& y, double ridge) {
  if (x.rows() != y.rows()) {
    throw InputError("rrr: X has " + std::to_string(x.rows()) + " rows but Y has " + std::to_string(y.rows()));
  }
  if (x.rows() < 2) throw InputError("rrr: need at least 2 rows");
  if (!all_finite(x) || !all_finite(y)) throw InputError("rrr: inputs contain non-finite values");
  const double n = static_cast<double>(x.rows());
  x_mean_ = x.colwise().mean().transpose();
  y_mean_ = y.colwise().mean().transpose();
  const Matrix xc = x.rowwise() - x_mean_.transpose();
  const Matrix yc = y.rowwise() - y_mean_.transpose();

  Matrix gram = xc.transpose() * xc / n;
  gram.diagonal().array() += ridge;
  b_ols_ = gram.ldlt().solve(xc.transpose() * yc / n);
  if (!all_finite(b_ols_)) throw NumericError("rrr: least-squares step failed");

  const Matrix fitted = xc * b_ols_;
  // Right singular vectors of the fitted values from the small q x q
  // cross-product, ordered by decreasing singular value.
  Eigen::SelfAdjointEigenSolver<Matrix> eig(fitted.transpose() * fitted);
  if (eig.info() != Eigen::Success) throw NumericError("rrr: eigen-decomposition failed");
  v_ = eig.eigenvectors().rowwise().reverse();
  sigma_ = eig.eigenvalues().reverse().cwiseMax(0.0).cwiseSqrt();
  max_rank_ = static_cast<std::size_t>(std::min(x.cols(), y.cols()));
}

LinearMap RrrSolution::at_rank(std::size_t rank) const {
  if (rank == 0) throw InputError("rrr: rank bound must be >= 1");
  LinearMap map;
  map.rank_clamped = rank > max_rank_;
  const std::size_t r = std::min(rank, max_rank_);
  map.rank_bound = r;
  const Eigen::Index q = b_ols_.cols();
  const Eigen::Index keep = std::min<Eigen::Index>(static_cast<Eigen::Index>(r), v_.cols());
  if (keep >= q) {
    map.coefficients = b_ols_;
  } else {
    const auto vr = v_.leftCols(keep);
    map.coefficients = b_ols_ * vr * vr.transpose();
  }
  map.intercepts = y_mean_ - map.coefficients.transpose() * x_mean_;
  return map;
}

LinearMap rrr_fit(const Matrix& x, const Matrix& y, std::size_t rank_bound, double ridge) {
  return RrrSolution(x, y, ridge).at_rank(rank_bound);
}

}  // namespace lingbridge::solvers
