#include "lingbridge/solvers/standardize.hpp"

#include <algorithm>
#include <cmath>

namespace lingbridge::solvers {

Standardizer Standardizer::fit(const Matrix& x) {
  if (x.rows() < 2) throw InputError("standardize: need at least 2 rows, got " + std::to_string(x.rows()));
  Standardizer s;
  const Eigen::Index p = x.cols();
  s.means.resize(p);
  s.stds.resize(p);
  s.constant.assign(static_cast<std::size_t>(p), false);
  for (Eigen::Index j = 0; j < p; ++j) {
    const auto col = x.col(j);
    const bool flat = (col.array() == col(0)).all();
    if (flat) {
      s.means(j) = col(0);
      s.stds(j) = 1.0;
      s.constant[static_cast<std::size_t>(j)] = true;
      continue;
    }
    const double mean = col.mean();
    const double var = (col.array() - mean).square().mean();
    s.means(j) = mean;
    s.stds(j) = var > 0.0 ? std::sqrt(var) : 1.0;
  }
  return s;
}

bool Standardizer::any_constant() const { return std::find(constant.begin(), constant.end(), true) != constant.end(); }

Matrix Standardizer::apply(const Matrix& x) const {
  if (x.cols() != means.size()) {
    throw InputError("standardizer expects " + std::to_string(means.size()) + " columns, got " +
                     std::to_string(x.cols()));
  }
  return (x.rowwise() - means.transpose()).array().rowwise() / stds.transpose().array();
}

Vector Standardizer::apply_row(const Vector& row) const {
  if (row.size() != means.size()) {
    throw InputError("standardizer expects " + std::to_string(means.size()) + " values, got " +
                     std::to_string(row.size()));
  }
  return (row - means).cwiseQuotient(stds);
}

Matrix Standardizer::invert(const Matrix& z) const {
  return (z.array().rowwise() * stds.transpose().array()).matrix().rowwise() + means.transpose();
}

std::pair<Matrix, Standardizer> standardize(const Matrix& x) {
  Standardizer s = Standardizer::fit(x);
  Matrix z = s.apply(x);
  return {std::move(z), std::move(s)};
}

}  // namespace lingbridge::solvers
