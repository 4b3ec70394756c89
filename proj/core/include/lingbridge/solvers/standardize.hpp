#pragma once

#include <utility>
#include <vector>

#include "lingbridge/common.hpp"

namespace lingbridge::solvers {

/// Column-wise z-scoring with population standard deviation.
struct Standardizer {
  Vector means;
  Vector stds;
  /// Columns whose training values were all identical; their std is 1.
  std::vector<bool> constant;

  static Standardizer fit(const Matrix& x);

  Eigen::Index dims() const noexcept { return means.size(); }
  bool any_constant() const;
  Matrix apply(const Matrix& x) const;
  Vector apply_row(const Vector& row) const;
  Matrix invert(const Matrix& z) const;
};

/// Precondition: at least 2 rows.
std::pair<Matrix, Standardizer> standardize(const Matrix& x);

}  // namespace lingbridge::solvers
