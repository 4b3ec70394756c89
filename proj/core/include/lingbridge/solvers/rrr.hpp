#pragma once

#include "lingbridge/common.hpp"

namespace lingbridge::solvers {

/// Y ~ X B + intercepts with rank(B) <= rank_bound.
struct LinearMap {
  Matrix coefficients;  // source dims x target dims
  Vector intercepts;
  std::size_t rank_bound = 0;
  /// Set when the requested rank exceeded min(source, target) dims.
  bool rank_clamped = false;

  Matrix apply(const Matrix& x) const;
};

/// Shared pieces of every reduced-rank fit on one (X, Y): the
/// ridge-stabilized least-squares solution and the right singular vectors
/// of its fitted values. Any rank is then one projection away.
class RrrSolution {
 public:
  /// `ridge` is added to the diagonal of Xc'Xc / n.
  RrrSolution(const Matrix& x, const Matrix& y, double ridge = 1e-8);

  std::size_t max_rank() const noexcept { return max_rank_; }
  const Matrix& ols() const noexcept { return b_ols_; }
  /// Singular values of the centered fitted values Xc B_ols.
  const Vector& singular_values() const noexcept { return sigma_; }
  LinearMap at_rank(std::size_t rank) const;

 private:
  Vector x_mean_;
  Vector y_mean_;
  Matrix b_ols_;
  Matrix v_;
  Vector sigma_;
  std::size_t max_rank_ = 0;
};

/// Classical reduced-rank regression. Callers standardize Y beforehand so
/// every target contributes equally to the summed squared error. A rank
/// above min(p, q) is clamped (LinearMap::rank_clamped).
LinearMap rrr_fit(const Matrix& x, const Matrix& y, std::size_t rank_bound, double ridge = 1e-8);

}  // namespace lingbridge::solvers
