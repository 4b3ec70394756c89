#pragma once

#include "lingbridge/common.hpp"

namespace lingbridge::solvers {

/// 1 - SS_res / SS_tot; 0 when y_true is constant.
double r2_score(const Vector& y_true, const Vector& y_pred);
double mean_squared_error(const Vector& y_true, const Vector& y_pred);
/// Fraction of equal entries (labels compared exactly).
double accuracy(const Vector& y_true, const Vector& y_pred);

}  // namespace lingbridge::solvers
