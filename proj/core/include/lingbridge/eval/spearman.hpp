#pragma once

#include "lingbridge/common.hpp"

namespace lingbridge::eval {

/// Thrown when either argument of spearman_rho has no rank variance.
class DegenerateRankingError : public NumericError {
 public:
  DegenerateRankingError() : NumericError("degenerate ranking") {}
};

/// 1-based ranks with ties sharing their mean rank.
Vector average_ranks(const Vector& v);

/// Pearson correlation of the average ranks of a and b.
/// Throws InputError on mismatched or too-short input and
/// DegenerateRankingError when either side is constant.
double spearman_rho(const Vector& a, const Vector& b);

}  // namespace lingbridge::eval
