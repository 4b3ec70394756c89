#include "lingbridge/eval/spearman.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

namespace lingbridge::eval {

Vector average_ranks(const Vector& v) {
  const auto n = static_cast<std::size_t>(v.size());
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return v(static_cast<Eigen::Index>(a)) < v(static_cast<Eigen::Index>(b));
  });
  Vector ranks(v.size());
  std::size_t i = 0;
  while (i < n) {
    std::size_t j = i;
    while (j + 1 < n && v(static_cast<Eigen::Index>(order[j + 1])) == v(static_cast<Eigen::Index>(order[i]))) ++j;
    const double mean_rank = 0.5 * static_cast<double>(i + j) + 1.0;
    for (std::size_t t = i; t <= j; ++t) ranks(static_cast<Eigen::Index>(order[t])) = mean_rank;
    i = j + 1;
  }
  return ranks;
}

double spearman_rho(const Vector& a, const Vector& b) {
  if (a.size() != b.size()) {
    throw InputError("spearman: length mismatch (" + std::to_string(a.size()) + " vs " + std::to_string(b.size()) +
                     ")");
  }
  if (a.size() < 2) throw InputError("spearman: need at least 2 observations");
  if (!all_finite(a) || !all_finite(b)) throw InputError("spearman: non-finite input");
  const Vector ra = average_ranks(a);
  const Vector rb = average_ranks(b);
  const Vector da = ra.array() - ra.mean();
  const Vector db = rb.array() - rb.mean();
  const double va = da.squaredNorm();
  const double vb = db.squaredNorm();
  if (va == 0.0 || vb == 0.0) throw DegenerateRankingError();
  return std::clamp(da.dot(db) / std::sqrt(va * vb), -1.0, 1.0);
}

}  // namespace lingbridge::eval
