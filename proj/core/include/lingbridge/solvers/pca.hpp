#pragma once

#include <vector>

#include "lingbridge/common.hpp"

namespace lingbridge::solvers {

struct PcaResult {
  /// Projection of every row onto the first component.
  Vector scores;
  /// Unit loading vector over the kept columns.
  Vector loadings;
  std::vector<std::size_t> kept_columns;
  /// Zero-variance columns left out of the analysis.
  std::vector<std::size_t> dropped_columns;
  /// Largest eigenvalue of the correlation matrix over its trace.
  double explained_variance_ratio = 0.0;
};

/// First principal component of the z-scored columns (population std),
/// i.e. the top eigenvector of the correlation matrix. The sign is chosen
/// so the scores correlate non-negatively with the row means of the
/// z-scores (ties fall back to a positive largest-magnitude loading).
/// Throws InputError with fewer than 2 rows or no varying column.
PcaResult pca_first_component(const Matrix& s);

}  // namespace lingbridge::solvers
