#pragma once

#include <string>
#include <utility>
#include <vector>

#include "lingbridge/featx/feature_matrix.hpp"

namespace lingbridge::featx {

struct DroppedFeature {
  std::string name;
  double modal_fraction = 0.0;
  friend bool operator==(const DroppedFeature&, const DroppedFeature&) = default;
};

/// Which columns survived constant-feature pruning.
struct PruneMask {
  std::vector<std::string> kept;
  std::vector<DroppedFeature> dropped;

  /// Restricts `m` to the kept columns, in kept order. Throws InputError
  /// naming any kept column missing from `m`.
  FeatureMatrix apply(const FeatureMatrix& m) const;

  std::string to_json() const;
  static PruneMask from_json(const std::string& text);
  friend bool operator==(const PruneMask&, const PruneMask&) = default;
};

/// Share of rows holding the column's most frequent exact value.
double modal_fraction(const Matrix& values, Eigen::Index col);

/// Drops every column whose modal fraction is strictly above 0.5.
/// Throws InputError("no informative features") when nothing survives and
/// on an empty matrix.
std::pair<FeatureMatrix, PruneMask> prune_constant(const FeatureMatrix& matrix);

}  // namespace lingbridge::featx
