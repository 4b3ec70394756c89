#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lingbridge/common.hpp"

namespace lingbridge::featx {

/// Named, ordered feature values for one narration.
struct FeatureVector {
  std::vector<std::string> names;
  std::vector<double> values;

  std::size_t size() const noexcept { return values.size(); }
  void push(std::string name, double value);
  void append(const FeatureVector& other);
  std::optional<std::size_t> index_of(std::string_view name) const;
  /// Throws InputError if the feature is absent.
  double at(std::string_view name) const;
  Vector as_vector() const;
};

/// Row-aligned features for many narrations; columns share one name list.
struct FeatureMatrix {
  std::vector<std::string> row_ids;
  std::vector<std::string> names;
  Matrix values;  // rows x names

  std::size_t rows() const noexcept { return row_ids.size(); }
  std::size_t cols() const noexcept { return names.size(); }

  std::optional<std::size_t> find_column(std::string_view name) const;
  /// Throws InputError listing missing names.
  FeatureMatrix select_columns(const std::vector<std::string>& wanted) const;
  FeatureMatrix select_rows(const std::vector<std::size_t>& rows) const;
  FeatureVector row(std::size_t r) const;

  /// Stacks vectors that must all share the same names in the same order.
  static FeatureMatrix from_rows(std::vector<std::string> row_ids, const std::vector<FeatureVector>& rows);
};

/// Feature-matrix CSV: header `narration_id,<names...>`, one row per narration.
FeatureMatrix read_feature_csv(std::istream& in);
FeatureMatrix load_feature_csv(const std::string& path);
void write_feature_csv(std::ostream& out, const FeatureMatrix& m);

}  // namespace lingbridge::featx
