#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lingbridge/corpus/narration.hpp"
#include "lingbridge/solvers/pca.hpp"

namespace lingbridge::eval {

/// Per-patient severity: the negated first principal component of the
/// z-scored task scores, so better task performance means lower severity.
struct DementiaScores {
  std::vector<std::string> patient_ids;
  Vector severity;
  std::string orientation;
  solvers::PcaResult pca;

  std::optional<double> find(const std::string& patient_id) const;
  /// Severities in the order of `ids`; throws InputError naming the first
  /// patient without a score.
  Vector aligned(const std::vector<std::string>& ids) const;
};

DementiaScores derive_dementia_scores(const corpus::TaskScoreTable& table);

/// Wraps externally supplied severities (higher = more impaired).
DementiaScores scores_from_severity(std::vector<std::string> patient_ids, Vector severity);

}  // namespace lingbridge::eval
