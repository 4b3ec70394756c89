#include "lingbridge/eval/dementia_scores.hpp"

namespace lingbridge::eval {

std::optional<double> DementiaScores::find(const std::string& patient_id) const {
  for (std::size_t i = 0; i < patient_ids.size(); ++i) {
    if (patient_ids[i] == patient_id) return severity(static_cast<Eigen::Index>(i));
  }
  return std::nullopt;
}

Vector DementiaScores::aligned(const std::vector<std::string>& ids) const {
  Vector out(static_cast<Eigen::Index>(ids.size()));
  for (std::size_t i = 0; i < ids.size(); ++i) {
    const auto s = find(ids[i]);
    if (!s) throw InputError("no dementia score for patient '" + ids[i] + "'");
    out(static_cast<Eigen::Index>(i)) = *s;
  }
  return out;
}

DementiaScores derive_dementia_scores(const corpus::TaskScoreTable& table) {
  if (table.patient_ids.size() < 2) throw InputError("dementia scores need at least 2 patients");
  if (table.task_names.empty()) throw InputError("dementia scores need at least 1 task");
  DementiaScores out;
  out.patient_ids = table.patient_ids;
  out.pca = solvers::pca_first_component(table.scores);
  out.severity = -out.pca.scores;
  out.orientation =
      "severity = -PC1 of z-scored task scores; PC1 correlates non-negatively with the mean z-scored task score";
  return out;
}

DementiaScores scores_from_severity(std::vector<std::string> patient_ids, Vector severity) {
  if (patient_ids.size() != static_cast<std::size_t>(severity.size())) {
    throw InputError("severity list and patient list differ in length");
  }
  if (!all_finite(severity)) throw InputError("severities must be finite");
  DementiaScores out;
  out.patient_ids = std::move(patient_ids);
  out.severity = std::move(severity);
  out.orientation = "severity supplied directly (higher = more impaired)";
  return out;
}

}  // namespace lingbridge::eval
