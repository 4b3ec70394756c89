#include "lingbridge/featx/prune.hpp"

#include <algorithm>

#include <nlohmann/json.hpp>

namespace lingbridge::featx {

double modal_fraction(const Matrix& values, Eigen::Index col) {
  const Eigen::Index n = values.rows();
  if (n == 0) return 0.0;
  std::vector<double> v(values.col(col).data(), values.col(col).data() + n);
  std::sort(v.begin(), v.end());
  std::size_t best = 1;
  std::size_t run = 1;
  for (std::size_t i = 1; i < v.size(); ++i) {
    run = v[i] == v[i - 1] ? run + 1 : 1;
    best = std::max(best, run);
  }
  return static_cast<double>(best) / static_cast<double>(n);
}

std::pair<FeatureMatrix, PruneMask> prune_constant(const FeatureMatrix& matrix) {
  if (matrix.rows() == 0) throw InputError("prune_constant: matrix has no rows");
  PruneMask mask;
  for (std::size_t j = 0; j < matrix.cols(); ++j) {
    const double f = modal_fraction(matrix.values, static_cast<Eigen::Index>(j));
    if (f > 0.5) {
      mask.dropped.push_back({matrix.names[j], f});
    } else {
      mask.kept.push_back(matrix.names[j]);
    }
  }
  if (mask.kept.empty()) throw InputError("no informative features");
  FeatureMatrix pruned = matrix.select_columns(mask.kept);
  return {std::move(pruned), std::move(mask)};
}

FeatureMatrix PruneMask::apply(const FeatureMatrix& m) const { return m.select_columns(kept); }

std::string PruneMask::to_json() const {
  nlohmann::json j;
  j["kept"] = kept;
  j["dropped"] = nlohmann::json::array();
  for (const auto& d : dropped) j["dropped"].push_back({{"name", d.name}, {"modal_fraction", d.modal_fraction}});
  return j.dump(2);
}

PruneMask PruneMask::from_json(const std::string& text) {
  PruneMask mask;
  try {
    const auto j = nlohmann::json::parse(text);
    mask.kept = j.at("kept").get<std::vector<std::string>>();
    for (const auto& d : j.at("dropped")) {
      mask.dropped.push_back({d.at("name").get<std::string>(), d.at("modal_fraction").get<double>()});
    }
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("prune mask: ") + e.what());
  }
  return mask;
}

}  // namespace lingbridge::featx
