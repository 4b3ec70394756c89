#include "lingbridge/featx/lexical.hpp"

#include <cmath>
#include <unordered_map>

#include "lingbridge/corpus/narration.hpp"

namespace lingbridge::featx {

namespace {
std::vector<std::string> folded(const std::vector<std::string>& tokens) {
  std::vector<std::string> out;
  out.reserve(tokens.size());
  for (const auto& t : tokens) out.push_back(corpus::fold_case(t));
  return out;
}

double ttr_of_folded(const std::vector<std::string>& tokens) {
  if (tokens.empty()) return 0.0;
  std::unordered_map<std::string, std::size_t> counts;
  for (const auto& t : tokens) ++counts[t];
  return static_cast<double>(counts.size()) / static_cast<double>(tokens.size());
}

double mattr_of_folded(const std::vector<std::string>& tokens, std::size_t window) {
  const std::size_t n = tokens.size();
  if (n == 0 || window == 0) return 0.0;
  if (n <= window) return ttr_of_folded(tokens);
  std::unordered_map<std::string_view, std::size_t> counts;
  std::size_t types = 0;
  for (std::size_t i = 0; i < window; ++i) {
    if (counts[tokens[i]]++ == 0) ++types;
  }
  double sum = static_cast<double>(types);
  for (std::size_t i = window; i < n; ++i) {
    if (--counts[tokens[i - window]] == 0) --types;
    if (counts[tokens[i]]++ == 0) ++types;
    sum += static_cast<double>(types);
  }
  const double windows = static_cast<double>(n - window + 1);
  return sum / windows / static_cast<double>(window);
}
}  // namespace

double type_token_ratio(const std::vector<std::string>& tokens) { return ttr_of_folded(folded(tokens)); }

double moving_average_ttr(const std::vector<std::string>& tokens, std::size_t window) {
  return mattr_of_folded(folded(tokens), window);
}

double honore_statistic(std::size_t n_tokens, std::size_t n_types, std::size_t n_hapax) {
  if (n_tokens == 0 || n_types == 0) return 0.0;
  const double numerator = 100.0 * std::log(static_cast<double>(n_tokens));
  double denom = 1.0 - static_cast<double>(n_hapax) / static_cast<double>(n_types);
  if (denom < kHonoreEpsilon) denom = kHonoreEpsilon;
  return numerator / denom;
}

double brunet_index(std::size_t n_tokens, std::size_t n_types) {
  if (n_tokens == 0 || n_types == 0) return 0.0;
  return std::pow(static_cast<double>(n_tokens), std::pow(static_cast<double>(n_types), -0.165));
}

FeatureVector lexical_richness(const std::vector<std::string>& tokens) {
  const auto words = folded(tokens);
  std::unordered_map<std::string, std::size_t> counts;
  for (const auto& w : words) ++counts[w];
  std::size_t hapax = 0;
  for (const auto& [w, c] : counts) hapax += c == 1 ? 1 : 0;

  FeatureVector v;
  v.push("ttr", ttr_of_folded(words));
  for (std::size_t w : kMattrWindows) v.push("mattr_" + std::to_string(w), mattr_of_folded(words, w));
  v.push("honore", honore_statistic(words.size(), counts.size(), hapax));
  v.push("brunet", brunet_index(words.size(), counts.size()));
  return v;
}

}  // namespace lingbridge::featx
