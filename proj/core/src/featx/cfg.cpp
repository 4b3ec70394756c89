#include "lingbridge/featx/cfg.hpp"

#include <algorithm>
#include <unordered_set>

#include <nlohmann/json.hpp>

namespace lingbridge::featx {

std::string production_string(const ParseTree& node) {
  std::string out = node.label + " ->";
  for (const auto& c : node.children) {
    out += ' ';
    out += c.is_leaf() ? c.token : c.label;
  }
  return out;
}

namespace {
void count_into(const ParseTree& node, std::map<std::string, std::size_t>& counts) {
  if (node.is_leaf() || node.is_preterminal()) return;
  ++counts[production_string(node)];
  for (const auto& c : node.children) count_into(c, counts);
}
}  // namespace

std::map<std::string, std::size_t> count_productions(const std::vector<ParseTree>& trees) {
  std::map<std::string, std::size_t> counts;
  for (const auto& t : trees) count_into(t, counts);
  return counts;
}

std::string CfgVocabulary::feature_name(std::size_t i) const { return "cfg:" + productions.at(i); }

std::string CfgVocabulary::to_json() const {
  nlohmann::json j;
  j["mode"] = std::string(to_string(mode));
  j["productions"] = productions;
  return j.dump(2);
}

CfgVocabulary CfgVocabulary::from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("CFG vocabulary: ") + e.what());
  }
  if (!j.is_object() || !j.contains("mode") || !j.contains("productions") || !j["mode"].is_string() ||
      !j["productions"].is_array()) {
    throw InputError("CFG vocabulary: expected {\"mode\": ..., \"productions\": [...]}");
  }
  CfgVocabulary v;
  v.mode = parse_cfg_mode(j["mode"].get<std::string>());
  std::unordered_set<std::string> seen;
  for (const auto& p : j["productions"]) {
    if (!p.is_string()) throw InputError("CFG vocabulary: productions must be strings");
    auto s = p.get<std::string>();
    if (!seen.insert(s).second) throw InputError("CFG vocabulary: duplicate production '" + s + "'");
    v.productions.push_back(std::move(s));
  }
  return v;
}

CfgVocabulary build_cfg_vocab(const std::vector<const corpus::Narration*>& narrations, std::size_t top_k,
                              CfgMode mode) {
  if (narrations.empty()) throw InputError("build_cfg_vocab: no narrations");
  std::map<std::string, std::size_t> total;
  for (const auto* n : narrations) {
    for (const auto& s : n->sentences) count_into(s.tree, total);
  }
  std::vector<std::pair<std::string, std::size_t>> ranked(total.begin(), total.end());
  std::stable_sort(ranked.begin(), ranked.end(), [](const auto& a, const auto& b) {
    if (a.second != b.second) return a.second > b.second;
    return a.first < b.first;
  });
  CfgVocabulary v;
  v.mode = mode;
  for (std::size_t i = 0; i < ranked.size() && i < top_k; ++i) v.productions.push_back(ranked[i].first);
  return v;
}

CfgVocabulary build_cfg_vocab(const std::vector<corpus::Narration>& narrations, std::size_t top_k, CfgMode mode) {
  std::vector<const corpus::Narration*> ptrs;
  ptrs.reserve(narrations.size());
  for (const auto& n : narrations) ptrs.push_back(&n);
  return build_cfg_vocab(ptrs, top_k, mode);
}

FeatureVector cfg_block(const std::vector<ParseTree>& trees, const CfgVocabulary& vocab) {
  const auto counts = count_productions(trees);
  double total = 0;
  for (const auto& [p, c] : counts) total += static_cast<double>(c);
  FeatureVector v;
  for (std::size_t i = 0; i < vocab.size(); ++i) {
    const auto it = counts.find(vocab.productions[i]);
    const double c = it == counts.end() ? 0.0 : static_cast<double>(it->second);
    double value = c;
    if (vocab.mode == CfgMode::ratio) value = total == 0 ? 0.0 : c / total;
    v.push(vocab.feature_name(i), value);
  }
  return v;
}

}  // namespace lingbridge::featx
