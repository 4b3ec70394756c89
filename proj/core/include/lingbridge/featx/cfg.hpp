#pragma once

#include <map>
#include <string>
#include <vector>

#include "lingbridge/corpus/narration.hpp"
#include "lingbridge/featx/feature_matrix.hpp"
#include "lingbridge/featx/parse_tree.hpp"
#include "lingbridge/featx/registry.hpp"

namespace lingbridge::featx {

/// "LHS -> RHS1 RHS2 ..." for an internal, non-preterminal node.
std::string production_string(const ParseTree& node);

/// Occurrences of every internal-node rewrite. Preterminal -> token
/// rewrites are not productions.
std::map<std::string, std::size_t> count_productions(const std::vector<ParseTree>& trees);

/// Ordered production list fixing the CFG block of a feature vector.
struct CfgVocabulary {
  std::vector<std::string> productions;
  CfgMode mode = CfgMode::ratio;

  std::size_t size() const noexcept { return productions.size(); }
  /// Column name of production i: "cfg:" + production.
  std::string feature_name(std::size_t i) const;

  std::string to_json() const;
  /// Throws InputError on malformed documents or duplicate productions.
  static CfgVocabulary from_json(const std::string& text);
};

/// The `top_k` most frequent productions over all narrations, ties broken
/// by production string. Returns fewer when the corpus has fewer.
CfgVocabulary build_cfg_vocab(const std::vector<corpus::Narration>& narrations, std::size_t top_k, CfgMode mode);
CfgVocabulary build_cfg_vocab(const std::vector<const corpus::Narration*>& narrations, std::size_t top_k, CfgMode mode);

/// The CFG block of one narration under `vocab`: production count divided
/// by the narration's total production count (ratio) or the raw count.
FeatureVector cfg_block(const std::vector<ParseTree>& trees, const CfgVocabulary& vocab);

}  // namespace lingbridge::featx
