#pragma once

#include <vector>

#include "lingbridge/featx/parse_tree.hpp"

namespace lingbridge::featx::detail {

struct PreterminalSite {
  const ParseTree* node = nullptr;
  const ParseTree* parent = nullptr;
  std::size_t child_index = 0;
};

inline void collect_sites(const ParseTree& t, const ParseTree* parent, std::size_t index,
                          std::vector<PreterminalSite>& out) {
  if (t.is_preterminal()) {
    out.push_back({&t, parent, index});
    return;
  }
  for (std::size_t i = 0; i < t.children.size(); ++i) collect_sites(t.children[i], &t, i, out);
}

/// Preterminals of a tree in yield order, each with its parent node.
inline std::vector<PreterminalSite> preterminal_sites(const ParseTree& t) {
  std::vector<PreterminalSite> out;
  collect_sites(t, nullptr, 0, out);
  return out;
}

}  // namespace lingbridge::featx::detail
