#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace lingbridge::featx {

/// Constituency tree node. Leaves have no children and carry the surface
/// form in `token` (their `label` is empty); every other node carries a
/// nonterminal or POS label.
struct ParseTree {
  std::string label;
  std::string token;
  std::vector<ParseTree> children;

  bool is_leaf() const noexcept { return children.empty(); }
  /// A node whose only child is a leaf; its label is the POS tag.
  bool is_preterminal() const noexcept { return children.size() == 1 && children.front().is_leaf(); }

  /// Leaf = 0, preterminal = 1, otherwise 1 + tallest child.
  std::size_t height() const;
  std::vector<std::string> yield() const;
  std::vector<std::string> preterminal_labels() const;
  /// Serializes back to Penn-Treebank bracketed form.
  std::string to_string() const;

  friend bool operator==(const ParseTree&, const ParseTree&) = default;
};

/// Reads one Penn-Treebank style bracketed tree, e.g. "(NP (DT the) (NN dog))".
/// A single unlabeled wrapper around one tree ("( (S ...) )") is removed.
/// Throws ParseError with the byte offset of the problem.
ParseTree parse_bracketed(std::string_view text);

}  // namespace lingbridge::featx
