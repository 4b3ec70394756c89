#include "lingbridge/featx/parse_tree.hpp"

#include <algorithm>
#include <memory>

#include "lingbridge/common.hpp"

namespace lingbridge::featx {

namespace {

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\n' || c == '\r'; }
bool is_delim(char c) { return is_space(c) || c == '(' || c == ')'; }

void collect_yield(const ParseTree& t, std::vector<std::string>& out) {
  if (t.is_leaf()) {
    out.push_back(t.token);
    return;
  }
  for (const auto& c : t.children) collect_yield(c, out);
}

void collect_preterminals(const ParseTree& t, std::vector<std::string>& out) {
  if (t.is_preterminal()) {
    out.push_back(t.label);
    return;
  }
  for (const auto& c : t.children) collect_preterminals(c, out);
}

void write_tree(const ParseTree& t, std::string& out) {
  if (t.is_leaf()) {
    out += t.token;
    return;
  }
  out += '(';
  out += t.label;
  for (const auto& c : t.children) {
    out += ' ';
    write_tree(c, out);
  }
  out += ')';
}

}  // namespace

std::size_t ParseTree::height() const {
  if (is_leaf()) return 0;
  std::size_t tallest = 0;
  for (const auto& c : children) tallest = std::max(tallest, c.height());
  return tallest + 1;
}

std::vector<std::string> ParseTree::yield() const {
  std::vector<std::string> out;
  collect_yield(*this, out);
  return out;
}

std::vector<std::string> ParseTree::preterminal_labels() const {
  std::vector<std::string> out;
  collect_preterminals(*this, out);
  return out;
}

std::string ParseTree::to_string() const {
  std::string out;
  write_tree(*this, out);
  return out;
}

ParseTree parse_bracketed(std::string_view text) {
  std::size_t pos = 0;
  const std::size_t n = text.size();
  auto skip_space = [&] {
    while (pos < n && is_space(text[pos])) ++pos;
  };

  skip_space();
  if (pos == n) throw ParseError("empty tree", pos);
  if (text[pos] != '(') throw ParseError("expected '('", pos);

  // Explicit stack keeps deep trees off the call stack.
  std::vector<std::unique_ptr<ParseTree>> stack;
  std::vector<std::size_t> open_offsets;
  std::unique_ptr<ParseTree> root;

  while (pos < n && !root) {
    const char c = text[pos];
    if (is_space(c)) {
      ++pos;
    } else if (c == '(') {
      open_offsets.push_back(pos);
      ++pos;
      skip_space();
      std::size_t start = pos;
      while (pos < n && !is_delim(text[pos])) ++pos;
      auto node = std::make_unique<ParseTree>();
      node->label = std::string(text.substr(start, pos - start));
      stack.push_back(std::move(node));
    } else if (c == ')') {
      if (stack.empty()) throw ParseError("unbalanced ')'", pos);
      std::unique_ptr<ParseTree> node = std::move(stack.back());
      stack.pop_back();
      const std::size_t opened = open_offsets.back();
      open_offsets.pop_back();
      if (node->children.empty()) throw ParseError("empty constituent", opened);
      ++pos;
      if (stack.empty()) {
        root = std::move(node);
      } else {
        stack.back()->children.push_back(std::move(*node));
      }
    } else {
      std::size_t start = pos;
      while (pos < n && !is_delim(text[pos])) ++pos;
      ParseTree leaf;
      leaf.token = std::string(text.substr(start, pos - start));
      stack.back()->children.push_back(std::move(leaf));
    }
  }

  if (!root) throw ParseError("unbalanced: missing ')'", n);
  skip_space();
  if (pos != n) throw ParseError("trailing content after tree", pos);

  if (root->label.empty()) {
    if (root->children.size() == 1 && !root->children.front().is_leaf()) {
      ParseTree inner = std::move(root->children.front());
      return inner;
    }
    throw ParseError("unlabeled constituent", 0);
  }
  return std::move(*root);
}

}  // namespace lingbridge::featx
