#include "lingbridge/featx/syntax.hpp"

#include <algorithm>
#include <array>
#include <string_view>

namespace lingbridge::featx {

namespace {

double safe_div(double num, double den) { return den == 0.0 ? 0.0 : num / den; }

bool is_one_of(std::string_view label, std::initializer_list<std::string_view> set) {
  return std::find(set.begin(), set.end(), label) != set.end();
}

bool is_s_type(const ParseTree& n) { return !n.is_leaf() && is_one_of(n.label, {"S", "SINV", "SQ"}); }

bool has_child(const ParseTree& n, std::initializer_list<std::string_view> labels) {
  return std::any_of(n.children.begin(), n.children.end(),
                     [&](const ParseTree& c) { return !c.is_leaf() && is_one_of(c.label, labels); });
}

bool is_clause(const ParseTree& n) {
  return !n.is_leaf() && is_one_of(n.label, {"S", "SBAR", "SINV", "SQ"}) && has_child(n, {"VP"});
}

/// An S-type node joining at least two S-type children with a conjunction.
bool coordinates_clauses(const ParseTree& n) {
  if (!is_s_type(n) || !has_child(n, {"CC", "CONJP"})) return false;
  return std::count_if(n.children.begin(), n.children.end(), is_s_type) >= 2;
}

struct Tally {
  double clauses = 0, clause_len = 0;
  double dep_clauses = 0, dep_clause_len = 0;
  double coord_clauses = 0;
  double t_units = 0, t_unit_len = 0, complex_t_units = 0;
  double coord_phrases = 0, coord_phrase_len = 0;
  double complex_nominals = 0;
};

struct Walker {
  const Tagset& tagset;
  Tally tally;

  /// Counts clause-level patterns below `n`; returns the number of
  /// dependent clauses in the subtree.
  std::size_t visit(const ParseTree& n, const ParseTree* parent, bool under_sbar) {
    if (n.is_leaf() || n.is_preterminal()) return 0;
    std::size_t deps_here = 0;
    if (is_clause(n)) {
      const double len = static_cast<double>(word_length(n, tagset));
      tally.clauses += 1;
      tally.clause_len += len;
      if (under_sbar) {
        tally.dep_clauses += 1;
        tally.dep_clause_len += len;
        deps_here = 1;
      }
      if (parent != nullptr && coordinates_clauses(*parent)) tally.coord_clauses += 1;
    }
    if (is_one_of(n.label, {"NP", "VP", "ADJP", "ADVP"}) && has_child(n, {"CC"})) {
      tally.coord_phrases += 1;
      tally.coord_phrase_len += static_cast<double>(word_length(n, tagset));
    }
    if (n.label == "NP" && has_child(n, {"JJ", "JJR", "JJS", "ADJP", "POS", "PRP$", "PP", "SBAR", "VP", "S"})) {
      tally.complex_nominals += 1;
    }
    const bool child_under_sbar = under_sbar || n.label == "SBAR";
    for (const auto& c : n.children) deps_here += visit(c, &n, child_under_sbar);
    return deps_here;
  }

  void collect_t_units(const ParseTree& n) {
    if (n.is_leaf() || n.is_preterminal() || n.label == "SBAR") return;
    if (is_s_type(n)) {
      if (coordinates_clauses(n)) {
        for (const auto& c : n.children) {
          if (is_s_type(c)) collect_t_units(c);
        }
        return;
      }
      tally.t_units += 1;
      tally.t_unit_len += static_cast<double>(word_length(n, tagset));
      Walker inner{tagset, {}};
      if (inner.visit(n, nullptr, false) > 0) tally.complex_t_units += 1;
      return;
    }
    for (const auto& c : n.children) collect_t_units(c);
  }
};

}  // namespace

std::size_t word_length(const ParseTree& node, const Tagset& tagset) {
  if (node.is_preterminal()) return tagset.is_punctuation(node.label) ? 0 : 1;
  if (node.is_leaf()) return 1;
  std::size_t n = 0;
  for (const auto& c : node.children) n += word_length(c, tagset);
  return n;
}

FeatureVector syntactic_complexity(const std::vector<ParseTree>& trees, const Tagset& tagset) {
  Walker w{tagset, {}};
  double words = 0;
  for (const auto& t : trees) {
    w.visit(t, nullptr, false);
    w.collect_t_units(t);
    words += static_cast<double>(word_length(t, tagset));
  }
  const Tally& s = w.tally;
  const double sentences = static_cast<double>(trees.size());

  FeatureVector v;
  v.push("num_clauses", s.clauses);
  v.push("num_t_units", s.t_units);
  v.push("num_dependent_clauses", s.dep_clauses);
  v.push("num_coordinate_phrases", s.coord_phrases);
  v.push("num_complex_nominals", s.complex_nominals);
  v.push("num_complex_t_units", s.complex_t_units);
  v.push("mean_length_clause", safe_div(s.clause_len, s.clauses));
  v.push("mean_length_t_unit", safe_div(s.t_unit_len, s.t_units));
  v.push("mean_length_dependent_clause", safe_div(s.dep_clause_len, s.dep_clauses));
  v.push("mean_length_coordinate_phrase", safe_div(s.coord_phrase_len, s.coord_phrases));
  v.push("mean_length_sentence", safe_div(words, sentences));
  v.push("clauses_per_sentence", safe_div(s.clauses, sentences));
  v.push("clauses_per_t_unit", safe_div(s.clauses, s.t_units));
  v.push("dependent_clauses_per_clause", safe_div(s.dep_clauses, s.clauses));
  v.push("dependent_clauses_per_t_unit", safe_div(s.dep_clauses, s.t_units));
  v.push("t_units_per_sentence", safe_div(s.t_units, sentences));
  v.push("complex_t_units_per_t_unit", safe_div(s.complex_t_units, s.t_units));
  v.push("coordinate_phrases_per_t_unit", safe_div(s.coord_phrases, s.t_units));
  v.push("coordinate_phrases_per_clause", safe_div(s.coord_phrases, s.clauses));
  v.push("complex_nominals_per_t_unit", safe_div(s.complex_nominals, s.t_units));
  v.push("complex_nominals_per_clause", safe_div(s.complex_nominals, s.clauses));
  v.push("subordinate_coordinate_ratio", safe_div(s.dep_clauses, s.coord_clauses));
  return v;
}

FeatureVector phrase_statistics(const std::vector<ParseTree>& trees, const Tagset& tagset) {
  static constexpr std::array<std::string_view, 6> kLabels = {"NP", "VP", "PP", "ADJP", "ADVP", "SBAR"};
  std::array<double, kLabels.size()> count{};
  std::array<double, kLabels.size()> length{};

  auto walk = [&](auto&& self, const ParseTree& n) -> void {
    if (n.is_leaf() || n.is_preterminal()) return;
    for (std::size_t i = 0; i < kLabels.size(); ++i) {
      if (n.label == kLabels[i]) {
        count[i] += 1;
        length[i] += static_cast<double>(word_length(n, tagset));
      }
    }
    for (const auto& c : n.children) self(self, c);
  };
  for (const auto& t : trees) walk(walk, t);

  FeatureVector v;
  for (std::size_t i = 0; i < kLabels.size(); ++i) {
    const std::string label(kLabels[i]);
    v.push("num_" + label, count[i]);
    v.push("total_length_" + label, length[i]);
    v.push("mean_length_" + label, safe_div(length[i], count[i]));
  }
  return v;
}

FeatureVector tree_stats(const std::vector<ParseTree>& trees) {
  std::vector<double> heights;
  heights.reserve(trees.size());
  for (const auto& t : trees) heights.push_back(static_cast<double>(t.height()));
  FeatureVector v;
  if (heights.empty()) {
    v.push("tree_height_max", 0.0);
    v.push("tree_height_median", 0.0);
    v.push("tree_height_mean", 0.0);
    return v;
  }
  std::sort(heights.begin(), heights.end());
  const std::size_t n = heights.size();
  const double median = n % 2 == 1 ? heights[n / 2] : 0.5 * (heights[n / 2 - 1] + heights[n / 2]);
  double sum = 0;
  for (double h : heights) sum += h;
  v.push("tree_height_max", heights.back());
  v.push("tree_height_median", median);
  v.push("tree_height_mean", sum / static_cast<double>(n));
  return v;
}

}  // namespace lingbridge::featx
