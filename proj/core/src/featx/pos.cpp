#include "lingbridge/featx/pos.hpp"

#include <unordered_map>

#include "featx/tree_walk.hpp"

namespace lingbridge::featx {

namespace {
double safe_div(double num, double den) { return den == 0.0 ? 0.0 : num / den; }

bool category_matches(const TagCategory& cat, const detail::PreterminalSite& site) {
  const std::string& tag = site.node->label;
  if (!cat.tags.contains(tag)) return false;
  if (!cat.words.empty() && !cat.words.contains(corpus::fold_case(site.node->children.front().token))) return false;
  if (!cat.parent.empty()) {
    if (site.parent == nullptr || site.parent->label != cat.parent || site.child_index != 0) return false;
  }
  return true;
}
}  // namespace

FeatureVector pos_counts(const corpus::Narration& narration, const Tagset& tagset) {
  const auto& cats = tagset.categories();
  std::vector<double> cat_counts(cats.size(), 0.0);
  std::unordered_map<std::string, double> tag_counts;
  double other = 0.0;
  double words = 0.0;
  double tokens = 0.0;

  for (const auto& sentence : narration.sentences) {
    for (const auto& site : detail::preterminal_sites(sentence.tree)) {
      const std::string& tag = site.node->label;
      tokens += 1.0;
      if (tagset.is_punctuation(tag)) {
        tag_counts[tag] += 1.0;
        continue;
      }
      words += 1.0;
      if (!tagset.known(tag)) {
        other += 1.0;
        continue;
      }
      tag_counts[tag] += 1.0;
      for (std::size_t c = 0; c < cats.size(); ++c) {
        if (category_matches(cats[c], site)) cat_counts[c] += 1.0;
      }
    }
  }

  const double base = tagset.ratio_base() == Tagset::RatioBase::words ? words : tokens;
  FeatureVector v;
  for (std::size_t c = 0; c < cats.size(); ++c) {
    v.push("count_" + cats[c].name, cat_counts[c]);
    v.push("ratio_" + cats[c].name, safe_div(cat_counts[c], base));
  }
  v.push("count_other", other);
  v.push("ratio_other", safe_div(other, base));
  if (tagset.per_tag()) {
    for (const auto& tag : tagset.inventory()) {
      auto it = tag_counts.find(tag);
      const double count = it == tag_counts.end() ? 0.0 : it->second;
      v.push("count_" + tag, count);
      v.push("ratio_" + tag, safe_div(count, base));
    }
  }
  auto count_of = [&](std::string_view name) {
    for (std::size_t c = 0; c < cats.size(); ++c) {
      if (cats[c].name == name) return cat_counts[c];
    }
    return 0.0;
  };
  v.push("pronoun_noun_ratio", safe_div(count_of("pronoun"), count_of("noun")));
  v.push("noun_verb_ratio", safe_div(count_of("noun"), count_of("verb")));
  return v;
}

}  // namespace lingbridge::featx
