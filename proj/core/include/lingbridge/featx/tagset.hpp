#pragma once

#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

namespace lingbridge::featx {

struct TagCategory {
  std::string name;
  std::unordered_set<std::string> tags;
  /// When non-empty, only tokens whose lowercased surface is listed count.
  std::unordered_set<std::string> words;
  /// When non-empty, only preterminals that are the first child of a node
  /// with this label count (e.g. IN heading SBAR).
  std::string parent;
};

/// POS category table loaded from a versioned TSV (see core/data/tagsets).
class Tagset {
 public:
  enum class RatioBase { words, tokens };

  static Tagset parse(std::string_view text, std::string_view origin);
  /// Shipped Penn Treebank table (ptb-1).
  static const Tagset& english();
  /// Shipped Penn Chinese Treebank table (ctb-1).
  static const Tagset& mandarin();

  const std::string& version() const noexcept { return version_; }
  const std::vector<std::string>& inventory() const noexcept { return inventory_; }
  const std::vector<TagCategory>& categories() const noexcept { return categories_; }
  const TagCategory* find(std::string_view name) const;

  bool known(std::string_view tag) const;
  bool is_punctuation(std::string_view tag) const;
  RatioBase ratio_base() const noexcept { return ratio_base_; }
  /// Whether every inventory tag gets its own count/ratio pair.
  bool per_tag() const noexcept { return per_tag_; }

 private:
  std::string version_;
  std::vector<std::string> inventory_;
  std::unordered_set<std::string> inventory_set_;
  std::unordered_set<std::string> punctuation_;
  std::vector<TagCategory> categories_;
  RatioBase ratio_base_ = RatioBase::words;
  bool per_tag_ = false;
};

}  // namespace lingbridge::featx
