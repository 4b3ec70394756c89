#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "lingbridge/corpus/narration.hpp"

namespace lingbridge::featx {

/// How the CFG production block is valued: share of all productions in the
/// narration (English) or absolute occurrence count (Mandarin).
enum class CfgMode { ratio, count };

std::string_view to_string(CfgMode mode);
CfgMode parse_cfg_mode(std::string_view text);

/// Canonical column order for one language, read from a manifest file:
/// one base feature id per line, then `@cfg <mode> <slots>`.
class FeatureRegistry {
 public:
  static FeatureRegistry parse(std::string_view text, std::string_view origin);
  /// 85 base features + 100 CFG ratios = 185 columns.
  static const FeatureRegistry& english();
  /// 83 base features + 60 CFG counts = 143 columns.
  static const FeatureRegistry& mandarin();
  static const FeatureRegistry& for_language(corpus::Language lang);

  const std::string& version() const noexcept { return version_; }
  corpus::Language language() const noexcept { return language_; }
  const std::vector<std::string>& base_ids() const noexcept { return base_ids_; }
  CfgMode cfg_mode() const noexcept { return cfg_mode_; }
  std::size_t cfg_slots() const noexcept { return cfg_slots_; }
  std::size_t full_width() const noexcept { return base_ids_.size() + cfg_slots_; }

 private:
  std::string version_;
  corpus::Language language_ = corpus::Language::en;
  std::vector<std::string> base_ids_;
  CfgMode cfg_mode_ = CfgMode::ratio;
  std::size_t cfg_slots_ = 0;
};

}  // namespace lingbridge::featx
