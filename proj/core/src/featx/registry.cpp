#include "lingbridge/featx/registry.hpp"

#include <sstream>
#include <unordered_set>

#include "lingbridge/embedded_data.hpp"

namespace lingbridge::featx {

std::string_view to_string(CfgMode mode) { return mode == CfgMode::ratio ? "ratio" : "count"; }

CfgMode parse_cfg_mode(std::string_view text) {
  if (text == "ratio") return CfgMode::ratio;
  if (text == "count") return CfgMode::count;
  throw InputError("unknown CFG mode '" + std::string(text) + "' (expected ratio or count)");
}

FeatureRegistry FeatureRegistry::parse(std::string_view text, std::string_view origin) {
  FeatureRegistry reg;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t line_no = 0;
  bool have_lang = false;
  bool have_cfg = false;
  std::unordered_set<std::string> seen;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string where = std::string(origin) + ":" + std::to_string(line_no);
    if (line.empty()) continue;
    std::istringstream words(line);
    std::string head;
    words >> head;
    if (head == "#version") {
      words >> reg.version_;
    } else if (head == "#language") {
      std::string code;
      words >> code;
      reg.language_ = corpus::parse_language(code);
      have_lang = true;
    } else if (head.front() == '#') {
      continue;
    } else if (head == "@cfg") {
      std::string mode;
      long long slots = -1;
      words >> mode >> slots;
      if (slots < 0) throw InputError(where + ": @cfg needs a mode and a slot count");
      reg.cfg_mode_ = parse_cfg_mode(mode);
      reg.cfg_slots_ = static_cast<std::size_t>(slots);
      have_cfg = true;
    } else {
      if (have_cfg) throw InputError(where + ": base features must precede @cfg");
      if (!seen.insert(head).second) throw InputError(where + ": duplicate feature id " + head);
      reg.base_ids_.push_back(head);
    }
  }
  if (reg.version_.empty() || !have_lang) throw InputError(std::string(origin) + ": missing #version or #language");
  return reg;
}

namespace {
FeatureRegistry load_embedded(const char* path) {
  auto text = data::embedded_file(path);
  if (!text) throw Error(std::string("missing embedded registry ") + path);
  return FeatureRegistry::parse(*text, path);
}
}  // namespace

const FeatureRegistry& FeatureRegistry::english() {
  static const FeatureRegistry r = load_embedded("registry/en_features.manifest");
  return r;
}

const FeatureRegistry& FeatureRegistry::mandarin() {
  static const FeatureRegistry r = load_embedded("registry/zh_features.manifest");
  return r;
}

const FeatureRegistry& FeatureRegistry::for_language(corpus::Language lang) {
  return lang == corpus::Language::en ? english() : mandarin();
}

}  // namespace lingbridge::featx
