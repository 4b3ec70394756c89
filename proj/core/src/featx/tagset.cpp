#include "lingbridge/featx/tagset.hpp"

#include <sstream>

#include "lingbridge/common.hpp"
#include "lingbridge/embedded_data.hpp"

namespace lingbridge::featx {

namespace {

std::vector<std::string> split_ws(std::string_view s) {
  std::vector<std::string> out;
  std::istringstream in{std::string(s)};
  std::string w;
  while (in >> w) out.push_back(w);
  return out;
}

std::vector<std::string> split_char(std::string_view s, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  for (;;) {
    auto pos = s.find(sep, start);
    out.emplace_back(s.substr(start, pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

Tagset load_embedded(const char* path) {
  auto text = data::embedded_file(path);
  if (!text) throw Error(std::string("missing embedded tagset ") + path);
  return Tagset::parse(*text, path);
}

}  // namespace

Tagset Tagset::parse(std::string_view text, std::string_view origin) {
  Tagset t;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string where = std::string(origin) + ":" + std::to_string(line_no);
    if (line.empty()) continue;
    if (line.front() == '#') {
      const auto words = split_ws(std::string_view(line).substr(1));
      if (words.size() == 2 && words[0] == "version") t.version_ = words[1];
      if (words.size() == 2 && words[0] == "ratio_base") {
        if (words[1] == "words") t.ratio_base_ = RatioBase::words;
        else if (words[1] == "tokens") t.ratio_base_ = RatioBase::tokens;
        else throw InputError(where + ": ratio_base must be words or tokens");
      }
      if (words.size() == 2 && words[0] == "per_tag") t.per_tag_ = words[1] == "yes";
      continue;
    }
    const auto cols = split_char(line, '\t');
    if (cols.size() < 2 || cols.size() > 3) throw InputError(where + ": expected category<TAB>tags[<TAB>constraint]");
    const auto tags = split_ws(cols[1]);
    if (cols[0] == "inventory") {
      t.inventory_ = tags;
      t.inventory_set_.insert(tags.begin(), tags.end());
      continue;
    }
    if (cols[0] == "punctuation") {
      t.punctuation_.insert(tags.begin(), tags.end());
      continue;
    }
    TagCategory cat;
    cat.name = cols[0];
    cat.tags.insert(tags.begin(), tags.end());
    if (cols.size() == 3) {
      const std::string& c = cols[2];
      if (c.rfind("words=", 0) == 0) {
        for (auto& w : split_char(std::string_view(c).substr(6), ',')) cat.words.insert(w);
      } else if (c.rfind("parent=", 0) == 0) {
        cat.parent = c.substr(7);
      } else {
        throw InputError(where + ": unknown constraint '" + c + "'");
      }
    }
    t.categories_.push_back(std::move(cat));
  }
  if (t.version_.empty()) throw InputError(std::string(origin) + ": missing #version");
  if (t.inventory_.empty()) throw InputError(std::string(origin) + ": missing inventory row");
  for (const auto& cat : t.categories_) {
    for (const auto& tag : cat.tags) {
      if (!t.inventory_set_.contains(tag)) {
        throw InputError(std::string(origin) + ": category " + cat.name + " uses tag " + tag + " outside the inventory");
      }
    }
  }
  return t;
}

const Tagset& Tagset::english() {
  static const Tagset t = load_embedded("tagsets/ptb_v1.tsv");
  return t;
}

const Tagset& Tagset::mandarin() {
  static const Tagset t = load_embedded("tagsets/ctb_v1.tsv");
  return t;
}

const TagCategory* Tagset::find(std::string_view name) const {
  for (const auto& c : categories_) {
    if (c.name == name) return &c;
  }
  return nullptr;
}

bool Tagset::known(std::string_view tag) const { return inventory_set_.contains(std::string(tag)); }

bool Tagset::is_punctuation(std::string_view tag) const { return punctuation_.contains(std::string(tag)); }

}  // namespace lingbridge::featx
