#include "lingbridge/corpus/narration.hpp"

#include <cmath>

namespace lingbridge::corpus {

std::string_view to_string(Language lang) { return lang == Language::en ? "en" : "zh"; }

Language parse_language(std::string_view code) {
  if (code == "en") return Language::en;
  if (code == "zh") return Language::zh;
  throw InputError("unknown language code '" + std::string(code) + "' (expected en or zh)");
}

std::size_t Narration::token_count() const {
  std::size_t n = 0;
  for (const auto& s : sentences) n += s.tokens.size();
  return n;
}

void validate(Narration& narration) {
  const std::string where = "narration '" + narration.id + "'";
  if (narration.sentences.empty()) throw InputError(where + ": no sentences");
  for (std::size_t i = 0; i < narration.sentences.size(); ++i) {
    Sentence& s = narration.sentences[i];
    const std::string sw = where + " sentence " + std::to_string(i);
    if (s.tokens.empty()) throw InputError(sw + ": no tokens");
    try {
      s.tree = featx::parse_bracketed(s.parse);
    } catch (const ParseError& e) {
      throw InputError(sw + ": bad parse: " + e.what());
    }
    const auto leaves = s.tree.yield();
    const auto tags = s.tree.preterminal_labels();
    bool match = leaves.size() == s.tokens.size() && tags.size() == s.tokens.size();
    for (std::size_t k = 0; match && k < s.tokens.size(); ++k) {
      match = leaves[k] == s.tokens[k].surface && tags[k] == s.tokens[k].pos;
    }
    if (!match) throw InputError(sw + ": parse leaves/tags do not match the token list");
  }
}

std::string_view to_string(Label label) { return label == Label::dementia ? "dementia" : "control"; }

Label parse_label(std::string_view text) {
  if (text == "dementia" || text == "1") return Label::dementia;
  if (text == "control" || text == "0") return Label::control;
  throw InputError("unknown label '" + std::string(text) + "' (expected dementia or control)");
}

std::string fold_case(std::string_view text) {
  std::string out(text);
  for (char& c : out) {
    if (c >= 'A' && c <= 'Z') c = static_cast<char>(c - 'A' + 'a');
  }
  return out;
}

void FrequencyLexicon::set(std::string_view token, double zipf) {
  if (!std::isfinite(zipf) || zipf < 0.0) {
    throw InputError("lexicon frequency for '" + std::string(token) + "' must be finite and >= 0");
  }
  table_[fold_case(token)] = zipf;
}

double FrequencyLexicon::lookup(std::string_view token) const {
  auto it = table_.find(fold_case(token));
  return it == table_.end() ? default_zipf_ : it->second;
}

bool FrequencyLexicon::contains(std::string_view token) const { return table_.contains(fold_case(token)); }

}  // namespace lingbridge::corpus
