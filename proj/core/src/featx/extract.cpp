#include "lingbridge/featx/extract.hpp"

#include <algorithm>
#include <unordered_map>

#include "lingbridge/featx/lexical.hpp"
#include "lingbridge/featx/pos.hpp"
#include "lingbridge/featx/syntax.hpp"
#include "lingbridge/featx/tagset.hpp"

namespace lingbridge::featx {

namespace {

double safe_div(double num, double den) { return den == 0.0 ? 0.0 : num / den; }

std::vector<ParseTree> trees_of(const corpus::Narration& n) {
  std::vector<ParseTree> out;
  out.reserve(n.sentences.size());
  for (const auto& s : n.sentences) out.push_back(s.tree);
  return out;
}

void check_inputs(const corpus::Narration& narration, const CfgVocabulary& vocab, const FeatureRegistry& reg) {
  if (narration.lang != reg.language()) {
    throw InputError("narration '" + narration.id + "' is '" + std::string(corpus::to_string(narration.lang)) +
                     "', expected '" + std::string(corpus::to_string(reg.language())) + "'");
  }
  if (vocab.mode != reg.cfg_mode()) {
    throw InputError("CFG vocabulary mode '" + std::string(to_string(vocab.mode)) + "' does not match the " +
                     std::string(corpus::to_string(reg.language())) + " registry ('" +
                     std::string(to_string(reg.cfg_mode())) + "')");
  }
  if (vocab.size() > reg.cfg_slots()) {
    throw InputError("CFG vocabulary has " + std::to_string(vocab.size()) + " productions; the registry allows " +
                     std::to_string(reg.cfg_slots()));
  }
  if (narration.sentences.empty()) throw InputError("narration '" + narration.id + "' has no sentences");
}

/// Reorders `parts` to the registry's canonical base order, then appends
/// the CFG block.
FeatureVector assemble(const FeatureVector& parts, const FeatureRegistry& reg, const FeatureVector& cfg) {
  std::unordered_map<std::string_view, double> by_name;
  by_name.reserve(parts.size());
  for (std::size_t i = 0; i < parts.size(); ++i) by_name.emplace(parts.names[i], parts.values[i]);
  FeatureVector out;
  out.names.reserve(reg.base_ids().size() + cfg.size());
  out.values.reserve(reg.base_ids().size() + cfg.size());
  for (const auto& id : reg.base_ids()) {
    const auto it = by_name.find(id);
    if (it == by_name.end()) throw Error("registry feature '" + id + "' is not produced by the extractor");
    out.push(id, it->second);
  }
  out.append(cfg);
  return out;
}

double mean_of(const std::vector<double>& v) {
  if (v.empty()) return 0.0;
  double s = 0;
  for (double x : v) s += x;
  return s / static_cast<double>(v.size());
}

double median_of(std::vector<double> v) {
  if (v.empty()) return 0.0;
  std::sort(v.begin(), v.end());
  const std::size_t n = v.size();
  return n % 2 == 1 ? v[n / 2] : 0.5 * (v[n / 2 - 1] + v[n / 2]);
}

}  // namespace

std::size_t utf8_length(std::string_view text) {
  std::size_t n = 0;
  for (unsigned char c : text) n += (c & 0xC0u) != 0x80u ? 1 : 0;
  return n;
}

FeatureVector extract_english(const corpus::Narration& narration, const corpus::FrequencyLexicon& lexicon,
                              const CfgVocabulary& vocab) {
  const auto& reg = FeatureRegistry::english();
  const auto& tagset = Tagset::english();
  check_inputs(narration, vocab, reg);
  const TagCategory* nouns = tagset.find("noun");
  const TagCategory* verbs = tagset.find("verb");

  std::vector<std::string> words;
  std::vector<double> freq_all, freq_nouns, freq_verbs;
  double chars = 0;
  for (const auto& s : narration.sentences) {
    for (const auto& t : s.tokens) {
      if (tagset.is_punctuation(t.pos)) continue;
      words.push_back(t.surface);
      chars += static_cast<double>(utf8_length(t.surface));
      const double z = lexicon.lookup(t.surface);
      freq_all.push_back(z);
      if (nouns != nullptr && nouns->tags.contains(t.pos)) freq_nouns.push_back(z);
      if (verbs != nullptr && verbs->tags.contains(t.pos)) freq_verbs.push_back(z);
    }
  }
  const auto trees = trees_of(narration);
  const double n_words = static_cast<double>(words.size());

  FeatureVector parts;
  parts.push("num_words", n_words);
  parts.push("num_sentences", static_cast<double>(narration.sentences.size()));
  parts.push("mean_word_length", safe_div(chars, n_words));
  if (words.empty()) {
    // A narration of punctuation only has no vocabulary to measure.
    for (const auto& name : lexical_richness({"x"}).names) parts.push(name, 0.0);
  } else {
    parts.append(lexical_richness(words));
  }
  parts.push("mean_freq_all", mean_of(freq_all));
  parts.push("mean_freq_nouns", mean_of(freq_nouns));
  parts.push("mean_freq_verbs", mean_of(freq_verbs));
  parts.append(pos_counts(narration, tagset));
  parts.append(syntactic_complexity(trees, tagset));
  parts.append(phrase_statistics(trees, tagset));
  parts.append(tree_stats(trees));
  return assemble(parts, reg, cfg_block(trees, vocab));
}

FeatureVector extract_mandarin(const corpus::Narration& narration, const corpus::FrequencyLexicon& lexicon,
                               const CfgVocabulary& vocab) {
  const auto& reg = FeatureRegistry::mandarin();
  const auto& tagset = Tagset::mandarin();
  check_inputs(narration, vocab, reg);

  std::vector<std::string> words;
  std::vector<double> freqs;
  double chars = 0;
  for (const auto& s : narration.sentences) {
    for (const auto& t : s.tokens) {
      if (tagset.is_punctuation(t.pos)) continue;
      words.push_back(t.surface);
      chars += static_cast<double>(utf8_length(t.surface));
      freqs.push_back(lexicon.lookup(t.surface));
    }
  }
  const auto trees = trees_of(narration);
  const double n_sentences = static_cast<double>(narration.sentences.size());

  FeatureVector parts;
  parts.push("num_sentences", n_sentences);
  parts.push("num_characters", chars);
  parts.push("mean_sentence_length", safe_div(static_cast<double>(words.size()), n_sentences));
  parts.push("ttr", words.empty() ? 0.0 : type_token_ratio(words));
  parts.push("mean_freq", mean_of(freqs));
  parts.push("median_freq", median_of(freqs));
  parts.append(pos_counts(narration, tagset));
  parts.append(tree_stats(trees));
  return assemble(parts, reg, cfg_block(trees, vocab));
}

FeatureVector extract(const corpus::Narration& narration, const corpus::FrequencyLexicon& lexicon,
                      const CfgVocabulary& vocab) {
  return narration.lang == corpus::Language::en ? extract_english(narration, lexicon, vocab)
                                                : extract_mandarin(narration, lexicon, vocab);
}

FeatureMatrix extract_all(const std::vector<const corpus::Narration*>& narrations,
                          const corpus::FrequencyLexicon& lexicon, const CfgVocabulary& vocab, std::size_t jobs) {
  std::vector<FeatureVector> rows(narrations.size());
  parallel_for(narrations.size(), jobs, [&](std::size_t i) { rows[i] = extract(*narrations[i], lexicon, vocab); });
  std::vector<std::string> ids;
  ids.reserve(narrations.size());
  for (const auto* n : narrations) ids.push_back(n->id);
  if (rows.empty()) {
    FeatureMatrix m;
    return m;
  }
  return FeatureMatrix::from_rows(std::move(ids), rows);
}

FeatureMatrix extract_all(const std::vector<corpus::Narration>& narrations, const corpus::FrequencyLexicon& lexicon,
                          const CfgVocabulary& vocab, std::size_t jobs) {
  std::vector<const corpus::Narration*> ptrs;
  ptrs.reserve(narrations.size());
  for (const auto& n : narrations) ptrs.push_back(&n);
  return extract_all(ptrs, lexicon, vocab, jobs);
}

}  // namespace lingbridge::featx
