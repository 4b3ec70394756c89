#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <set>

#include "corpus_gen.hpp"
#include "lingbridge/featx/cfg.hpp"
#include "lingbridge/featx/extract.hpp"
#include "lingbridge/featx/lexical.hpp"
#include "lingbridge/featx/pos.hpp"
#include "lingbridge/featx/prune.hpp"
#include "lingbridge/featx/registry.hpp"
#include "lingbridge/featx/syntax.hpp"
#include "lingbridge/featx/tagset.hpp"

using namespace lingbridge;
using namespace lingbridge::featx;
using corpus::Language;
using corpus::Narration;

namespace {

void collect_tokens(const ParseTree& t, std::vector<corpus::Token>& out) {
  if (t.is_preterminal()) {
    out.push_back({t.children[0].token, t.label});
    return;
  }
  for (const auto& c : t.children) collect_tokens(c, out);
}

Narration narration(Language lang, const std::vector<std::string>& parses) {
  Narration n;
  n.id = "fixture";
  n.lang = lang;
  for (const auto& p : parses) {
    corpus::Sentence s;
    s.parse = p;
    collect_tokens(parse_bracketed(p), s.tokens);
    n.sentences.push_back(s);
  }
  corpus::validate(n);
  return n;
}

std::vector<ParseTree> trees(const std::vector<std::string>& parses) {
  std::vector<ParseTree> out;
  for (const auto& p : parses) out.push_back(parse_bracketed(p));
  return out;
}

const std::string kDogSawCat = "(S (NP (DT the) (NN dog)) (VP (VBD saw) (NP (DT the) (NN cat))))";
const std::string kSaidThat = "(S (NP (PRP he)) (VP (VBD said) (SBAR (IN that) (S (NP (PRP she)) (VP (VBD left))))))";

std::size_t internal_nodes(const ParseTree& t) {
  if (t.is_leaf() || t.is_preterminal()) return 0;
  std::size_t n = 1;
  for (const auto& c : t.children) n += internal_nodes(c);
  return n;
}

std::vector<Narration> generated(std::size_t n, std::uint64_t seed, Language lang) {
  Rng rng(seed);
  std::vector<Narration> out;
  for (std::size_t i = 0; i < n; ++i) {
    auto style = testgen::style_for(rng.uniform01());
    auto id = "g" + std::to_string(i);
    out.push_back(lang == Language::en ? testgen::english(rng, id, style) : testgen::mandarin(rng, id, style));
  }
  return out;
}

}  // namespace

// -- lexical richness ---------------------------------------------------------

TEST(Lexical, TypeTokenRatio) { EXPECT_DOUBLE_EQ(type_token_ratio({"a", "b", "a", "c"}), 0.75); }

TEST(Lexical, HonoreHandValue) {
  // N = 5, V = 4, V1 = 3: 100 ln 5 / (1 - 3/4).
  EXPECT_NEAR(honore_statistic(5, 4, 3), 643.78, 0.01);
  auto v = lexical_richness({"a", "b", "c", "d", "A"});
  EXPECT_NEAR(v.at("honore"), 643.78, 0.01);
}

TEST(Lexical, BrunetHandValue) {
  EXPECT_NEAR(brunet_index(5, 4), 3.598, 0.001);
  EXPECT_NEAR(lexical_richness({"a", "b", "c", "d", "a"}).at("brunet"), 3.598, 0.001);
}

TEST(Lexical, HonoreCappedWhenAllHapax) {
  double capped = 100.0 * std::log(3.0) / kHonoreEpsilon;
  EXPECT_DOUBLE_EQ(honore_statistic(3, 3, 3), capped);
  EXPECT_TRUE(std::isfinite(lexical_richness({"x", "y", "z"}).at("honore")));
}

TEST(Lexical, MovingAverageMatchesBruteForce) {
  Rng rng(5);
  std::vector<std::string> tokens;
  for (int i = 0; i < 73; ++i) tokens.push_back(std::string(1, static_cast<char>('a' + rng.uniform_index(12))));
  for (std::size_t w : kMattrWindows) {
    double sum = 0.0;
    std::size_t windows = tokens.size() - w + 1;
    for (std::size_t s = 0; s < windows; ++s) {
      std::set<std::string> types(tokens.begin() + s, tokens.begin() + s + w);
      sum += static_cast<double>(types.size()) / static_cast<double>(w);
    }
    EXPECT_NEAR(moving_average_ttr(tokens, w), sum / windows, 1e-12) << "window " << w;
  }
}

TEST(Lexical, ShortTextIsOneWindow) {
  std::vector<std::string> t{"a", "b", "a"};
  EXPECT_DOUBLE_EQ(moving_average_ttr(t, 10), type_token_ratio(t));
}

// -- trees and productions ------------------------------------------------------

TEST(TreeStats, HeightsTwoAndFour) {
  auto v = tree_stats(trees({"(NP (DT the) (NN dog))", "(S (NP (PRP he)) (VP (VBD saw) (NP (DT the) (NN cat))))"}));
  EXPECT_EQ(v.at("tree_height_max"), 4.0);
  EXPECT_EQ(v.at("tree_height_median"), 3.0);
  EXPECT_EQ(v.at("tree_height_mean"), 3.0);
}

TEST(TreeStats, SingleTree) {
  auto v = tree_stats(trees({kDogSawCat}));
  EXPECT_EQ(v.at("tree_height_max"), v.at("tree_height_median"));
  EXPECT_EQ(v.at("tree_height_max"), v.at("tree_height_mean"));
}

TEST(Productions, NounPhrase) {
  auto c = count_productions(trees({"(NP (DT the) (NN dog))"}));
  EXPECT_EQ(c, (std::map<std::string, std::size_t>{{"NP -> DT NN", 1}}));
}

TEST(Productions, IdenticalSentencesDouble) {
  auto once = count_productions(trees({kDogSawCat}));
  auto twice = count_productions(trees({kDogSawCat, kDogSawCat}));
  ASSERT_EQ(once.size(), twice.size());
  for (const auto& [p, n] : once) EXPECT_EQ(twice.at(p), 2 * n);
}

TEST(Productions, MandarinHandEnumeration) {
  auto c = count_productions(trees({"(S (NP (PN 他)) (VP (VV 跑)))"}));
  EXPECT_EQ(c, (std::map<std::string, std::size_t>{{"S -> NP VP", 1}, {"NP -> PN", 1}, {"VP -> VV", 1}}));
}

TEST(Productions, TotalEqualsInternalNodes) {
  for (const auto& n : generated(40, 8, Language::en)) {
    std::vector<ParseTree> ts;
    std::size_t nodes = 0;
    for (const auto& s : n.sentences) {
      ts.push_back(s.tree);
      nodes += internal_nodes(s.tree);
    }
    std::size_t total = 0;
    for (const auto& [p, c] : count_productions(ts)) total += c;
    EXPECT_EQ(total, nodes);
  }
}

TEST(CfgVocab, TopTwoOfThree) {
  auto n = narration(Language::zh, {"(IP (NP (PN 他)) (VP (VV 跑)))", "(IP (NP (PN 她)) (VP (VV 看)))",
                                    "(IP (NP (PN 我)) (VP (VA 好)))"});
  auto v = build_cfg_vocab(std::vector<Narration>{n}, 2, CfgMode::count);
  // IP -> NP VP: 3, NP -> PN: 3, VP -> VV: 2, VP -> VA: 1
  EXPECT_EQ(v.productions, (std::vector<std::string>{"IP -> NP VP", "NP -> PN"}));
}

TEST(CfgVocab, TieBrokenLexicographically) {
  auto n = narration(Language::zh, {"(IP (NP (PN 他)) (VP (VV 跑)))"});
  auto v = build_cfg_vocab(std::vector<Narration>{n}, 3, CfgMode::count);
  EXPECT_EQ(v.productions, (std::vector<std::string>{"IP -> NP VP", "NP -> PN", "VP -> VV"}));
}

TEST(CfgVocab, FewerProductionsThanSlots) {
  auto n = narration(Language::en, {"(NP (DT the) (NN dog))"});
  EXPECT_EQ(build_cfg_vocab(std::vector<Narration>{n}, 100, CfgMode::ratio).size(), 1u);
}

TEST(CfgVocab, SixtyMostFrequentMatchFullSort) {
  auto corpus = generated(150, 11, Language::zh);
  auto vocab = build_cfg_vocab(corpus, 60, CfgMode::count);
  std::map<std::string, std::size_t> counts;
  for (const auto& n : corpus) {
    std::vector<ParseTree> ts;
    for (const auto& s : n.sentences) ts.push_back(s.tree);
    for (const auto& [p, c] : count_productions(ts)) counts[p] += c;
  }
  std::vector<std::pair<std::string, std::size_t>> sorted(counts.begin(), counts.end());
  std::stable_sort(sorted.begin(), sorted.end(), [](const auto& a, const auto& b) { return a.second > b.second; });
  ASSERT_EQ(vocab.size(), 60u);
  for (std::size_t i = 0; i < 60; ++i) EXPECT_EQ(vocab.productions[i], sorted[i].first);
  for (std::size_t i = 1; i < 60; ++i) EXPECT_GE(counts[vocab.productions[i - 1]], counts[vocab.productions[i]]);
}

TEST(CfgVocab, JsonRoundTrip) {
  auto vocab = build_cfg_vocab(generated(20, 3, Language::en), 100, CfgMode::ratio);
  auto back = CfgVocabulary::from_json(vocab.to_json());
  EXPECT_EQ(back.productions, vocab.productions);
  EXPECT_EQ(back.mode, vocab.mode);
}

TEST(CfgVocab, GeneratorCoversBothRegistries) {
  auto en = build_cfg_vocab(generated(300, 1, Language::en), 1000, CfgMode::ratio);
  auto zh = build_cfg_vocab(generated(300, 1, Language::zh), 1000, CfgMode::count);
  EXPECT_GT(en.size(), 100u);
  EXPECT_GT(zh.size(), 60u);
}

// -- part of speech ---------------------------------------------------------------

TEST(PosCounts, HandTally) {
  auto v = pos_counts(narration(Language::en, {kDogSawCat}), Tagset::english());
  EXPECT_EQ(v.at("count_noun"), 2.0);
  EXPECT_EQ(v.at("count_determiner"), 2.0);
  EXPECT_DOUBLE_EQ(v.at("ratio_noun"), 0.4);
}

TEST(PosCounts, NoVerbsGivesZeroNounVerbRatio) {
  auto v = pos_counts(narration(Language::en, {"(NP (DT the) (NN dog))"}), Tagset::english());
  EXPECT_EQ(v.at("count_verb"), 0.0);
  EXPECT_EQ(v.at("noun_verb_ratio"), 0.0);
}

TEST(PosCounts, UnknownTagsCountAsOther) {
  auto v = pos_counts(narration(Language::en, {"(X (QQ foo) (ZZ bar))"}), Tagset::english());
  for (const auto& cat : Tagset::english().categories()) EXPECT_EQ(v.at("count_" + cat.name), 0.0) << cat.name;
  EXPECT_EQ(v.at("count_other"), 2.0);
}

// -- syntactic complexity ---------------------------------------------------------

TEST(Syntax, SimpleClause) {
  auto v = syntactic_complexity(trees({kDogSawCat}));
  EXPECT_EQ(v.at("num_clauses"), 1.0);
  EXPECT_EQ(v.at("num_t_units"), 1.0);
  EXPECT_EQ(v.at("num_dependent_clauses"), 0.0);
  EXPECT_EQ(v.at("mean_length_clause"), 5.0);
}

TEST(Syntax, NoClauseNodes) {
  auto v = syntactic_complexity(trees({"(NP (DT the) (NN dog))"}));
  EXPECT_EQ(v.at("num_clauses"), 0.0);
  EXPECT_EQ(v.at("num_t_units"), 0.0);
  EXPECT_EQ(v.at("num_dependent_clauses"), 0.0);
  EXPECT_EQ(v.at("mean_length_clause"), 0.0);
  EXPECT_EQ(v.at("mean_length_t_unit"), 0.0);
}

TEST(Syntax, CoordinatePhrase) {
  auto v = syntactic_complexity(trees({"(NP (NP (NN dog)) (CC and) (NP (NN cat)))"}));
  EXPECT_EQ(v.at("num_coordinate_phrases"), 1.0);
}

TEST(Syntax, SubordinateClause) {
  // Outer S (5 words) and the S inside SBAR (2 words); one T-unit.
  auto v = syntactic_complexity(trees({kSaidThat}));
  EXPECT_EQ(v.at("num_clauses"), 2.0);
  EXPECT_EQ(v.at("num_t_units"), 1.0);
  EXPECT_EQ(v.at("num_dependent_clauses"), 1.0);
  EXPECT_EQ(v.at("num_complex_t_units"), 1.0);
  EXPECT_DOUBLE_EQ(v.at("mean_length_clause"), 3.5);
  EXPECT_DOUBLE_EQ(v.at("dependent_clauses_per_clause"), 0.5);
}

// -- full extraction ----------------------------------------------------------------

TEST(ExtractEnglish, DogSawCat) {
  auto v = extract_english(narration(Language::en, {kDogSawCat}), corpus::FrequencyLexicon(), CfgVocabulary{});
  EXPECT_EQ(v.at("num_words"), 5.0);
  EXPECT_EQ(v.at("num_sentences"), 1.0);
  EXPECT_DOUBLE_EQ(v.at("ttr"), 0.8);
}

TEST(ExtractEnglish, EmptyVocabHasNoCfgBlock) {
  auto v = extract_english(narration(Language::en, {kDogSawCat}), corpus::FrequencyLexicon(), CfgVocabulary{});
  EXPECT_EQ(v.size(), FeatureRegistry::english().base_ids().size());
  for (const auto& n : v.names) EXPECT_NE(n.rfind("cfg:", 0), 0u);
}

TEST(ExtractEnglish, DuplicatedNarration) {
  auto once = narration(Language::en, {kSaidThat, kDogSawCat});
  auto twice = narration(Language::en, {kSaidThat, kDogSawCat, kSaidThat, kDogSawCat});
  auto a = extract_english(once, corpus::FrequencyLexicon(), CfgVocabulary{});
  auto b = extract_english(twice, corpus::FrequencyLexicon(), CfgVocabulary{});
  EXPECT_EQ(b.at("num_words"), 2 * a.at("num_words"));
  std::vector<std::string> words;
  for (int rep = 0; rep < 2; ++rep) {
    for (const auto& s : once.sentences) {
      for (const auto& t : s.tokens) words.push_back(t.surface);
    }
  }
  EXPECT_DOUBLE_EQ(b.at("ttr"), type_token_ratio(words));
  EXPECT_LE(b.at("ttr"), a.at("ttr"));
}

TEST(ExtractEnglish, WrongLanguageRejected) {
  auto zh = narration(Language::zh, {"(IP (NP (PN 他)) (VP (VV 跑)))"});
  EXPECT_THROW(extract_english(zh, corpus::FrequencyLexicon(), CfgVocabulary{}), InputError);
  auto en = narration(Language::en, {kDogSawCat});
  EXPECT_THROW(extract_mandarin(en, corpus::FrequencyLexicon(), CfgVocabulary{{}, CfgMode::count}), InputError);
}

TEST(ExtractEnglish, CfgRatioBlockSumsToOneWhenCovered) {
  auto n = narration(Language::en, {kSaidThat, kDogSawCat});
  auto vocab = build_cfg_vocab(std::vector<Narration>{n}, 100, CfgMode::ratio);
  auto v = extract_english(n, corpus::FrequencyLexicon(), vocab);
  double sum = 0.0;
  for (std::size_t i = 0; i < vocab.size(); ++i) sum += v.at(vocab.feature_name(i));
  EXPECT_NEAR(sum, 1.0, 1e-12);

  CfgVocabulary partial{{vocab.productions.front()}, CfgMode::ratio};
  auto p = extract_english(n, corpus::FrequencyLexicon(), partial);
  EXPECT_LT(p.at(partial.feature_name(0)), 1.0);
}

TEST(ExtractMandarin, TwoCharacters) {
  auto v = extract_mandarin(narration(Language::zh, {"(IP (NP (PN 他)) (VP (VV 跑)))"}), corpus::FrequencyLexicon(),
                            CfgVocabulary{{}, CfgMode::count});
  EXPECT_EQ(v.at("num_sentences"), 1.0);
  EXPECT_EQ(v.at("num_characters"), 2.0);
  EXPECT_EQ(v.at("ttr"), 1.0);
}

TEST(ExtractMandarin, CfgBlockIsRawCounts) {
  auto n = narration(Language::zh, {"(IP (NP (PN 他)) (VP (VV 跑)))", "(IP (NP (PN 她)) (VP (VV 看)))",
                                    "(IP (NP (PN 我)) (VP (VV 看)))"});
  CfgVocabulary vocab{{"NP -> PN"}, CfgMode::count};
  EXPECT_EQ(extract_mandarin(n, corpus::FrequencyLexicon(), vocab).at("cfg:NP -> PN"), 3.0);
}

TEST(ExtractMandarin, MeanSentenceLength) {
  auto n = narration(Language::zh, {"(IP (NP (PN 他)) (VP (VV 跑)))",
                                    "(IP (NP (PN 他)) (VP (AD 很) (VV 快) (AS 了)))"});
  EXPECT_EQ(extract_mandarin(n, corpus::FrequencyLexicon(), CfgVocabulary{{}, CfgMode::count})
                .at("mean_sentence_length"),
            3.0);
}

TEST(Registry, ShippedWidths) {
  EXPECT_EQ(FeatureRegistry::english().full_width(), 185u);
  EXPECT_EQ(FeatureRegistry::mandarin().full_width(), 143u);
}

TEST(Registry, FullExtractionWidthAndAlignment) {
  auto en = generated(120, 21, Language::en);
  auto zh = generated(120, 22, Language::zh);
  const auto& er = FeatureRegistry::english();
  const auto& zr = FeatureRegistry::mandarin();
  auto em = extract_all(en, testgen::english_lexicon(), build_cfg_vocab(en, er.cfg_slots(), er.cfg_mode()));
  auto zm = extract_all(zh, testgen::mandarin_lexicon(), build_cfg_vocab(zh, zr.cfg_slots(), zr.cfg_mode()));
  EXPECT_EQ(em.cols(), 185u);
  EXPECT_EQ(zm.cols(), 143u);
  EXPECT_EQ(em.rows(), 120u);
  for (std::size_t i = 0; i < er.base_ids().size(); ++i) EXPECT_EQ(em.names[i], er.base_ids()[i]);
  EXPECT_TRUE(all_finite(em.values));
  EXPECT_TRUE(all_finite(zm.values));
}

TEST(Extract, ParallelMatchesSerial) {
  auto en = generated(30, 5, Language::en);
  auto vocab = build_cfg_vocab(en, 100, CfgMode::ratio);
  auto a = extract_all(en, testgen::english_lexicon(), vocab, 1);
  auto b = extract_all(en, testgen::english_lexicon(), vocab, 4);
  EXPECT_EQ(a.names, b.names);
  EXPECT_EQ(a.row_ids, b.row_ids);
  EXPECT_TRUE(a.values == b.values);
}

// -- pruning ------------------------------------------------------------------------

namespace {

FeatureMatrix column_matrix(const std::vector<std::vector<double>>& cols) {
  FeatureMatrix m;
  auto rows = cols.front().size();
  for (std::size_t r = 0; r < rows; ++r) m.row_ids.push_back("r" + std::to_string(r));
  m.values.resize(static_cast<Eigen::Index>(rows), static_cast<Eigen::Index>(cols.size()));
  for (std::size_t c = 0; c < cols.size(); ++c) {
    m.names.push_back("f" + std::to_string(c));
    for (std::size_t r = 0; r < rows; ++r) m.values(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = cols[c][r];
  }
  return m;
}

}  // namespace

TEST(Prune, SixOfTenZeroDropped) {
  auto m = column_matrix({{0, 0, 0, 0, 0, 0, 1, 2, 3, 4}, {1, 2, 3, 4, 5, 6, 7, 8, 9, 10}});
  auto [pruned, mask] = prune_constant(m);
  EXPECT_EQ(mask.kept, (std::vector<std::string>{"f1"}));
  ASSERT_EQ(mask.dropped.size(), 1u);
  EXPECT_EQ(mask.dropped[0].name, "f0");
  EXPECT_DOUBLE_EQ(mask.dropped[0].modal_fraction, 0.6);
  EXPECT_EQ(pruned.cols(), 1u);
}

TEST(Prune, ExactlyHalfKept) {
  auto m = column_matrix({{0, 0, 0, 0, 0, 1, 2, 3, 4, 5}});
  EXPECT_EQ(prune_constant(m).second.kept.size(), 1u);
}

TEST(Prune, AllDroppedIsAnError) {
  auto m = column_matrix({{1, 1, 1}, {2, 2, 3}});
  try {
    prune_constant(m);
    FAIL();
  } catch (const InputError& e) {
    EXPECT_STREQ(e.what(), "no informative features");
  }
}

TEST(Prune, MaskJsonRoundTripAndApply) {
  auto m = column_matrix({{0, 0, 0, 1}, {1, 2, 3, 4}, {5, 6, 7, 8}});
  auto [pruned, mask] = prune_constant(m);
  auto back = PruneMask::from_json(mask.to_json());
  EXPECT_EQ(back, mask);
  EXPECT_TRUE(back.apply(m).values == pruned.values);
}
