#include <benchmark/benchmark.h>

#include "lingbridge/featx/cfg.hpp"
#include "lingbridge/featx/extract.hpp"
#include "lingbridge/featx/lexical.hpp"
#include "lingbridge/featx/parse_tree.hpp"

using namespace lingbridge;

namespace {

const char* kSentence =
    "(ROOT (S (NP (DT the) (NN boy)) (VP (VBZ is) (VP (VBG reaching) (PP (IN for) (NP (DT the) (NN cookie) (NN jar)))"
    " (SBAR (IN while) (S (NP (PRP$ his) (NN mother)) (VP (VBZ dries) (NP (DT the) (NNS dishes))))))) (. .)))";

void collect(const featx::ParseTree& t, std::vector<corpus::Token>& out) {
  if (t.is_preterminal()) {
    out.push_back({t.children[0].token, t.label});
    return;
  }
  for (const auto& c : t.children) collect(c, out);
}

corpus::Narration narration(std::size_t sentences) {
  corpus::Narration n;
  n.id = "bench";
  n.lang = corpus::Language::en;
  for (std::size_t i = 0; i < sentences; ++i) {
    corpus::Sentence s;
    s.parse = kSentence;
    collect(featx::parse_bracketed(kSentence), s.tokens);
    n.sentences.push_back(s);
  }
  corpus::validate(n);
  return n;
}

void BM_ParseBracketed(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(featx::parse_bracketed(kSentence));
}
BENCHMARK(BM_ParseBracketed);

void BM_MovingAverageTtr(benchmark::State& state) {
  std::vector<std::string> tokens;
  for (int i = 0; i < state.range(0); ++i) tokens.push_back("w" + std::to_string(i % 97));
  for (auto _ : state) benchmark::DoNotOptimize(featx::moving_average_ttr(tokens, 50));
}
BENCHMARK(BM_MovingAverageTtr)->Arg(100)->Arg(1000)->Arg(10000);

void BM_ExtractEnglish(benchmark::State& state) {
  auto n = narration(static_cast<std::size_t>(state.range(0)));
  auto vocab = featx::build_cfg_vocab(std::vector<corpus::Narration>{n}, 100, featx::CfgMode::ratio);
  corpus::FrequencyLexicon lex;
  for (auto _ : state) benchmark::DoNotOptimize(featx::extract_english(n, lex, vocab));
}
BENCHMARK(BM_ExtractEnglish)->Arg(1)->Arg(10)->Arg(50);

}  // namespace

BENCHMARK_MAIN();
