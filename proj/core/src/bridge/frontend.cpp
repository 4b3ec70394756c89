#include "lingbridge/bridge/frontend.hpp"

#include "lingbridge/featx/extract.hpp"
#include "lingbridge/featx/registry.hpp"

namespace lingbridge::bridge {

ExtractedCorpus extract_corpus(const std::vector<corpus::ParallelPair>& parallel,
                               const std::vector<corpus::LabeledNarration>& db,
                               const corpus::FrequencyLexicon& source_lexicon,
                               const corpus::FrequencyLexicon& target_lexicon, std::size_t jobs) {
  if (parallel.empty()) throw InputError("parallel corpus is empty");
  if (db.empty()) throw InputError("labelled corpus is empty");
  std::vector<const corpus::Narration*> src;
  std::vector<const corpus::Narration*> tgt;
  for (const auto& p : parallel) {
    src.push_back(&p.source);
    tgt.push_back(&p.target);
  }
  const auto& src_reg = featx::FeatureRegistry::for_language(src.front()->lang);
  const auto& tgt_reg = featx::FeatureRegistry::for_language(tgt.front()->lang);

  ExtractedCorpus out;
  out.frontend.source_vocab = featx::build_cfg_vocab(src, src_reg.cfg_slots(), src_reg.cfg_mode());
  out.frontend.target_vocab = featx::build_cfg_vocab(tgt, tgt_reg.cfg_slots(), tgt_reg.cfg_mode());

  auto src_full = featx::extract_all(src, source_lexicon, out.frontend.source_vocab, jobs);
  auto tgt_full = featx::extract_all(tgt, target_lexicon, out.frontend.target_vocab, jobs);
  // Pair ids identify rows on both sides.
  for (std::size_t i = 0; i < parallel.size(); ++i) {
    src_full.row_ids[i] = parallel[i].pair_id;
    tgt_full.row_ids[i] = parallel[i].pair_id;
  }
  auto [src_pruned, src_mask] = featx::prune_constant(src_full);
  auto [tgt_pruned, tgt_mask] = featx::prune_constant(tgt_full);
  out.parallel_source = std::move(src_pruned);
  out.parallel_target = std::move(tgt_pruned);
  out.frontend.source_prune = std::move(src_mask);
  out.frontend.target_prune = std::move(tgt_mask);

  std::vector<const corpus::Narration*> db_narrations;
  for (const auto& d : db) db_narrations.push_back(&d.narration);
  out.db = out.frontend.target_prune.apply(
      featx::extract_all(db_narrations, target_lexicon, out.frontend.target_vocab, jobs));
  out.labels = label_vector(db);
  return out;
}

featx::FeatureMatrix extract_source(const PipelineFrontend& frontend, const std::vector<corpus::Narration>& narrations,
                                    const corpus::FrequencyLexicon& lexicon, std::size_t jobs) {
  return frontend.source_prune.apply(featx::extract_all(narrations, lexicon, frontend.source_vocab, jobs));
}

featx::FeatureMatrix extract_target(const PipelineFrontend& frontend, const std::vector<corpus::Narration>& narrations,
                                    const corpus::FrequencyLexicon& lexicon, std::size_t jobs) {
  return frontend.target_prune.apply(featx::extract_all(narrations, lexicon, frontend.target_vocab, jobs));
}

Vector label_vector(const std::vector<corpus::LabeledNarration>& db) {
  Vector y(static_cast<Eigen::Index>(db.size()));
  for (std::size_t i = 0; i < db.size(); ++i) {
    y(static_cast<Eigen::Index>(i)) = db[i].label == corpus::Label::dementia ? 1.0 : 0.0;
  }
  return y;
}

}  // namespace lingbridge::bridge
