#pragma once

#include <vector>

#include "lingbridge/featx/feature_matrix.hpp"
#include "lingbridge/featx/parse_tree.hpp"
#include "lingbridge/featx/tagset.hpp"

namespace lingbridge::featx {

/// Clause-level complexity over English PTB trees, using this pattern table
/// (lengths count non-punctuation leaves of the matched node's yield):
///
///   clause              S | SBAR | SINV | SQ with an immediate VP child
///   dependent clause    clause with an SBAR ancestor
///   T-unit              topmost S | SINV | SQ not under SBAR; a node that
///                       coordinates two or more S-type children with CC
///                       contributes those children instead
///   complex T-unit      T-unit containing a dependent clause
///   coordinate clause   clause whose parent coordinates S-type children
///   coordinate phrase   NP | VP | ADJP | ADVP with a CC child
///   complex nominal     NP with an adjectival, possessive, PP, SBAR, VP
///                       or S child (JJ JJR JJS ADJP POS PRP$ PP SBAR VP S)
///
/// Emits counts, mean lengths and the ratio set listed in the English
/// manifest; any zero denominator yields 0.
FeatureVector syntactic_complexity(const std::vector<ParseTree>& trees, const Tagset& tagset = Tagset::english());

/// num_/total_length_/mean_length_ for NP, VP, PP, ADJP, ADVP and SBAR.
FeatureVector phrase_statistics(const std::vector<ParseTree>& trees, const Tagset& tagset = Tagset::english());

/// tree_height_max / _median / _mean over per-sentence tree heights.
/// Precondition: trees non-empty.
FeatureVector tree_stats(const std::vector<ParseTree>& trees);

/// Number of non-punctuation leaves under `node`.
std::size_t word_length(const ParseTree& node, const Tagset& tagset);

}  // namespace lingbridge::featx
