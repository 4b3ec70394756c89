#pragma once

#include "lingbridge/corpus/narration.hpp"
#include "lingbridge/featx/feature_matrix.hpp"
#include "lingbridge/featx/tagset.hpp"

namespace lingbridge::featx {

/// Part-of-speech tallies for one narration.
///
/// Emits count_<category> and ratio_<category> for every category row of
/// the tagset, count_other/ratio_other for tags outside the inventory,
/// count_<TAG>/ratio_<TAG> for every inventory tag when the tagset is
/// per-tag, and pronoun_noun_ratio / noun_verb_ratio. Ratios divide by the
/// tagset's ratio base (non-punctuation words or all tokens); any zero
/// denominator yields 0.
FeatureVector pos_counts(const corpus::Narration& narration, const Tagset& tagset);

}  // namespace lingbridge::featx
