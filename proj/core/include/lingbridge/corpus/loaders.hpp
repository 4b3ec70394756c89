#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "lingbridge/corpus/narration.hpp"

namespace lingbridge::corpus {

/// Reads Narration JSONL (one object per line, blank lines skipped).
/// Every narration must carry `lang` and pass validate().
std::vector<Narration> load_narrations(const std::string& path, Language lang);
std::vector<Narration> read_narrations(std::istream& in, Language lang);

/// Narration JSONL whose objects also carry "label": "dementia"|"control".
std::vector<LabeledNarration> load_labeled_narrations(const std::string& path, Language lang);
std::vector<LabeledNarration> read_labeled_narrations(std::istream& in, Language lang);

/// Reads `{"pair_id", "source", "target"}` JSONL.
std::vector<ParallelPair> load_parallel(const std::string& path);
std::vector<ParallelPair> read_parallel(std::istream& in);

/// TSV of `token<TAB>zipf` with an optional `#default <value>` first line.
FrequencyLexicon load_lexicon(const std::string& path);
FrequencyLexicon read_lexicon(std::istream& in);

/// CSV with header `patient_id,<task>...`.
TaskScoreTable load_task_scores(const std::string& path);
TaskScoreTable read_task_scores(std::istream& in);

/// One JSONL line (no trailing newline) in the Narration schema.
std::string narration_to_json(const Narration& narration);
/// Parses one Narration JSON object and validates it.
Narration narration_from_json(std::string_view line);

std::string parallel_pair_to_json(const ParallelPair& pair);

}  // namespace lingbridge::corpus
