#pragma once

#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "lingbridge/common.hpp"
#include "lingbridge/featx/parse_tree.hpp"

namespace lingbridge::corpus {

enum class Language { en, zh };

std::string_view to_string(Language lang);
/// Accepts "en" or "zh"; throws InputError otherwise.
Language parse_language(std::string_view code);

struct Token {
  std::string surface;
  std::string pos;
  friend bool operator==(const Token&, const Token&) = default;
};

struct Sentence {
  std::vector<Token> tokens;
  /// Penn-Treebank bracketed parse as supplied by the upstream parser.
  std::string parse;
  /// `parse` read into a tree; filled by validate().
  featx::ParseTree tree;
  friend bool operator==(const Sentence&, const Sentence&) = default;
};

/// One transcript unit: ordered, pre-tagged and pre-parsed sentences.
struct Narration {
  std::string id;
  Language lang = Language::en;
  std::vector<Sentence> sentences;

  std::size_t token_count() const;
  friend bool operator==(const Narration&, const Narration&) = default;
};

/// Parses every sentence's bracketed tree into Sentence::tree and checks
/// that the narration is non-empty, every sentence has tokens, and the
/// tree's leaves and preterminal tags match the token list in order.
/// Throws InputError naming the narration id.
void validate(Narration& narration);

enum class Label { control, dementia };
std::string_view to_string(Label label);
Label parse_label(std::string_view text);

struct LabeledNarration {
  Narration narration;
  Label label = Label::control;
};

/// A line-aligned pair from a parallel corpus (source "zh", target "en").
struct ParallelPair {
  std::string pair_id;
  Narration source;
  Narration target;
};

/// Token -> zipf frequency table with an out-of-vocabulary fallback.
class FrequencyLexicon {
 public:
  FrequencyLexicon() = default;
  explicit FrequencyLexicon(double default_zipf) : default_zipf_(default_zipf) {}

  /// Inserts or overwrites; the key is lowercased. Throws InputError on
  /// a negative or non-finite frequency.
  void set(std::string_view token, double zipf);
  /// Case-folded lookup; returns default_zipf() when absent.
  double lookup(std::string_view token) const;
  bool contains(std::string_view token) const;

  double default_zipf() const noexcept { return default_zipf_; }
  std::size_t size() const noexcept { return table_.size(); }

 private:
  std::unordered_map<std::string, double> table_;
  double default_zipf_ = 0.0;
};

/// Simple ASCII lowercase; non-ASCII bytes are left unchanged.
std::string fold_case(std::string_view text);

/// Patients by neuropsychological task scores.
struct TaskScoreTable {
  std::vector<std::string> patient_ids;
  std::vector<std::string> task_names;
  Matrix scores;  // patients x tasks
};

}  // namespace lingbridge::corpus
