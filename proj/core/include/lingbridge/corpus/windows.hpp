#pragma once

#include <cstdint>
#include <vector>

#include "lingbridge/corpus/narration.hpp"

namespace lingbridge::corpus {

struct WindowSpan {
  std::size_t start = 0;
  std::size_t length = 0;
  friend bool operator==(const WindowSpan&, const WindowSpan&) = default;
};

/// Draws n_samples contiguous runs over a stream of n_lines lines. Each
/// run length is uniform on [min_lines, max_lines] (max_lines clamped to
/// n_lines) and its start is uniform over the valid starts. Draws are
/// with replacement, so runs may overlap or repeat.
std::vector<WindowSpan> sample_window_spans(std::size_t n_lines, std::size_t n_samples,
                                            std::size_t min_lines, std::size_t max_lines,
                                            std::uint64_t seed);

/// Concatenates each sampled run of parallel lines into one narration per
/// side. Output pair ids read "w<i>:<first pair_id>..<last pair_id>".
std::vector<ParallelPair> sample_windows(const std::vector<ParallelPair>& lines, std::size_t n_samples,
                                         std::size_t min_lines, std::size_t max_lines, std::uint64_t seed);

}  // namespace lingbridge::corpus
