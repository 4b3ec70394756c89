#include "lingbridge/corpus/windows.hpp"

#include <algorithm>

#include "lingbridge/rng.hpp"

namespace lingbridge::corpus {

std::vector<WindowSpan> sample_window_spans(std::size_t n_lines, std::size_t n_samples,
                                            std::size_t min_lines, std::size_t max_lines,
                                            std::uint64_t seed) {
  if (n_lines == 0) throw InputError("sample_windows: no input lines");
  if (min_lines < 1 || min_lines > max_lines) {
    throw InputError("sample_windows: need 1 <= min_lines <= max_lines");
  }
  max_lines = std::min(max_lines, n_lines);
  min_lines = std::min(min_lines, max_lines);

  Rng rng(seed);
  std::vector<WindowSpan> spans;
  spans.reserve(n_samples);
  for (std::size_t i = 0; i < n_samples; ++i) {
    const auto length = static_cast<std::size_t>(
        rng.uniform_int(static_cast<std::int64_t>(min_lines), static_cast<std::int64_t>(max_lines)));
    const auto start = static_cast<std::size_t>(rng.uniform_index(n_lines - length + 1));
    spans.push_back({start, length});
  }
  return spans;
}

std::vector<ParallelPair> sample_windows(const std::vector<ParallelPair>& lines, std::size_t n_samples,
                                         std::size_t min_lines, std::size_t max_lines, std::uint64_t seed) {
  const auto spans = sample_window_spans(lines.size(), n_samples, min_lines, max_lines, seed);
  std::vector<ParallelPair> out;
  out.reserve(spans.size());
  for (std::size_t i = 0; i < spans.size(); ++i) {
    const auto& span = spans[i];
    const ParallelPair& first = lines[span.start];
    const ParallelPair& last = lines[span.start + span.length - 1];
    ParallelPair window;
    window.pair_id = "w" + std::to_string(i) + ":" + first.pair_id + ".." + last.pair_id;
    window.source.id = window.pair_id;
    window.source.lang = first.source.lang;
    window.target.id = window.pair_id;
    window.target.lang = first.target.lang;
    for (std::size_t k = span.start; k < span.start + span.length; ++k) {
      const auto& src = lines[k].source.sentences;
      const auto& tgt = lines[k].target.sentences;
      window.source.sentences.insert(window.source.sentences.end(), src.begin(), src.end());
      window.target.sentences.insert(window.target.sentences.end(), tgt.begin(), tgt.end());
    }
    out.push_back(std::move(window));
  }
  return out;
}

}  // namespace lingbridge::corpus
