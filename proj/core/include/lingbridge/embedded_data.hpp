#pragma once

#include <optional>
#include <string_view>

namespace lingbridge::data {

/// Contents of a file shipped under core/data, addressed by its path
/// relative to that directory (e.g. "tagsets/ptb_v1.tsv").
std::optional<std::string_view> embedded_file(std::string_view relative_path);

}  // namespace lingbridge::data
