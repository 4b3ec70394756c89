#pragma once

#include <iosfwd>

namespace lingbridge::cli {

/// Parses argv, runs the chosen subcommand and maps failures to exit codes:
/// 0 success, 1 invalid input or usage, 2 runtime/numerical failure.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace lingbridge::cli
