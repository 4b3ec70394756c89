#pragma once

#include <iosfwd>

#include "config.hpp"

namespace lingbridge::cli {

// Each command writes its files under config.out and a short human summary
// to `out`. Failures are thrown (InputError -> exit 1, anything else -> 2).
void cmd_extract(const RunConfig& config, std::ostream& out, std::ostream& err);
void cmd_train(const RunConfig& config, std::ostream& out, std::ostream& err);
void cmd_evaluate(const RunConfig& config, std::ostream& out, std::ostream& err);
void cmd_ablate(const RunConfig& config, std::ostream& out, std::ostream& err);
void cmd_synth(const RunConfig& config, std::ostream& out, std::ostream& err);

}  // namespace lingbridge::cli
