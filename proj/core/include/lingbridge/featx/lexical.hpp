#pragma once

#include <string>
#include <vector>

#include "lingbridge/featx/feature_matrix.hpp"

namespace lingbridge::featx {

/// Honoré's R is undefined when every type is a hapax (V1 = V). We emit
/// 100 * ln(N) / kHonoreEpsilon in that case instead of infinity.
inline constexpr double kHonoreEpsilon = 0.005;

/// Window sizes of the moving-average type-token ratios.
inline constexpr std::size_t kMattrWindows[] = {10, 20, 30, 40, 50};

double type_token_ratio(const std::vector<std::string>& tokens);
/// Mean TTR over every window of `window` consecutive tokens; a text
/// shorter than the window is treated as one window of its full length.
double moving_average_ttr(const std::vector<std::string>& tokens, std::size_t window);
/// R = 100 ln N / (1 - V1 / V), capped as described for kHonoreEpsilon.
double honore_statistic(std::size_t n_tokens, std::size_t n_types, std::size_t n_hapax);
/// W = N ^ (V ^ -0.165).
double brunet_index(std::size_t n_tokens, std::size_t n_types);

/// ttr, mattr_{10..50}, honore, brunet over case-folded tokens.
/// Precondition: tokens non-empty.
FeatureVector lexical_richness(const std::vector<std::string>& tokens);

}  // namespace lingbridge::featx
