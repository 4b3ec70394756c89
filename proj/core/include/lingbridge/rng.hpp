#pragma once

#include <cstdint>
#include <random>
#include <vector>

namespace lingbridge {

/// Seeded random stream with platform-independent draws.
///
/// std::uniform_int_distribution and friends are implementation-defined,
/// so every draw here is computed from the raw mt19937_64 output to keep
/// runs byte-identical across standard libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next_u64() { return engine_(); }
  /// Uniform integer in [0, bound); bound must be > 0.
  std::uint64_t uniform_index(std::uint64_t bound);
  /// Uniform integer in [lo, hi] inclusive.
  std::int64_t uniform_int(std::int64_t lo, std::int64_t hi);
  /// Uniform double in [0, 1) with 53 random bits.
  double uniform01();
  double normal();
  bool bernoulli(double p) { return uniform01() < p; }

  /// Fisher-Yates permutation of 0..n-1.
  std::vector<std::size_t> permutation(std::size_t n);

 private:
  std::mt19937_64 engine_;
  bool has_spare_ = false;
  double spare_ = 0.0;
};

/// Derives an independent child seed from a base seed and a tuple of
/// integers (splitmix64 mixing). Used for per-(size, rep) ablation streams.
std::uint64_t derive_seed(std::uint64_t base, std::uint64_t a, std::uint64_t b = 0);

}  // namespace lingbridge
