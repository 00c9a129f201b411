#pragma once

#include <cstdint>
#include <string_view>

namespace photonet {

enum class RngMode { Pseudo, Systematic };

// Seedable uniform stream on [0, 1).
//
// Pseudo mode is splitmix64 with the standard constants, pinned here so that
// streams replay identically across platforms and bindings:
//
//   state += 0x9E3779B97F4A7C15
//   z = state
//   z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9
//   z = (z ^ (z >> 27)) * 0x94D049BB133111EB
//   z ^= z >> 31
//   value = (z >> 11) * 2^-53
//
// Systematic mode replaces the pseudo-random draw with the additive
// low-discrepancy sequence frac((start + n) * g), g = (sqrt(5) - 1) / 2,
// n = 1, 2, ...  A stream constructed directly from a seed starts at
// start = 0; split() children start at a label-derived offset so separate
// consumers walk distinct stretches of the sequence.
//
// split(label) derives the child from (seed, label) only, never from the
// parent's draw position: re-splitting with the same label always yields the
// same child, and adding a consumer never shifts another consumer's draws.
class RandomStream {
 public:
  RandomStream() = default;
  explicit RandomStream(std::uint64_t seed, RngMode mode = RngMode::Pseudo);

  double next_uniform();
  RandomStream split(std::string_view label) const;

  std::uint64_t seed() const { return seed_; }
  RngMode mode() const { return mode_; }

 private:
  std::uint64_t seed_ = 0;
  RngMode mode_ = RngMode::Pseudo;
  std::uint64_t state_ = 0;       // splitmix64 state (pseudo mode)
  std::uint64_t weyl_start_ = 0;  // sequence offset (systematic mode)
  std::uint64_t count_ = 0;       // draws taken so far
};

}  // namespace photonet
