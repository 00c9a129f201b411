#include "rng.hpp"

#include <cmath>

namespace photonet {
namespace {

constexpr std::uint64_t kSplitmixGamma = 0x9E3779B97F4A7C15ull;

std::uint64_t mix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

std::uint64_t fnv1a(std::string_view text) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : text) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  return h;
}

}  // namespace

RandomStream::RandomStream(std::uint64_t seed, RngMode mode)
    : seed_(seed), mode_(mode), state_(seed) {}

double RandomStream::next_uniform() {
  ++count_;
  if (mode_ == RngMode::Systematic) {
    static const double kGolden = (std::sqrt(5.0) - 1.0) / 2.0;
    return std::fmod(static_cast<double>(weyl_start_ + count_) * kGolden, 1.0);
  }
  state_ += kSplitmixGamma;
  return static_cast<double>(mix64(state_) >> 11) * 0x1.0p-53;
}

RandomStream RandomStream::split(std::string_view label) const {
  RandomStream child(mix64(seed_ ^ fnv1a(label)), mode_);
  child.weyl_start_ = child.seed_ >> 44;  // 20-bit offset into the Weyl sequence
  return child;
}

}  // namespace photonet
