#pragma once

#include <array>

#include "message.hpp"
#include "rng.hpp"

namespace photonet {

// Adaptive input stage shared by the beam-splitter processors.
//
// Stores the last message seen on each input channel plus `weight`, an
// exponential moving estimate of the relative arrival frequency per channel.
// The update rule  weight[i] <- alpha * weight[i] + (1 - alpha) * [i == k]
// keeps weight on the simplex (sum 1, nonnegative) for any event sequence.
struct DlmState {
  std::array<UnitPair, 2> reg_h{};  // per-channel phase registers, H component
  std::array<UnitPair, 2> reg_v{};  // per-channel phase registers, V component
  std::array<UnitPair, 2> reg_p{};  // per-channel polarization registers
  std::array<double, 2> weight{0.5, 0.5};
  double alpha = 0.99;  // learning parameter, 0 < alpha < 1

  bool valid(double tol = kUnitNormTolerance) const;
};

// Draws weight = (r, 1 - r) and six uniformly random register angles from
// `stream` (seven draws total: r first, then channel-0 H, V, P followed by
// channel-1 H, V, P).  Throws ConfigError unless 0 < alpha < 1.
DlmState dlm_init(double alpha, RandomStream& stream);

// Stores the message pairs into the registers of `channel` (the other
// channel's registers are untouched) and folds the arrival into the weight.
void dlm_update(DlmState& state, int channel, const Message& m);

}  // namespace photonet
