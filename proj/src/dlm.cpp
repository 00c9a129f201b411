#include "dlm.hpp"

#include <cassert>
#include <cmath>
#include <numbers>

#include "errors.hpp"

namespace photonet {

bool DlmState::valid(double tol) const {
  if (!(alpha > 0.0 && alpha < 1.0)) return false;
  if (std::abs(weight[0] + weight[1] - 1.0) > tol) return false;
  if (weight[0] < 0.0 || weight[1] < 0.0) return false;
  for (int k = 0; k < 2; ++k) {
    if (reg_h[k].norm_error() > tol || reg_v[k].norm_error() > tol ||
        reg_p[k].norm_error() > tol) {
      return false;
    }
  }
  return true;
}

DlmState dlm_init(double alpha, RandomStream& stream) {
  if (!(alpha > 0.0 && alpha < 1.0)) {
    throw ConfigError("learning parameter alpha must lie strictly between 0 and 1");
  }
  DlmState state;
  state.alpha = alpha;
  const double r = stream.next_uniform();
  state.weight = {r, 1.0 - r};
  auto random_pair = [&stream]() -> UnitPair {
    const double angle = 2.0 * std::numbers::pi * stream.next_uniform();
    return {std::cos(angle), std::sin(angle)};
  };
  for (int k = 0; k < 2; ++k) {
    state.reg_h[k] = random_pair();
    state.reg_v[k] = random_pair();
    state.reg_p[k] = random_pair();
  }
  return state;
}

void dlm_update(DlmState& state, int channel, const Message& m) {
  assert(channel == 0 || channel == 1);
  state.reg_h[channel] = m.h;
  state.reg_v[channel] = m.v;
  state.reg_p[channel] = m.p;
  const double gain = 1.0 - state.alpha;
  state.weight[0] = state.alpha * state.weight[0] + (channel == 0 ? gain : 0.0);
  state.weight[1] = state.alpha * state.weight[1] + (channel == 1 ? gain : 0.0);
  // The recurrence preserves the simplex analytically; guard against drift.
  assert(std::abs(state.weight[0] + state.weight[1] - 1.0) < 1e-9);
}

}  // namespace photonet
