#pragma once

#include <array>

#include "dlm.hpp"
#include "message.hpp"
#include "rng.hpp"

namespace photonet {

// Event-based polarizing beam splitter: an adaptive input stage (DlmState),
// a transformation stage combining the stored registers into an eight-vector,
// and a stochastic output stage that picks the exit channel and rebuilds a
// unit-normalized message for it.

// The eight transform components, in channel order:
//   [0..1] output-0 H pair        (input-0 H, transmitted)
//   [2..3] output-0 V pair        (input-1 V, reflected, phase advanced by i)
//   [4..5] output-1 H pair        (input-1 H, transmitted)
//   [6..7] output-1 V pair        (input-0 V, reflected, phase advanced by i)
struct TransformVector {
  std::array<double, 8> components{};
};

struct PbsOutcome {
  int channel = 0;
  Message message;
  bool degenerate = false;  // output norm vanished; message fell back to defaults
};

TransformVector pbs_transform(const DlmState& state);

// Sends the messenger through channel 0 iff components[0]^2 + components[1]^2
// strictly exceeds r (ties go to channel 1), and emits the normalized message
// of the selected channel.  Sub-norms below kPhaseFloor fall back to phase
// pair (1, 0); a vanishing overall norm additionally sets `degenerate`.
PbsOutcome pbs_select_and_emit(const TransformVector& tv, double r);

// One full event: register update, transform, one uniform draw, selection.
PbsOutcome pbs_process(DlmState& state, int channel, const Message& m, RandomStream& stream);

}  // namespace photonet
