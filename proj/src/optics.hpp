#pragma once

#include "message.hpp"

namespace photonet {

struct HwpSetting {
  double axis_angle = 0.0;  // optical-axis angle, radians
};

struct EomSetting {
  bool voltage_on = false;  // the per-event choice recorded as A in the data set
};

// Half-wave plate with optical axis at `axis_angle`: rotates the polarization
// by twice the axis angle and applies the -i phase factor of the wave picture.
Message hwp_apply(const Message& m, double axis_angle);

// Energized, the modulator acts as a half-wave plate rotating the polarization
// by pi/4; de-energized it passes the message through untouched.
Message eom_apply(const Message& m, const EomSetting& setting);

// Plane rotation of both phase pairs by `shift`; polarization unchanged.
Message phase_shift_apply(const Message& m, double shift);

Message source_emit(double phase_h, double phase_v, double polarization);

}  // namespace photonet
