#include "optics.hpp"

#include <cmath>
#include <numbers>

namespace photonet {

Message hwp_apply(const Message& m, double axis_angle) {
  const AmplitudePair a = message_to_amplitudes(m);
  const double c = std::cos(2.0 * axis_angle);
  const double s = std::sin(2.0 * axis_angle);
  const std::complex<double> minus_i(0.0, -1.0);
  AmplitudePair b;
  b.h = minus_i * (c * a.h + s * a.v);
  b.v = minus_i * (s * a.h - c * a.v);
  return amplitudes_to_message(b);
}

Message eom_apply(const Message& m, const EomSetting& setting) {
  if (!setting.voltage_on) return m;
  return hwp_apply(m, std::numbers::pi / 8.0);
}

Message phase_shift_apply(const Message& m, double shift) {
  Message out = m;
  out.h = m.h.rotated(shift);
  out.v = m.v.rotated(shift);
  return out;
}

Message source_emit(double phase_h, double phase_v, double polarization) {
  return message_from_angles(phase_h, phase_v, polarization);
}

}  // namespace photonet
