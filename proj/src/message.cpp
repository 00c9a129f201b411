#include "message.hpp"

#include <cmath>
#include <stdexcept>

namespace photonet {

UnitPair UnitPair::rotated(double angle) const {
  const double ca = std::cos(angle);
  const double sa = std::sin(angle);
  return {c * ca - s * sa, s * ca + c * sa};
}

double UnitPair::norm_error() const { return std::abs(c * c + s * s - 1.0); }

bool Message::valid(double tol) const {
  return h.norm_error() <= tol && v.norm_error() <= tol && p.norm_error() <= tol &&
         p.c >= 0.0 && p.s >= 0.0;
}

Message message_from_angles(double phase_h, double phase_v, double polarization) {
  Message m;
  m.h = {std::cos(phase_h), std::sin(phase_h)};
  m.v = {std::cos(phase_v), std::sin(phase_v)};
  m.p = {std::cos(polarization), std::sin(polarization)};
  if (m.p.c < 0.0) {
    m.p.c = -m.p.c;
    m.h = m.h.negated();
  }
  if (m.p.s < 0.0) {
    m.p.s = -m.p.s;
    m.v = m.v.negated();
  }
  return m;
}

AmplitudePair message_to_amplitudes(const Message& m) {
  return {std::complex<double>(m.h.c, m.h.s) * m.p.c,
          std::complex<double>(m.v.c, m.v.s) * m.p.s};
}

Message amplitudes_to_message(const AmplitudePair& a) {
  const double mag_h = std::abs(a.h);
  const double mag_v = std::abs(a.v);
  const double norm = std::hypot(mag_h, mag_v);
  if (!(norm > 0.0) || !std::isfinite(norm)) {
    throw std::invalid_argument("degenerate amplitude: zero state has no message encoding");
  }
  Message m;
  m.p = {mag_h / norm, mag_v / norm};
  m.h = mag_h < kPhaseFloor * norm ? UnitPair{1.0, 0.0}
                                   : UnitPair{a.h.real() / mag_h, a.h.imag() / mag_h};
  m.v = mag_v < kPhaseFloor * norm ? UnitPair{1.0, 0.0}
                                   : UnitPair{a.v.real() / mag_v, a.v.imag() / mag_v};
  return m;
}

}  // namespace photonet
