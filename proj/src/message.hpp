#pragma once

#include <complex>

namespace photonet {

inline constexpr double kUnitNormTolerance = 1e-12;

// Relative magnitude below which a polarization component is treated as
// absent and its phase pair falls back to the fixed convention (1, 0).
inline constexpr double kPhaseFloor = 1e-12;

// A (cos, sin) pair of one angle.
struct UnitPair {
  double c = 1.0;
  double s = 0.0;

  UnitPair rotated(double angle) const;  // advance the angle, length preserved
  UnitPair negated() const { return {-c, -s}; }
  double norm_error() const;  // |c^2 + s^2 - 1|
};

// The payload carried by one messenger: phase pairs for the horizontal and
// vertical polarization components plus the polarization angle pair.
//
// Canonical form keeps the polarization pair in the first quadrant; component
// signs live in the phase pairs (a sign flip equals a phase shift by pi).
struct Message {
  UnitPair h;  // (cos, sin) of the horizontal phase
  UnitPair v;  // (cos, sin) of the vertical phase
  UnitPair p;  // (cos, sin) of the polarization angle, both components >= 0

  bool valid(double tol = kUnitNormTolerance) const;
};

// Complex amplitudes (horizontal, vertical) of the same state.
struct AmplitudePair {
  std::complex<double> h;
  std::complex<double> v;

  double norm_sq() const { return std::norm(h) + std::norm(v); }
};

Message message_from_angles(double phase_h, double phase_v, double polarization);
AmplitudePair message_to_amplitudes(const Message& m);

// Normalizes the input; throws std::invalid_argument on a zero vector.
Message amplitudes_to_message(const AmplitudePair& a);

}  // namespace photonet
