#pragma once

#include <array>
#include <complex>
#include <utility>

#include "message.hpp"
#include "network.hpp"

namespace photonet {

// Amplitude side of the model: the component behavior expressed as exact
// linear maps, used to compute the probabilities the event stream converges
// to.  The event loop and this interpreter walk the same Network graph, so
// the two can never diverge structurally.

struct FourAmplitude {
  // (h0, v0, h1, v1): H and V amplitudes on channels 0 and 1.
  std::array<std::complex<double>, 4> a{};

  double norm_sq() const;
};

// Beam-splitter matrix: H passes straight through, V switches channel and
// picks up a factor i.
FourAmplitude oracle_pbs(const FourAmplitude& in);

// Half-wave plate at `axis_angle`: -i times the reflection about the axis.
AmplitudePair oracle_hwp(const AmplitudePair& in, double axis_angle);

struct ChannelProbabilities {
  double p0 = 0.0;
  double p1 = 0.0;
  double exceptional = 0.0;
};

// Propagates one normalized amplitude state from the source through the
// wiring of `net` and accumulates the detector probabilities.
ChannelProbabilities propagate_amplitudes(const Network& net, bool eom_voltage_on);

// (cos^2, sin^2) of the polarization angle: the two detector probabilities of
// a single beam splitter fed on one channel.
std::pair<double, double> oracle_malus(double polarization);

// Detector-0 probability of the interferometer preset at phase shift `shift`,
// conditioned on the event not leaving through the exceptional channel.
double oracle_wheeler(double shift, bool closed);

}  // namespace photonet
