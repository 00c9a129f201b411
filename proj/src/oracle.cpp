#include "oracle.hpp"

#include <cmath>
#include <map>
#include <numbers>

#include "errors.hpp"

namespace photonet {

double FourAmplitude::norm_sq() const {
  double total = 0.0;
  for (const auto& amp : a) total += std::norm(amp);
  return total;
}

FourAmplitude oracle_pbs(const FourAmplitude& in) {
  const std::complex<double> i(0.0, 1.0);
  FourAmplitude out;
  out.a[0] = in.a[0];      // H stays on channel 0
  out.a[1] = i * in.a[3];  // V reflected from channel 1
  out.a[2] = in.a[2];      // H stays on channel 1
  out.a[3] = i * in.a[1];  // V reflected from channel 0
  return out;
}

AmplitudePair oracle_hwp(const AmplitudePair& in, double axis_angle) {
  const double c = std::cos(2.0 * axis_angle);
  const double s = std::sin(2.0 * axis_angle);
  const std::complex<double> minus_i(0.0, -1.0);
  return {minus_i * (c * in.h + s * in.v), minus_i * (s * in.h - c * in.v)};
}

ChannelProbabilities propagate_amplitudes(const Network& net, bool eom_voltage_on) {
  net.validate();
  std::map<Port, AmplitudePair> incoming;
  auto take = [&incoming](const NodeId& id, int channel) -> AmplitudePair {
    const auto it = incoming.find({id, channel});
    return it == incoming.end() ? AmplitudePair{} : it->second;
  };
  auto send = [&net, &incoming](const NodeId& id, int channel, const AmplitudePair& amp) {
    const Port target = net.edges.at({id, channel});
    incoming[target].h += amp.h;
    incoming[target].v += amp.v;
  };

  ChannelProbabilities probs;
  for (const Node* n : topological_order(net)) {
    if (const auto* src = std::get_if<SourceNode>(&n->payload)) {
      send(n->id, 0,
           message_to_amplitudes(source_emit(src->phase_h, src->phase_v, src->polarization)));
    } else if (std::holds_alternative<PbsNode>(n->payload)) {
      const AmplitudePair a0 = take(n->id, 0);
      const AmplitudePair a1 = take(n->id, 1);
      const FourAmplitude out = oracle_pbs({{a0.h, a0.v, a1.h, a1.v}});
      send(n->id, 0, {out.a[0], out.a[1]});
      send(n->id, 1, {out.a[2], out.a[3]});
    } else if (std::holds_alternative<WollastonNode>(n->payload)) {
      const AmplitudePair a = take(n->id, 0);
      const FourAmplitude out = oracle_pbs({{a.h, a.v, {}, {}}});
      send(n->id, 0, {out.a[0], out.a[1]});
      send(n->id, 1, {out.a[2], out.a[3]});
    } else if (const auto* hwp = std::get_if<HwpNode>(&n->payload)) {
      send(n->id, 0, oracle_hwp(take(n->id, 0), hwp->setting.axis_angle));
    } else if (std::holds_alternative<EomNode>(n->payload)) {
      const AmplitudePair a = take(n->id, 0);
      send(n->id, 0, eom_voltage_on ? oracle_hwp(a, std::numbers::pi / 8.0) : a);
    } else if (const auto* ps = std::get_if<PhaseShiftNode>(&n->payload)) {
      const AmplitudePair a = take(n->id, 0);
      const std::complex<double> rot = std::polar(1.0, ps->shift);
      send(n->id, 0, {rot * a.h, rot * a.v});
    } else if (const auto* det = std::get_if<DetectorNode>(&n->payload)) {
      (det->label == 0 ? probs.p0 : probs.p1) += take(n->id, 0).norm_sq();
    } else if (std::holds_alternative<SinkNode>(n->payload)) {
      probs.exceptional += take(n->id, 0).norm_sq();
    }
  }
  return probs;
}

std::pair<double, double> oracle_malus(double polarization) {
  const double c = std::cos(polarization);
  const double s = std::sin(polarization);
  return {c * c, s * s};
}

double oracle_wheeler(double shift, bool closed) {
  const RandomStream unused(0);
  Network net = build_wheeler_network(0.99, unused);
  set_phase_shift(net, shift);
  const ChannelProbabilities probs = propagate_amplitudes(net, closed);
  const double detected = probs.p0 + probs.p1;
  return detected > 0.0 ? probs.p0 / detected : 0.0;
}

}  // namespace photonet
