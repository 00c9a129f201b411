#include "pbs.hpp"

#include <cmath>

namespace photonet {
namespace {

UnitPair phase_or_default(double c, double s, double norm) {
  if (norm < kPhaseFloor) return {1.0, 0.0};
  return {c / norm, s / norm};
}

Message emit_from_quad(double c0, double s0, double c1, double s1, bool& degenerate) {
  const double norm_h = std::hypot(c0, s0);
  const double norm_v = std::hypot(c1, s1);
  const double norm = std::hypot(norm_h, norm_v);
  Message m;
  if (norm < kPhaseFloor) {
    degenerate = true;
    m.h = {1.0, 0.0};
    m.v = {1.0, 0.0};
    m.p = {1.0, 0.0};
    return m;
  }
  m.h = phase_or_default(c0, s0, norm_h);
  m.v = phase_or_default(c1, s1, norm_v);
  m.p = {norm_h / norm, norm_v / norm};
  return m;
}

}  // namespace

TransformVector pbs_transform(const DlmState& state) {
  const double q0 = std::sqrt(state.weight[0]);
  const double q1 = std::sqrt(state.weight[1]);
  TransformVector tv;
  tv.components = {
      state.reg_h[0].c * state.reg_p[0].c * q0,
      state.reg_h[0].s * state.reg_p[0].c * q0,
      -state.reg_v[1].s * state.reg_p[1].s * q1,
      state.reg_v[1].c * state.reg_p[1].s * q1,
      state.reg_h[1].c * state.reg_p[1].c * q1,
      state.reg_h[1].s * state.reg_p[1].c * q1,
      -state.reg_v[0].s * state.reg_p[0].s * q0,
      state.reg_v[0].c * state.reg_p[0].s * q0,
  };
  return tv;
}

PbsOutcome pbs_select_and_emit(const TransformVector& tv, double r) {
  const auto& t = tv.components;
  PbsOutcome out;
  if (t[0] * t[0] + t[1] * t[1] > r) {
    out.channel = 0;
    out.message = emit_from_quad(t[0], t[1], t[2], t[3], out.degenerate);
  } else {
    out.channel = 1;
    out.message = emit_from_quad(t[4], t[5], t[6], t[7], out.degenerate);
  }
  return out;
}

PbsOutcome pbs_process(DlmState& state, int channel, const Message& m, RandomStream& stream) {
  dlm_update(state, channel, m);
  const TransformVector tv = pbs_transform(state);
  return pbs_select_and_emit(tv, stream.next_uniform());
}

}  // namespace photonet
