#include "selftest.hpp"

#include <cmath>
#include <complex>
#include <functional>
#include <numbers>
#include <ostream>
#include <string>
#include <vector>

#include "dlm.hpp"
#include "message.hpp"
#include "network.hpp"
#include "oracle.hpp"
#include "pbs.hpp"
#include "rng.hpp"

namespace photonet {
namespace {

constexpr double kPi = std::numbers::pi;

DlmState random_state(RandomStream& stream) {
  DlmState state;
  const double r = stream.next_uniform();
  state.weight = {r, 1.0 - r};
  auto pair = [&stream]() -> UnitPair {
    const double angle = 2.0 * kPi * stream.next_uniform();
    return {std::cos(angle), std::sin(angle)};
  };
  for (int k = 0; k < 2; ++k) {
    state.reg_h[k] = pair();
    state.reg_v[k] = pair();
    state.reg_p[k] = pair();
  }
  return state;
}

Message random_message(RandomStream& stream) {
  return message_from_angles((stream.next_uniform() * 2.0 - 1.0) * kPi,
                             (stream.next_uniform() * 2.0 - 1.0) * kPi,
                             stream.next_uniform() * kPi / 2.0);
}

std::string check_transform_equivalence() {
  RandomStream stream(0xA11CE);
  for (int trial = 0; trial < 2000; ++trial) {
    const DlmState state = random_state(stream);
    const auto& t = pbs_transform(state).components;
    FourAmplitude in;
    for (int k = 0; k < 2; ++k) {
      const double q = std::sqrt(state.weight[k]);
      in.a[2 * k] = std::complex<double>(state.reg_h[k].c, state.reg_h[k].s) *
                    (state.reg_p[k].c * q);
      in.a[2 * k + 1] = std::complex<double>(state.reg_v[k].c, state.reg_v[k].s) *
                        (state.reg_p[k].s * q);
    }
    const FourAmplitude out = oracle_pbs(in);
    for (int i = 0; i < 4; ++i) {
      const std::complex<double> event_side(t[2 * i], t[2 * i + 1]);
      if (std::abs(event_side - out.a[i]) > 1e-12) {
        return "transform component " + std::to_string(i) + " deviates by " +
               std::to_string(std::abs(event_side - out.a[i]));
      }
    }
  }
  return {};
}

std::string check_fringe_shape() {
  for (int deg = 0; deg <= 360; ++deg) {
    const double phi = deg * kPi / 180.0;
    const double closed = oracle_wheeler(phi, true);
    const double expected = std::cos(phi / 2.0) * std::cos(phi / 2.0);
    if (std::abs(closed - expected) > 1e-12) {
      return "closed fringe off at " + std::to_string(deg) + " deg";
    }
    if (std::abs(oracle_wheeler(phi, false) - 0.5) > 1e-12) {
      return "open configuration not flat at " + std::to_string(deg) + " deg";
    }
  }
  return {};
}

std::string check_simplex() {
  RandomStream stream(0xB0B);
  DlmState state = dlm_init(0.99, stream);
  for (int i = 0; i < 100000; ++i) {
    const int channel = stream.next_uniform() < 0.5 ? 0 : 1;
    dlm_update(state, channel, random_message(stream));
    if (std::abs(state.weight[0] + state.weight[1] - 1.0) > 1e-12 || state.weight[0] < 0.0 ||
        state.weight[1] < 0.0) {
      return "weight left the simplex after " + std::to_string(i + 1) + " updates";
    }
  }
  return {};
}

std::string check_output_stage() {
  RandomStream stream(0xC0FFEE);
  for (int trial = 0; trial < 10000; ++trial) {
    const DlmState state = random_state(stream);
    const PbsOutcome out = pbs_select_and_emit(pbs_transform(state), stream.next_uniform());
    if (out.channel != 0 && out.channel != 1) return "invalid output channel";
    if (!out.message.valid()) return "emitted message violates unit-pair invariants";
  }
  return {};
}

std::string check_round_trip() {
  RandomStream stream(0xDADA);
  for (int trial = 0; trial < 10000; ++trial) {
    const Message m = random_message(stream);
    const AmplitudePair a = message_to_amplitudes(m);
    const AmplitudePair b = message_to_amplitudes(amplitudes_to_message(a));
    if (std::abs(a.h - b.h) > 1e-12 || std::abs(a.v - b.v) > 1e-12) {
      return "message round trip deviates beyond 1e-12";
    }
  }
  return {};
}

std::string check_conservation() {
  const RandomStream master(0xFEED);
  Network net = build_wheeler_network(0.99, master);
  set_phase_shift(net, kPi / 3.0);
  const DataSet data = run_events(net, 5000, EomMode::Random);
  std::uint64_t detected = 0;
  std::uint64_t exceptional = 0;
  for (const DetectionRecord& rec : data.records) {
    if (rec.exceptional()) {
      ++exceptional;
    } else if (rec.detector == 0 || rec.detector == 1) {
      ++detected;
    } else {
      return "record with invalid detector label";
    }
  }
  if (detected + exceptional != data.records.size()) return "event counts do not add up";
  if (static_cast<double>(exceptional) / static_cast<double>(data.records.size()) >= 0.02) {
    return "exceptional fraction reached " + std::to_string(exceptional) + "/5000";
  }
  return {};
}

}  // namespace

int run_selftest(bool verbose, std::ostream& out) {
  const std::vector<std::pair<const char*, std::function<std::string()>>> checks = {
      {"transform-stage equivalence with the amplitude model", check_transform_equivalence},
      {"interferometer fringe shape", check_fringe_shape},
      {"learning-machine simplex preservation", check_simplex},
      {"output-stage message validity", check_output_stage},
      {"message/amplitude round trip", check_round_trip},
      {"event conservation and exceptional bound", check_conservation},
  };
  int failures = 0;
  for (const auto& [name, check] : checks) {
    const std::string detail = check();
    if (detail.empty()) {
      if (verbose) out << "ok   " << name << "\n";
    } else {
      ++failures;
      out << "FAIL " << name << ": " << detail << "\n";
    }
  }
  if (verbose) {
    out << "selftest: " << (checks.size() - failures) << "/" << checks.size()
        << " checks passed\n";
  }
  return failures;
}

}  // namespace photonet
