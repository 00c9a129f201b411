#include <cmath>
#include <complex>
#include <numbers>

#include "doctest.h"
#include "network.hpp"
#include "oracle.hpp"
#include "rng.hpp"
#include "test_support.hpp"

using namespace photonet;
using testutil::near;

namespace {
constexpr double kPi = std::numbers::pi;
const std::complex<double> kI(0.0, 1.0);
}  // namespace

TEST_CASE("beam-splitter matrix basis actions") {
  SUBCASE("H on channel 0 passes") {
    const FourAmplitude out = oracle_pbs({{1.0, 0.0, 0.0, 0.0}});
    CHECK(near(std::abs(out.a[0] - std::complex<double>(1.0, 0.0)), 0.0));
    CHECK(near(std::abs(out.a[1]), 0.0));
    CHECK(near(std::abs(out.a[2]), 0.0));
    CHECK(near(std::abs(out.a[3]), 0.0));
  }
  SUBCASE("V on channel 0 reflects with i") {
    const FourAmplitude out = oracle_pbs({{0.0, 1.0, 0.0, 0.0}});
    CHECK(near(std::abs(out.a[3] - kI), 0.0));
    CHECK(near(std::abs(out.a[0]), 0.0));
    CHECK(near(std::abs(out.a[1]), 0.0));
  }
}

TEST_CASE("beam-splitter matrix is norm preserving") {
  RandomStream stream(81);
  for (int trial = 0; trial < 10000; ++trial) {
    FourAmplitude in;
    for (auto& amp : in.a) {
      amp = std::complex<double>(stream.next_uniform() * 2.0 - 1.0,
                                 stream.next_uniform() * 2.0 - 1.0);
    }
    const double norm = std::sqrt(in.norm_sq());
    if (norm < 1e-6) continue;
    for (auto& amp : in.a) amp /= norm;
    REQUIRE(near(oracle_pbs(in).norm_sq(), 1.0));
  }
}

TEST_CASE("half-wave plate amplitude map") {
  SUBCASE("pi/4 sends H to -iV") {
    const AmplitudePair out = oracle_hwp({1.0, 0.0}, kPi / 4.0);
    CHECK(near(std::abs(out.h), 0.0));
    CHECK(near(std::abs(out.v - std::complex<double>(0.0, -1.0)), 0.0));
  }
  SUBCASE("zero axis sends V to iV") {
    const AmplitudePair out = oracle_hwp({0.0, 1.0}, 0.0);
    CHECK(near(std::abs(out.h), 0.0));
    CHECK(near(std::abs(out.v - kI), 0.0));
  }
  SUBCASE("applying twice negates the state") {
    RandomStream stream(82);
    for (int trial = 0; trial < 1000; ++trial) {
      const double xi = stream.next_uniform() * kPi / 2.0;
      const AmplitudePair in{std::polar(std::cos(xi), stream.next_uniform()),
                             std::polar(std::sin(xi), stream.next_uniform())};
      const double angle = stream.next_uniform() * kPi;
      const AmplitudePair out = oracle_hwp(oracle_hwp(in, angle), angle);
      REQUIRE(std::abs(out.h + in.h) <= 1e-12);
      REQUIRE(std::abs(out.v + in.v) <= 1e-12);
    }
  }
}

TEST_CASE("polarizer law values") {
  CHECK(near(oracle_malus(0.0).first, 1.0));
  CHECK(near(oracle_malus(0.0).second, 0.0));
  CHECK(near(oracle_malus(kPi / 4.0).first, 0.5));
  CHECK(near(oracle_malus(kPi / 3.0).first, 0.25));
  CHECK(near(oracle_malus(kPi / 3.0).second, 0.75));
}

TEST_CASE("interferometer oracle endpoints") {
  CHECK(near(oracle_wheeler(0.0, true), 1.0));
  CHECK(near(oracle_wheeler(kPi, true), 0.0));
  CHECK(near(oracle_wheeler(kPi / 2.0, true), 0.5));
}

TEST_CASE("closed configuration follows the half-angle fringe on a 1-degree grid") {
  for (int deg = 0; deg <= 360; ++deg) {
    const double phi = deg * kPi / 180.0;
    const double expected = std::cos(phi / 2.0) * std::cos(phi / 2.0);
    REQUIRE(std::abs(oracle_wheeler(phi, true) - expected) <= 1e-12);
  }
}

TEST_CASE("open configuration is flat at one half") {
  for (int deg = 0; deg <= 360; ++deg) {
    REQUIRE(std::abs(oracle_wheeler(deg * kPi / 180.0, false) - 0.5) <= 1e-12);
  }
}

TEST_CASE("amplitude propagation conserves probability on both presets") {
  const RandomStream master(83);
  SUBCASE("interferometer") {
    Network net = build_wheeler_network(0.99, master);
    for (int deg = 0; deg <= 360; deg += 30) {
      set_phase_shift(net, deg * kPi / 180.0);
      for (bool closed : {false, true}) {
        const ChannelProbabilities probs = propagate_amplitudes(net, closed);
        REQUIRE(near(probs.p0 + probs.p1 + probs.exceptional, 1.0));
        // the ideal wiring keeps the dark output empty
        REQUIRE(probs.exceptional <= 1e-12);
      }
    }
  }
  SUBCASE("polarizer") {
    Network net = build_malus_network(0.99, master);
    for (int deg = 0; deg <= 90; deg += 15) {
      const double xi = deg * kPi / 180.0;
      set_source_polarization(net, xi);
      const ChannelProbabilities probs = propagate_amplitudes(net, false);
      REQUIRE(near(probs.p0 + probs.p1, 1.0));
      REQUIRE(near(probs.p0, oracle_malus(xi).first));
    }
  }
}
