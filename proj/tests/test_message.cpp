#include <cmath>
#include <numbers>
#include <stdexcept>

#include "doctest.h"
#include "message.hpp"
#include "rng.hpp"
#include "test_support.hpp"

using namespace photonet;
using testutil::near;

namespace {
constexpr double kPi = std::numbers::pi;
constexpr double kRoot2Half = 0.7071067811865476;
}  // namespace

TEST_CASE("message_from_angles identity case") {
  const Message m = message_from_angles(0.0, 0.0, 0.0);
  CHECK(near(m.h.c, 1.0));
  CHECK(near(m.h.s, 0.0));
  CHECK(near(m.v.c, 1.0));
  CHECK(near(m.v.s, 0.0));
  CHECK(near(m.p.c, 1.0));
  CHECK(near(m.p.s, 0.0));
}

TEST_CASE("message_from_angles diagonal polarization") {
  const Message m = message_from_angles(0.0, 0.0, kPi / 4.0);
  CHECK(near(m.p.c, kRoot2Half));
  CHECK(near(m.p.s, kRoot2Half));
}

TEST_CASE("message_from_angles absorbs polarization signs into phases") {
  const Message m = message_from_angles(0.0, 0.0, 3.0 * kPi / 4.0);
  CHECK(near(m.p.c, kRoot2Half));
  CHECK(near(m.p.s, kRoot2Half));
  CHECK(near(m.h.c, -1.0));
  CHECK(near(m.h.s, 0.0));
  CHECK(near(m.v.c, 1.0));
  CHECK(m.valid());
}

TEST_CASE("message_to_amplitudes on the basis cases") {
  SUBCASE("pure H") {
    const AmplitudePair a = message_to_amplitudes(message_from_angles(0.0, 0.0, 0.0));
    CHECK(near(std::abs(a.h - std::complex<double>(1.0, 0.0)), 0.0));
    CHECK(near(std::abs(a.v), 0.0));
  }
  SUBCASE("diagonal with quarter-turn V phase") {
    const AmplitudePair a = message_to_amplitudes(message_from_angles(0.0, kPi / 2.0, kPi / 4.0));
    CHECK(near(std::abs(a.h - std::complex<double>(kRoot2Half, 0.0)), 0.0));
    CHECK(near(std::abs(a.v - std::complex<double>(0.0, kRoot2Half)), 0.0));
  }
  SUBCASE("pure V") {
    const AmplitudePair a = message_to_amplitudes(message_from_angles(kPi, 0.0, kPi / 2.0));
    CHECK(std::abs(a.h) <= 1e-12);
    CHECK(near(std::abs(a.v - std::complex<double>(1.0, 0.0)), 0.0));
  }
}

TEST_CASE("amplitudes_to_message basis cases and conventions") {
  SUBCASE("pure H defaults the V phase") {
    const Message m = amplitudes_to_message({{1.0, 0.0}, {0.0, 0.0}});
    CHECK(near(m.p.c, 1.0));
    CHECK(near(m.p.s, 0.0));
    CHECK(near(m.h.c, 1.0));
    CHECK(near(m.v.c, 1.0));
    CHECK(near(m.v.s, 0.0));
  }
  SUBCASE("pure V with phase -pi/2") {
    const Message m = amplitudes_to_message({{0.0, 0.0}, {0.0, -1.0}});
    CHECK(near(m.p.c, 0.0));
    CHECK(near(m.p.s, 1.0));
    CHECK(near(m.v.c, 0.0));
    CHECK(near(m.v.s, -1.0));
    CHECK(near(m.h.c, 1.0));
  }
  SUBCASE("diagonal recovers both phases") {
    const Message m = amplitudes_to_message({{kRoot2Half, 0.0}, {0.0, kRoot2Half}});
    CHECK(near(m.p.c, kRoot2Half));
    CHECK(near(m.p.s, kRoot2Half));
    CHECK(near(m.h.c, 1.0));
    CHECK(near(m.h.s, 0.0));
    CHECK(near(m.v.c, 0.0));
    CHECK(near(m.v.s, 1.0));
  }
  SUBCASE("zero vector is rejected") {
    CHECK_THROWS_AS(amplitudes_to_message({{0.0, 0.0}, {0.0, 0.0}}), std::invalid_argument);
  }
}

TEST_CASE("round trip over random normalized amplitudes") {
  RandomStream stream(42);
  for (int trial = 0; trial < 5000; ++trial) {
    // both components well away from the degenerate threshold
    const double xi = 1e-6 + stream.next_uniform() * (kPi / 2.0 - 2e-6);
    const double ph = (stream.next_uniform() * 2.0 - 1.0) * kPi;
    const double pv = (stream.next_uniform() * 2.0 - 1.0) * kPi;
    const AmplitudePair a{std::polar(std::cos(xi), ph), std::polar(std::sin(xi), pv)};
    const AmplitudePair b = message_to_amplitudes(amplitudes_to_message(a));
    CHECK(std::abs(a.h - b.h) <= 1e-12);
    CHECK(std::abs(a.v - b.v) <= 1e-12);
  }
}

TEST_CASE("canonicalization is idempotent on canonical messages") {
  RandomStream stream(43);
  for (int trial = 0; trial < 5000; ++trial) {
    const double xi = 1e-6 + stream.next_uniform() * (kPi / 2.0 - 2e-6);
    const Message m = message_from_angles((stream.next_uniform() * 2.0 - 1.0) * kPi,
                                          (stream.next_uniform() * 2.0 - 1.0) * kPi, xi);
    const Message back = amplitudes_to_message(message_to_amplitudes(m));
    CHECK(near(back.h.c, m.h.c));
    CHECK(near(back.h.s, m.h.s));
    CHECK(near(back.v.c, m.v.c));
    CHECK(near(back.v.s, m.v.s));
    CHECK(near(back.p.c, m.p.c));
    CHECK(near(back.p.s, m.p.s));
  }
}

TEST_CASE("operations always yield unit pairs") {
  RandomStream stream(44);
  for (int trial = 0; trial < 5000; ++trial) {
    const Message m = testutil::random_canonical_message(stream);
    CHECK(m.valid());
    const Message back = amplitudes_to_message(message_to_amplitudes(m));
    CHECK(back.valid());
  }
}
