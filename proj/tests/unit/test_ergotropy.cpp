// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "ergochain/ergotropy.hpp"
#include "ergochain/error.hpp"
#include "oracles.hpp"

using namespace ergochain;
using std::numbers::pi;

namespace {

ChainConfig make(int n, double alpha = 0.0, double b = 1.0) {
  ChainConfig c;
  c.n = n;
  c.alpha = alpha;
  c.b = b;
  return c;
}

}  // namespace

TEST_CASE("qubit ergotropy examples") {
  CHECK(qubit_ergotropy({0.0, 1.0, {0.0, 0.0}}, 1.0) == doctest::Approx(2.0));
  CHECK(qubit_ergotropy({0.5, 0.5, {0.0, 0.0}}, 1.0) == 0.0);
  CHECK(qubit_ergotropy({0.375, 0.625, {0.0, 0.0}}, 1.0) == doctest::Approx(0.5));
  CHECK(qubit_ergotropy({1.0, 0.0, {0.0, 0.0}}, 1.0) == 0.0);
  CHECK_THROWS_AS(qubit_ergotropy({0.5, 0.5, {0.0, 0.0}}, 0.0), Error);
  CHECK_THROWS_AS(qubit_ergotropy({0.8, 0.8, {0.0, 0.0}}, 1.0), Error);
}

TEST_CASE("qubit ergotropy equals the brute-force eigenvalue route") {
  oracle::Rng rng(101);
  for (int i = 0; i < 10000; ++i) {
    const double p1 = rng.uniform();
    const double p0 = 1.0 - p1;
    const double r = std::sqrt(p0 * p1) * rng.uniform();
    const Complex c = std::polar(r, rng.uniform(0.0, 2 * pi));
    const double b = rng.uniform(0.1, 3.0);
    REQUIRE(std::abs(qubit_ergotropy({p0, p1, c}, b) - std::max(0.0, oracle::qubit_ergotropy(p0, p1, c, b))) <
            1e-12 * std::max(1.0, b));
  }
}

TEST_CASE("matched mixed state") {
  CHECK(match_mixed_to_pure(pi) == doctest::Approx(1.0));
  CHECK(match_mixed_to_pure(pi / 2) == doctest::Approx(0.75));
  CHECK(match_mixed_to_pure(0.0) == 0.5);
  oracle::Rng rng(3);
  for (int i = 0; i < 200; ++i) {
    const double th = rng.uniform(0.0, pi);
    const double b = rng.uniform(0.2, 2.0);
    REQUIRE(std::abs(initial_ergotropy(PureSite{th, 0.0}, b) - initial_ergotropy(MixedSite{match_mixed_to_pure(th)}, b)) <
            1e-12);
  }
}

TEST_CASE("closed forms") {
  CHECK(erg_coherent(pi, 1.0, 1.0) == doctest::Approx(2.0));
  CHECK(erg_coherent(pi, 0.5, 1.0) == doctest::Approx(0.0).scale(1.0));
  for (double th : {0.1, 1.0, 2.0, pi}) CHECK(erg_coherent(th, 0.0, 1.0) == 0.0);
  CHECK(erg_mixed(1.0, 1.0, 1.0) == doctest::Approx(2.0));
  CHECK(erg_mixed(1.0, 0.75, 1.0) == doctest::Approx(1.0));
  CHECK(erg_mixed(0.6, 0.8, 1.0) == 0.0);
}

TEST_CASE("closed forms equal qubit ergotropy of the evolved state on 10^4 draws") {
  oracle::Rng rng(202);
  for (int i = 0; i < 10000; ++i) {
    const double th = rng.uniform(0.0, pi);
    const double q = rng.uniform();
    const Complex f = std::polar(std::sqrt(rng.uniform()), rng.uniform(0.0, 2 * pi));
    const TransitionAmplitude amp{f, 2, 0.0};
    const double fsq = std::norm(f);
    REQUIRE(std::abs(erg_coherent(th, fsq, 1.0) - qubit_ergotropy(reduced_state(PureSite{th, 0.0}, amp), 1.0)) < 1e-12);
    REQUIRE(std::abs(erg_mixed(q, fsq, 1.0) - qubit_ergotropy(reduced_state(MixedSite{q}, amp), 1.0)) < 1e-12);
  }
}

TEST_CASE("reflection time") {
  CHECK(reflection_time(1.0, 4) == doctest::Approx(pi));
  CHECK(reflection_time(0.0, 6) == doctest::Approx(pi));
  CHECK(reflection_time(1.0, 2) == doctest::Approx(pi / 2));
  CHECK(reflection_time(0.5, 10) == doctest::Approx((pi / 4 * 0.25 + pi / 6 * 0.75) * 10));
}

TEST_CASE("erg at reflection") {
  oracle::Rng rng(9);
  for (int n = 2; n <= 40; ++n) {
    const double th = rng.uniform(0.0, pi);
    const auto rc = erg_at_reflection(make(n, 1.0), PureSite{th, 0.0});
    CHECK(std::abs(rc.erg_max - rc.erg_in) < 1e-9);
    const auto rm = erg_at_reflection(make(n, 1.0), MixedSite{rng.uniform()});
    CHECK(std::abs(rm.erg_max - rm.erg_in) < 1e-9);
    CHECK(rc.site == n);
  }
  const auto two = erg_at_reflection(make(2, 0.0), PureSite{pi, 0.0});
  CHECK(two.erg_max == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(two.time == doctest::Approx(pi / 3));
  CHECK(erg_at_reflection(make(100, 0.0), MixedSite{0.625}).erg_max == 0.0);
  CHECK(std::isnan(erg_at_reflection(make(5), PureSite{0.0, 0.0}).eta));
}

TEST_CASE("ergotropy never grows along the chain") {
  oracle::Rng rng(10);
  for (int i = 0; i < 300; ++i) {
    ChainConfig c = make(rng.integer(2, 60), rng.uniform(), rng.uniform(0.2, 2.0));
    const InitialSiteState s = i % 2 ? InitialSiteState{PureSite{rng.uniform(0.0, pi), 0.0}}
                                     : InitialSiteState{MixedSite{rng.uniform()}};
    const auto r = erg_at_reflection(c, s);
    REQUIRE(r.erg_max >= 0.0);
    REQUIRE(r.erg_max <= r.erg_in + 1e-12);
  }
}

TEST_CASE("window maximisation") {
  const auto pst = erg_max_window(make(10, 1.0), PureSite{pi / 2, 0.0}, 20.0);
  CHECK(std::abs(pst.erg_max - pst.erg_in) < 1e-9);
  CHECK(std::abs(pst.time - reflection_time(1.0, 10)) < 0.01);

  for (double a : {0.0, 0.4}) {
    const auto c = make(12, a);
    const auto at = erg_at_reflection(c, PureSite{pi, 0.0});
    const auto w = erg_max_window(c, PureSite{pi, 0.0}, 3.0 * reflection_time(a, 12));
    CHECK(w.erg_max >= at.erg_max - 1e-12);
  }

  bool later_peak = false;
  for (int n = 15; n <= 30 && !later_peak; ++n) {
    const auto c = make(n, 0.0);
    const auto at = erg_at_reflection(c, PureSite{pi, 0.0});
    const auto w = erg_max_window(c, PureSite{pi, 0.0}, 1000.0);
    later_peak = w.erg_max > at.erg_max;
  }
  CHECK(later_peak);
  CHECK_THROWS_AS(erg_max_window(make(4), PureSite{pi, 0.0}, 0.0), Error);
}

TEST_CASE("rescaled efficiency") {
  CHECK(rescaled_efficiency(0.5, 1.0, 8) == doctest::Approx(2.0));
  CHECK(rescaled_efficiency(0.0, 1.0, 8) == 0.0);
  CHECK(rescaled_efficiency(1.0, 1.0, 8) == doctest::Approx(4.0));
  CHECK_THROWS_AS(rescaled_efficiency(0.5, 0.0, 8), Error);
}

TEST_CASE("coherent encoding dominates the matched mixed encoding on the uniform chain") {
  for (double th : {pi / 3, pi / 2})
    for (int n = 4; n <= 100; ++n) {
      const auto c = make(n, 0.0);
      const auto coh = erg_at_reflection(c, PureSite{th, 0.0});
      const auto mix = erg_at_reflection(c, MixedSite{match_mixed_to_pure(th)});
      REQUIRE(coh.erg_max >= mix.erg_max - 1e-12);
    }
}

TEST_CASE("optimal theta moves below pi as the chain grows") {
  auto argmax_theta = [](int n) {
    const auto c = make(n, 0.0);
    double best = -1.0, at = 0.0;
    for (int i = 0; i <= 2000; ++i) {
      const double th = pi * i / 2000;
      const double e = erg_at_reflection(c, PureSite{th, 0.0}).erg_max;
      if (e > best) best = e, at = th;
    }
    return at;
  };
  const double small = argmax_theta(10), large = argmax_theta(100);
  CHECK(large < small);
  CHECK(small < pi);

  // With a small arriving weight, erg_coherent ~ 2 f s^2 (1 - s^2) with
  // s = sin(theta/2), so the optimum tends to theta = pi/2 and theta = pi
  // extracts nothing once f < 1/2.
  for (double fsq : {0.01, 0.1, 0.3}) {
    double best = -1.0, at = 0.0;
    for (int i = 0; i <= 20000; ++i) {
      const double th = pi * i / 20000;
      const double e = erg_coherent(th, fsq, 1.0);
      if (e > best) best = e, at = th;
    }
    CHECK(at < pi);
    CHECK(erg_coherent(pi, fsq, 1.0) == 0.0);
    if (fsq == 0.01) CHECK(std::abs(at - pi / 2) < 0.05);
  }
}
