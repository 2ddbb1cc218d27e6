// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "ergochain/dynamics.hpp"
#include "ergochain/ergotropy.hpp"
#include "ergochain/error.hpp"
#include "oracles.hpp"

using namespace ergochain;
using std::numbers::pi;

namespace {

ChainConfig make(int n, double alpha = 0.0, double b = 1.0, double j = 1.0) {
  ChainConfig c;
  c.n = n;
  c.alpha = alpha;
  c.b = b;
  c.j = j;
  return c;
}

SpectralDecomposition spectrum(const ChainConfig& c, std::uint64_t r = 0) {
  return diagonalize(build_hamiltonian(disordered_bonds(c, r), c));
}

}  // namespace

TEST_CASE("amplitude at t = 0 is the identity") {
  for (int n : {2, 5, 16}) {
    for (double a : {0.0, 0.5, 1.0}) {
      const auto dec = spectrum(make(n, a));
      const auto f1 = amplitude_spectral(dec, 1, 0.0);
      CHECK(std::abs(f1.value - Complex(1.0, 0.0)) < 1e-12);
      for (int site = 2; site <= n; ++site) CHECK(std::abs(amplitude_spectral(dec, site, 0.0).value) < 1e-12);
    }
  }
  CHECK_THROWS_AS(amplitude_spectral(spectrum(make(4)), 0, 1.0), Error);
  CHECK_THROWS_AS(amplitude_spectral(spectrum(make(4)), 5, 1.0), Error);
}

TEST_CASE("pst chain transfers perfectly at the mirror time") {
  const ChainConfig c = make(8, 1.0);
  const double t = pi * 8 / (4 * gn_factor(8)) / c.j;
  CHECK(std::abs(std::abs(amplitude_spectral(spectrum(c), 8, t).value) - 1.0) < 1e-9);
}

TEST_CASE("pst periodicity") {
  for (int n : {2, 3, 7, 12, 33}) {
    const ChainConfig c = make(n, 1.0, 0.4, 1.7);
    const auto dec = spectrum(c);
    const double period = reflection_time(1.0, n) / c.j;
    for (int m = 1; m <= 6; ++m) {
      const int site = m % 2 ? n : 1;
      REQUIRE(std::abs(std::abs(amplitude_spectral(dec, site, m * period).value) - 1.0) < 1e-8);
    }
  }
}

TEST_CASE("uniform closed form") {
  const ChainConfig c2 = make(2);
  CHECK(std::abs(amplitude_uniform_closed(c2, 2, pi / 2).value) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(std::abs(amplitude_uniform_closed(make(5), 3, 0.0).value) < 1e-14);
  oracle::Rng rng(31);
  const ChainConfig c5 = make(5, 0.0, 1.0);
  const auto dec = spectrum(c5);
  for (int i = 0; i < 50; ++i) {
    const double t = rng.uniform(0.0, 20.0);
    const int site = rng.integer(1, 5);
    CHECK(std::abs(std::abs(amplitude_uniform_closed(c5, site, t).value) -
                   std::abs(amplitude_spectral(dec, site, t).value)) < 1e-10);
  }
  CHECK_THROWS_AS(amplitude_uniform_closed(make(5, 0.3), 2, 1.0), Error);
}

TEST_CASE("pst closed form") {
  CHECK(std::abs(amplitude_pst_closed(make(2, 1.0), 2, pi / 2).value) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(std::abs(amplitude_pst_closed(make(7, 1.0), 1, 0.0).value - Complex(1.0, 0.0)) < 1e-12);
  const ChainConfig c7 = make(7, 1.0, 1.0);
  const auto dec = spectrum(c7);
  for (int site = 1; site <= 7; ++site)
    CHECK(std::abs(std::abs(amplitude_pst_closed(c7, site, 0.37).value) -
                   std::abs(amplitude_spectral(dec, site, 0.37).value)) < 1e-9);
  CHECK_THROWS_AS(amplitude_pst_closed(make(7, 0.0), 2, 1.0), Error);
}

TEST_CASE("closed forms agree in modulus on random chains and times") {
  oracle::Rng rng(41);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = rng.integer(2, 20);
    const double t = rng.uniform(0.0, 30.0);
    const int site = rng.integer(1, n);
    for (double a : {0.0, 1.0}) {
      const ChainConfig c = make(n, a, rng.uniform(0.0, 2.0));
      const Complex closed = a == 0.0 ? amplitude_uniform_closed(c, site, t).value : amplitude_pst_closed(c, site, t).value;
      const Complex spec = amplitude_spectral(spectrum(c), site, t).value;
      REQUIRE(std::abs(std::abs(closed) - std::abs(spec)) < 1e-9);
    }
  }
}

TEST_CASE("unitarity over random chains and long times") {
  oracle::Rng rng(12);
  for (int trial = 0; trial < 60; ++trial) {
    ChainConfig c = make(rng.integer(2, 128), rng.uniform(), rng.uniform(0.0, 2.0));
    c.delta = rng.uniform(0.0, 0.3);
    c.seed = rng.next();
    const auto dec = spectrum(c);
    const double t = rng.uniform(0.0, 1000.0);
    double total = 0.0;
    for (int site = 1; site <= c.n; ++site) {
      const double p = std::norm(amplitude_spectral(dec, site, t).value);
      REQUIRE(p <= 1.0 + 1e-12);
      total += p;
    }
    REQUIRE(std::abs(total - 1.0) < 1e-10);
  }
}

TEST_CASE("spectral propagation matches RK4 integration") {
  oracle::Rng rng(77);
  for (int trial = 0; trial < 12; ++trial) {
    ChainConfig c = make(rng.integer(2, 16), rng.uniform(), rng.uniform(0.0, 1.0));
    c.delta = rng.uniform(0.0, 0.2);
    c.seed = rng.next();
    const auto bonds = disordered_bonds(c, 0);
    const auto h = build_hamiltonian(bonds, c);
    const double t = rng.uniform(0.0, 50.0) / c.j;
    const auto psi = oracle::rk4_evolve(oracle::tridiagonal(h.diagonal, bonds.bonds), t, 1e-3 / c.j);
    const auto dec = diagonalize(h);
    for (int site = 1; site <= c.n; ++site)
      REQUIRE(std::abs(amplitude_spectral(dec, site, t).value - psi[static_cast<std::size_t>(site - 1)]) < 1e-6);
  }
}

TEST_CASE("amplitude series matches the direct sum") {
  const ChainConfig c = make(21, 0.3, 0.9);
  const auto dec = spectrum(c);
  const AmplitudeSeries series(dec, 21);
  for (double t : {0.0, 0.5, 3.3, 17.0, 250.0})
    CHECK(std::abs(series(t) - amplitude_spectral(dec, 21, t).value) < 1e-12);
}

TEST_CASE("reduced state") {
  const auto s1 = reduced_state(PureSite{pi, 0.0}, {Complex(1.0, 0.0), 4, 1.0});
  CHECK(s1.p1 == doctest::Approx(1.0));
  CHECK(std::abs(s1.c) < 1e-15);
  const auto s2 = reduced_state(MixedSite{0.75}, {Complex(0.0, 0.0), 4, 1.0});
  CHECK(s2.p0 == 1.0);
  CHECK(s2.c == Complex(0.0, 0.0));
  const auto s3 = reduced_state(PureSite{pi / 2, 0.0}, {Complex(std::sqrt(0.5), 0.0), 4, 1.0});
  CHECK(s3.p1 == doctest::Approx(0.25));
  CHECK(std::abs(s3.c) == doctest::Approx(0.5 * std::sqrt(0.5)).epsilon(1e-12));
  CHECK(std::abs(std::abs(s3.c) - 0.3536) < 1e-4);

  const auto phased = reduced_state(PureSite{pi / 3, 1.1}, {Complex(0.3, 0.4), 4, 1.0});
  const auto plain = reduced_state(PureSite{pi / 3, 0.0}, {Complex(0.3, 0.4), 4, 1.0});
  CHECK(std::abs(std::abs(phased.c) - std::abs(plain.c)) < 1e-15);
  CHECK(phased.p1 == plain.p1);
}

TEST_CASE("reduced state equals the partial trace of full 2^N propagation") {
  oracle::Rng rng(2);
  for (int trial = 0; trial < 10; ++trial) {
    ChainConfig c = make(rng.integer(2, 7), rng.uniform(), rng.uniform(0.2, 1.5));
    c.delta = rng.uniform(0.0, 0.2);
    c.seed = rng.next();
    const auto bonds = disordered_bonds(c, 0);
    const auto dec = diagonalize(build_hamiltonian(bonds, c));
    const double t = rng.uniform(0.0, 10.0);
    const bool pure = trial % 2 == 0;
    const InitialSiteState init = pure ? InitialSiteState{PureSite{rng.uniform(0.0, pi), rng.uniform(0.0, 2 * pi)}}
                                       : InitialSiteState{MixedSite{rng.uniform()}};
    const QubitState q0 = initial_qubit(init);
    const oracle::Complex rho1[2][2] = {{q0.p0, q0.c}, {std::conj(q0.c), q0.p1}};
    for (int site = 1; site <= c.n; ++site) {
      const auto ref = oracle::full_space_reduced(bonds.bonds, c.b, rho1, site, t);
      const auto got = reduced_state(init, amplitude_spectral(dec, site, t));
      REQUIRE(std::abs(got.p1 - ref.p1) < 1e-10);
      REQUIRE(std::abs(got.p0 - ref.p0) < 1e-10);
      REQUIRE(std::abs(std::abs(got.c) - std::abs(ref.c)) < 1e-10);
    }
  }
}

TEST_CASE("bessel limit") {
  const ChainConfig c = make(10);
  CHECK(std::abs(amplitude_bessel_limit(c, 2, 0.0).value) == 0.0);
  CHECK(std::abs(amplitude_bessel_limit(c, 5, 10.0).value) == doctest::Approx(0.13067093355486337).epsilon(1e-12));
  CHECK(std::abs(std::abs(amplitude_bessel_limit(c, 5, 10.0).value) - 0.1307) < 1e-4);
  // the continuum formula double counts n = 1
  CHECK(std::abs(amplitude_bessel_limit(c, 1, 0.0).value) == doctest::Approx(2.0));
}

TEST_CASE("initial qubit states") {
  const auto p = initial_qubit(PureSite{pi / 2, 0.3});
  CHECK(p.p0 + p.p1 == doctest::Approx(1.0));
  CHECK(std::norm(p.c) == doctest::Approx(p.p0 * p.p1));
  const auto m = initial_qubit(MixedSite{0.3});
  CHECK(m.c == Complex(0.0, 0.0));
  CHECK(m.p1 == 0.3);
  CHECK_THROWS_AS(initial_qubit(MixedSite{1.2}), Error);
  CHECK_THROWS_AS((QubitState{0.7, 0.7, {0.0, 0.0}}.validate()), Error);
  CHECK_THROWS_AS((QubitState{0.5, 0.5, {0.6, 0.0}}.validate()), Error);
}
