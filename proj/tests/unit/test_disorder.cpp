// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "ergochain/disorder.hpp"
#include "ergochain/ergotropy.hpp"
#include "ergochain/error.hpp"
#include "oracles.hpp"

using namespace ergochain;
using std::numbers::pi;

namespace {

ChainConfig make(int n, double delta, std::uint64_t seed = 1) {
  ChainConfig c;
  c.n = n;
  c.alpha = 1.0;
  c.delta = delta;
  c.seed = seed;
  return c;
}

}  // namespace

TEST_CASE("clean ensembles are exact") {
  for (int n : {5, 25}) {
    const auto s = ensemble_erg(make(n, 0.0), PureSite{pi / 2, 0.0}, 50);
    CHECK(s.mean == doctest::Approx(initial_ergotropy(PureSite{pi / 2, 0.0}, 1.0)).epsilon(1e-9));
    CHECK(s.stddev < 1e-12);
    CHECK(s.count == 50);
    CHECK(s.failures == 0);
    const auto m = matched_ensemble(make(n, 0.0), pi / 2, 50);
    CHECK(std::abs(m.gamma) <= 1e-12);
  }
}

TEST_CASE("ensembles are deterministic and independent of thread count") {
  const auto cfg = make(12, 0.15, 77);
  const auto a = ensemble_erg(cfg, PureSite{pi / 2, 0.0}, 200, 1);
  const auto b = ensemble_erg(cfg, PureSite{pi / 2, 0.0}, 200, 1);
  const auto c = ensemble_erg(cfg, PureSite{pi / 2, 0.0}, 200, 4);
  CHECK(a.mean == b.mean);
  CHECK(a.stddev == b.stddev);
  CHECK(a.mean == c.mean);
  CHECK(a.stddev == c.stddev);
  const auto d = ensemble_erg(make(12, 0.15, 78), PureSite{pi / 2, 0.0}, 200, 1);
  CHECK(a.mean != d.mean);
}

TEST_CASE("samples match single-chain evaluation") {
  const auto cfg = make(9, 0.2, 5);
  const auto samples = ensemble_samples(cfg, MixedSite{0.8}, 20);
  REQUIRE(samples.size() == 20);
  for (std::size_t r = 0; r < samples.size(); ++r) {
    REQUIRE(samples[r].has_value());
    const Chain chain = Chain::build(cfg, r);
    const double t = reflection_time(1.0, 9);
    const double e = qubit_ergotropy(reduced_state(MixedSite{0.8}, amplitude_spectral(chain.spectrum, 9, t)), 1.0);
    CHECK(*samples[r] == e);
  }
}

TEST_CASE("coherent encoding beats the matched mixed one under weak disorder") {
  const auto m = matched_ensemble(make(5, 0.05, 3), pi / 2, 1000, 2);
  CHECK(m.coherent.mean >= m.mixed.mean - 3 * m.difference_stderr);
  CHECK(m.gamma >= -3 * m.gamma_stderr);
}

TEST_CASE("gamma metric") {
  EnsembleStats coh, mix;
  coh.mean = 1.0;
  mix.mean = 0.0;
  CHECK(gamma_metric(coh, mix) == 1.0);
  mix.mean = 1.0;
  CHECK(gamma_metric(coh, mix) == 0.0);
  coh.mean = 0.0;
  CHECK_THROWS_AS(gamma_metric(coh, mix), Error);
  const auto m = matched_ensemble(make(5, 0.1), 0.0, 10);
  CHECK(std::isnan(m.gamma));
}

TEST_CASE("summary statistics") {
  const std::vector<double> v{1.0, 2.0, 3.0, 4.0};
  const auto s = summarize(v, 0.1);
  CHECK(s.mean == 2.5);
  CHECK(s.stddev == doctest::Approx(std::sqrt(5.0 / 3.0)));
  CHECK(s.count == 4);
  CHECK(s.delta == 0.1);
  CHECK_THROWS_AS(ensemble_erg(make(5, 0.1), PureSite{1.0, 0.0}, 0), Error);
}

TEST_CASE("mean ergotropy falls with disorder and the drop starts quadratically") {
  const double deltas[] = {0.0, 0.05, 0.1, 0.15, 0.2, 0.25, 0.3};
  for (int n : {5, 25}) {
    double prev_mean = 1e9, prev_se = 0.0;
    for (double d : deltas) {
      const auto s = ensemble_erg(make(n, d, 11), PureSite{pi / 2, 0.0}, 1000, 2);
      const double se = s.stddev / std::sqrt(static_cast<double>(s.count));
      CHECK(s.mean <= prev_mean + 3.0 * std::hypot(se, prev_se));
      prev_mean = s.mean;
      prev_se = se;
    }
  }
  // Quadratic fit on [0, 0.05]: the linear term is compatible with zero.
  const int n = 25;
  std::vector<double> x, y, w;
  for (int i = 0; i <= 5; ++i) {
    const double d = 0.01 * i;
    const auto s = ensemble_erg(make(n, d, 12), PureSite{pi / 2, 0.0}, 1000, 2);
    x.push_back(d);
    y.push_back(s.mean);
    w.push_back(i == 0 ? 1e-12 : s.stddev / std::sqrt(static_cast<double>(s.count)));
  }
  // mean(d) - mean(0) = a d + b d^2 through the origin, least squares on d > 0.
  double s11 = 0, s12 = 0, s22 = 0, r1 = 0, r2 = 0;
  for (std::size_t i = 1; i < x.size(); ++i) {
    const double wi = 1.0 / (w[i] * w[i]);
    const double d = x[i], d2 = d * d, dy = y[i] - y[0];
    s11 += wi * d * d;
    s12 += wi * d * d2;
    s22 += wi * d2 * d2;
    r1 += wi * d * dy;
    r2 += wi * d2 * dy;
  }
  const double det = s11 * s22 - s12 * s12;
  const double a = (r1 * s22 - r2 * s12) / det;
  const double sigma_a = std::sqrt(s22 / det);
  CHECK(std::abs(a) <= 3.0 * sigma_a);
}
