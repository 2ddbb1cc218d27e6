// SPDX-License-Identifier: Apache-2.0
#include "ergochain/ergotropy.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "ergochain/error.hpp"

namespace ergochain {

double qubit_ergotropy(const QubitState& rho, double b) {
  rho.validate();
  if (!(b > 0.0)) fail(ErrorKind::InvalidInput, "B must be > 0 for the local Hamiltonian -B sigma_z");
  // Eigenvalues 1/2 +- r. |0> has energy -B, |1> has +B; the passive state puts
  // 1/2 + r on |0>, so the ergotropy is B[(p1 - p0) + 2r].
  const double gap = rho.p0 - rho.p1;
  const double r = std::sqrt(gap * gap / 4.0 + std::norm(rho.c));
  if (gap <= 0.0) return b * (2.0 * r - gap);
  // Without inversion, 2r - gap = 4|c|^2 / (2r + gap) avoids the cancellation.
  return b * 4.0 * std::norm(rho.c) / (2.0 * r + gap);
}

double match_mixed_to_pure(double theta) {
  const double s = std::sin(theta / 2.0);
  return (1.0 + s * s) / 2.0;
}

double erg_coherent(double theta, double fsq, double b) {
  const double s = std::sin(theta / 2.0);
  const double s2 = s * s;
  const double radicand = 1.0 + 4.0 * s2 * s2 * fsq * (fsq - 1.0);
  return b * std::max(0.0, 2.0 * fsq * s2 - 1.0 + std::sqrt(std::max(0.0, radicand)));
}

double erg_mixed(double q, double fsq, double b) {
  if (q * fsq > 0.5) return b * 2.0 * (2.0 * q * fsq - 1.0);
  return 0.0;
}

double reflection_time(double alpha, int n) {
  const double a2 = alpha * alpha;
  return (std::numbers::pi / (4.0 * gn_factor(n)) * a2 + std::numbers::pi / 6.0 * (1.0 - a2)) * n;
}

double initial_ergotropy(const InitialSiteState& initial, double b) {
  return qubit_ergotropy(initial_qubit(initial), b);
}

Chain Chain::build(const ChainConfig& cfg, std::uint64_t realization) {
  cfg.validate();
  Chain c;
  c.config = cfg;
  c.bonds = disordered_bonds(cfg, realization);
  c.spectrum = diagonalize(build_hamiltonian(c.bonds, cfg));
  return c;
}

namespace {

double eta_or_nan(double erg_max, double erg_in, int n) {
  if (erg_in == 0.0) return std::numeric_limits<double>::quiet_NaN();
  return rescaled_efficiency(erg_max, erg_in, n);
}

double site_ergotropy(const InitialSiteState& initial, Complex f, double b) {
  return qubit_ergotropy(reduced_state(initial, TransitionAmplitude{f, 0, 0.0}), b);
}

}  // namespace

ErgotropyRecord erg_at_reflection(const Chain& chain, const InitialSiteState& initial) {
  const ChainConfig& cfg = chain.config;
  const double t = reflection_time(cfg.alpha, cfg.n) / cfg.j;
  const TransitionAmplitude f = amplitude_spectral(chain.spectrum, cfg.n, t);
  ErgotropyRecord rec;
  rec.erg_in = initial_ergotropy(initial, cfg.b);
  rec.erg_max = qubit_ergotropy(reduced_state(initial, f), cfg.b);
  rec.site = cfg.n;
  rec.time = t;
  rec.eta = eta_or_nan(rec.erg_max, rec.erg_in, cfg.n);
  return rec;
}

ErgotropyRecord erg_at_reflection(const ChainConfig& cfg, const InitialSiteState& initial) {
  return erg_at_reflection(Chain::build(cfg), initial);
}

ErgotropyRecord erg_max_window(const ChainConfig& cfg, const InitialSiteState& initial, double t_max, double dt) {
  if (!(t_max > 0.0)) fail(ErrorKind::InvalidInput, "time window must be > 0");
  if (!(dt > 0.0)) fail(ErrorKind::InvalidInput, "time step must be > 0");
  const Chain chain = Chain::build(cfg);
  const AmplitudeSeries series(chain.spectrum, cfg.n);

  ErgotropyRecord rec;
  rec.erg_in = initial_ergotropy(initial, cfg.b);
  rec.site = cfg.n;
  rec.erg_max = -1.0;
  auto consider = [&](double t) {
    const double e = site_ergotropy(initial, series(t), cfg.b);
    if (e > rec.erg_max || (e == rec.erg_max && t < rec.time)) {
      rec.erg_max = e;
      rec.time = t;
    }
  };
  const auto steps = static_cast<long long>(std::floor(t_max / dt + 1e-9));
  for (long long i = 1; i <= steps; ++i) consider(static_cast<double>(i) * dt);
  if (static_cast<double>(steps) * dt < t_max) consider(t_max);
  const double reflection = reflection_time(cfg.alpha, cfg.n) / cfg.j;
  if (reflection <= t_max) consider(reflection);
  rec.eta = eta_or_nan(rec.erg_max, rec.erg_in, cfg.n);
  return rec;
}

double rescaled_efficiency(double erg_max, double erg_in, int n) {
  if (erg_in == 0.0) fail(ErrorKind::UndefinedMetric, "rescaled efficiency undefined for zero initial ergotropy");
  return erg_max / erg_in * std::cbrt(static_cast<double>(n) * n);
}

}  // namespace ergochain
