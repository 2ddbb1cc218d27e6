// SPDX-License-Identifier: Apache-2.0
#include "ergochain/dynamics.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "ergochain/error.hpp"

namespace ergochain {

namespace {

void check_site(int n, int size) {
  if (n < 1 || n > size)
    fail(ErrorKind::InvalidInput, "site " + std::to_string(n) + " outside chain of length " + std::to_string(size));
}

void require_endpoint(const ChainConfig& cfg, double alpha, const char* what) {
  cfg.validate();
  if (cfg.alpha != alpha || cfg.delta != 0.0)
    fail(ErrorKind::Misuse, std::string(what) + " requires alpha = " + std::to_string(alpha) + " and delta = 0");
}

Complex phase(double angle) { return {std::cos(angle), std::sin(angle)}; }

}  // namespace

void QubitState::validate() const {
  constexpr double kTraceTol = 1e-12;
  constexpr double kPopTol = 1e-14;
  constexpr double kPosTol = 1e-12;
  if (!std::isfinite(p0) || !std::isfinite(p1) || !std::isfinite(c.real()) || !std::isfinite(c.imag()))
    fail(ErrorKind::InvalidInput, "density matrix has non-finite entries");
  if (std::abs(p0 + p1 - 1.0) > kTraceTol) fail(ErrorKind::InvalidInput, "density matrix trace differs from 1");
  if (p0 < -kPopTol || p1 < -kPopTol) fail(ErrorKind::InvalidInput, "negative population");
  if (std::norm(c) > p0 * p1 + kPosTol) fail(ErrorKind::InvalidInput, "coherence violates positivity");
}

QubitState initial_qubit(const InitialSiteState& initial) {
  QubitState s;
  if (const auto* pure = std::get_if<PureSite>(&initial)) {
    const double cs = std::cos(pure->theta / 2.0);
    const double sn = std::sin(pure->theta / 2.0);
    s.p1 = sn * sn;
    s.p0 = 1.0 - s.p1;
    s.c = cs * sn * phase(-pure->phi);
  } else {
    const double q = std::get<MixedSite>(initial).q;
    if (!(q >= 0.0 && q <= 1.0)) fail(ErrorKind::InvalidInput, "mixed population q must lie in [0, 1]");
    s.p0 = 1.0 - q;
    s.p1 = q;
  }
  return s;
}

TransitionAmplitude amplitude_spectral(const SpectralDecomposition& dec, int n, double t) {
  check_site(n, dec.size());
  Complex sum{0.0, 0.0};
  for (int k = 0; k < dec.size(); ++k) sum += dec.component(k, 0) * dec.component(k, n - 1) * phase(-dec.energy(k) * t);
  return {sum, n, t};
}

TransitionAmplitude amplitude_uniform_closed(const ChainConfig& cfg, int n, double t) {
  require_endpoint(cfg, 0.0, "amplitude_uniform_closed");
  check_site(n, cfg.n);
  const double denom = cfg.n + 1.0;
  const double shift = -(cfg.n - 2.0) * cfg.b;
  // Positive hopping is the staggered gauge of the negative one.
  const double gauge = (interpolated_bonds(cfg)[0] > 0.0 && n % 2 == 0) ? -1.0 : 1.0;
  Complex sum{0.0, 0.0};
  for (int k = 1; k <= cfg.n; ++k) {
    const double x = std::numbers::pi * k / denom;
    const double energy = -2.0 * cfg.j * std::cos(x) + shift;
    sum += std::sin(x) * std::sin(x * n) * phase(-energy * t);
  }
  return {gauge * (2.0 / denom) * phase(-cfg.n * cfg.b * t) * sum, n, t};
}

TransitionAmplitude amplitude_pst_closed(const ChainConfig& cfg, int n, double t) {
  require_endpoint(cfg, 1.0, "amplitude_pst_closed");
  check_site(n, cfg.n);
  const int m = cfg.n - 1;
  const double nn = cfg.n;
  const double g = gn_factor(cfg.n);
  const double shift = -(nn - 2.0) * cfg.b;
  const double gauge = (interpolated_bonds(cfg)[0] > 0.0 && n % 2 == 0) ? -1.0 : 1.0;
  Complex sum{0.0, 0.0};
  for (int k = 1; k <= cfg.n; ++k) {
    const double energy = -(2.0 * cfg.j / nn) * (nn - (2.0 * k - 1.0)) * g + shift;
    sum += krawtchouk(k - 1, n - 1, m) * phase(-energy * t);
  }
  const double prefactor = std::ldexp(std::sqrt(binomial(m, n - 1)), -m);
  return {gauge * prefactor * phase(-nn * cfg.b * t) * sum, n, t};
}

TransitionAmplitude amplitude_bessel_limit(const ChainConfig& cfg, int n, double t) {
  cfg.validate();
  if (n < 1) fail(ErrorKind::InvalidInput, "site must be >= 1");
  const double z = 2.0 * cfg.j * t;
  Complex bracket = std::cyl_bessel_j(static_cast<double>(n - 1), z) * std::pow(Complex{0.0, 1.0}, n - 1);
  if (n == 1) bracket += std::cyl_bessel_j(0.0, z);
  return {phase((cfg.n - 2.0) * cfg.b * t) * bracket, n, t};
}

QubitState reduced_state(const InitialSiteState& initial, const TransitionAmplitude& f) {
  const QubitState rho0 = initial_qubit(initial);
  QubitState s;
  s.p1 = rho0.p1 * f.probability();
  s.p0 = 1.0 - s.p1;
  s.c = std::holds_alternative<MixedSite>(initial) ? Complex{0.0, 0.0} : rho0.c * f.value;
  return s;
}

AmplitudeSeries::AmplitudeSeries(const SpectralDecomposition& dec, int n) {
  check_site(n, dec.size());
  weights_.reserve(static_cast<std::size_t>(dec.size()));
  energies_.reserve(static_cast<std::size_t>(dec.size()));
  for (int k = 0; k < dec.size(); ++k) {
    weights_.push_back(dec.component(k, 0) * dec.component(k, n - 1));
    energies_.push_back(dec.energy(k));
  }
}

Complex AmplitudeSeries::operator()(double t) const {
  double re = 0.0;
  double im = 0.0;
  for (std::size_t k = 0; k < weights_.size(); ++k) {
    const double a = -energies_[k] * t;
    re += weights_[k] * std::cos(a);
    im += weights_[k] * std::sin(a);
  }
  return {re, im};
}

}  // namespace ergochain
