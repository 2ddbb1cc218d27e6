// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <complex>
#include <variant>

#include "ergochain/chain_model.hpp"
#include "ergochain/spectral.hpp"

namespace ergochain {

using Complex = std::complex<double>;

/// f_n(t) = <1_1| exp(-i H t) |1_n>, site n is 1-based, t in units of 1/J.
struct TransitionAmplitude {
  Complex value;
  int site = 1;
  double time = 0.0;

  double probability() const { return std::norm(value); }
};

struct PureSite {
  double theta = 0.0;
  double phi = 0.0;
};

struct MixedSite {
  double q = 0.0;
};

/// State of site 1 at t = 0; all other sites start in |0>.
using InitialSiteState = std::variant<PureSite, MixedSite>;

/// 2x2 reduced density matrix of one site. c is the (0,1) element.
struct QubitState {
  double p0 = 1.0;
  double p1 = 0.0;
  Complex c{0.0, 0.0};

  /// Throws InvalidInput unless populations sum to one, are non-negative and
  /// |c|^2 <= p0 p1 (all up to rounding slack).
  void validate() const;
};

/// Density matrix of the initial site state.
QubitState initial_qubit(const InitialSiteState& initial);

TransitionAmplitude amplitude_spectral(const SpectralDecomposition& dec, int n, double t);

/// Closed sine double-sum for the uniform chain, including the e^{-iNBt} phase.
TransitionAmplitude amplitude_uniform_closed(const ChainConfig& cfg, int n, double t);

/// Closed Krawtchouk sum for the PST chain with the normalised prefactor
/// (1/2)^{N-1} sqrt(C(N-1, n-1)).
TransitionAmplitude amplitude_pst_closed(const ChainConfig& cfg, int n, double t);

/// Continuum approximation e^{i(N-2)Bt}[J_0(2Jt) d_{1n} + i^{n-1} J_{n-1}(2Jt)],
/// returned as written. At n = 1 both terms are J_0, so |f_1(0)| = 2; only
/// n >= 2 is physically meaningful.
TransitionAmplitude amplitude_bessel_limit(const ChainConfig& cfg, int n, double t);

/// rho^(n)(t) from the initial site state and f_n(t): p1 = rho11 |f|^2,
/// c = rho01 f.
QubitState reduced_state(const InitialSiteState& initial, const TransitionAmplitude& f);

/// Precomputed site-1 -> site-n weights v_k[1] v_k[n] for fast time scans.
class AmplitudeSeries {
 public:
  AmplitudeSeries(const SpectralDecomposition& dec, int n);
  Complex operator()(double t) const;

 private:
  std::vector<double> weights_;
  std::vector<double> energies_;
};

}  // namespace ergochain
