// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "ergochain/chain_model.hpp"
#include "ergochain/dynamics.hpp"
#include "ergochain/spectral.hpp"

namespace ergochain {

struct ErgotropyRecord {
  double erg_in = 0.0;
  double erg_max = 0.0;
  int site = 0;
  double time = 0.0;
  /// Rescaled efficiency; NaN when erg_in == 0.
  double eta = 0.0;
};

/// Ergotropy of a qubit with local Hamiltonian -B sigma_z.
double qubit_ergotropy(const QubitState& rho, double b);

/// q of the population-inverted state carrying the same ergotropy as Pure{theta}.
double match_mixed_to_pure(double theta);

/// Closed form for a coherent initial site, fsq = |f_n(t)|^2.
double erg_coherent(double theta, double fsq, double b);

/// Closed form for a diagonal initial site; zero unless q fsq > 1/2.
double erg_mixed(double q, double fsq, double b);

/// First reflection time J t = [pi/(4 G_N) alpha^2 + pi/6 (1 - alpha^2)] N.
double reflection_time(double alpha, int n);

/// Ergotropy stored in the initial site state.
double initial_ergotropy(const InitialSiteState& initial, double b);

/// The chain at hand: configuration, realised bonds and their spectrum.
struct Chain {
  ChainConfig config;
  BondSet bonds;
  SpectralDecomposition spectrum;

  /// Builds with disordered_bonds(cfg, realization); clean when delta = 0.
  static Chain build(const ChainConfig& cfg, std::uint64_t realization = 0);
};

/// Site-N ergotropy at the reflection time of (alpha, N), read directly from
/// the last site (a perfect swap onto an identical ancilla changes nothing).
ErgotropyRecord erg_at_reflection(const ChainConfig& cfg, const InitialSiteState& initial);
ErgotropyRecord erg_at_reflection(const Chain& chain, const InitialSiteState& initial);

/// Maximum site-N ergotropy over t in {dt, 2dt, ...} up to t_max, plus the
/// reflection time itself when it lies in the window. Ties go to the earliest time.
ErgotropyRecord erg_max_window(const ChainConfig& cfg, const InitialSiteState& initial, double t_max,
                               double dt = 0.01);

/// (erg_max / erg_in) N^{2/3}. Throws UndefinedMetric when erg_in == 0.
double rescaled_efficiency(double erg_max, double erg_in, int n);

}  // namespace ergochain
