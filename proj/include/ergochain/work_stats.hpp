// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>
#include <vector>

#include "ergochain/chain_model.hpp"
#include "ergochain/dynamics.hpp"
#include "ergochain/spectral.hpp"

namespace ergochain {

struct WorkAtom {
  double w = 0.0;
  double p = 0.0;
};

/// Atomic two-point-measurement work distribution for switching the
/// couplings on suddenly. Atoms are sorted by W and merged within 1e-12 J.
struct WorkDistribution {
  std::vector<WorkAtom> atoms;
  int n = 0;
  double alpha = 0.0;
  std::string initial;

  double total_probability() const;
  /// Probability of the atom at W = 0 (0 if absent).
  double probability_at_zero(double tol) const;
};

struct WorkMoments {
  double mean = 0.0;
  double variance = 0.0;
  /// raw[i] = <W^(i+1)>
  std::vector<double> raw;
};

/// Short text label such as "pure(theta=1.5707963267948966,phi=0)".
std::string describe(const InitialSiteState& initial);

WorkDistribution tpm_distribution(const ChainConfig& cfg, const InitialSiteState& initial);
/// Distribution from an already diagonalised final Hamiltonian.
WorkDistribution tpm_distribution(const SpectralDecomposition& final_spectrum, const ChainConfig& cfg,
                                  const InitialSiteState& initial);

/// Binomial atoms of the PST chain with a fully excited first site.
WorkDistribution pst_closed_distribution(const ChainConfig& cfg);

/// sin^2-weighted atoms of the uniform chain with a fully excited first site.
WorkDistribution uniform_closed_distribution(const ChainConfig& cfg);

WorkMoments moments(const WorkDistribution& d, int max_order);

/// Var(W) = (2J/N)^2 (N-1) G_N^2 of the fully excited PST chain.
double pst_work_variance(const ChainConfig& cfg);

/// Zero-mean normal density with the PST variance.
double gaussian_density(double w, const ChainConfig& cfg);

/// sqrt(4J^2 - W^2) / (2 pi J^2) on |W| <= 2J, zero outside.
double semicircle_density(double w, double j);

struct HistogramBin {
  double lo = 0.0;
  double hi = 0.0;
  double center = 0.0;
  /// Probability mass divided by bin width.
  double density = 0.0;
};

/// Uniform bins over [lo, hi]; atoms outside the range are dropped.
std::vector<HistogramBin> histogram(const WorkDistribution& d, int bins, double lo, double hi);

/// One bin per atom with edges at the midpoints between neighbouring atoms;
/// the outer edges mirror the adjacent half-width. Requires >= 2 atoms.
std::vector<HistogramBin> cell_histogram(const WorkDistribution& d);

}  // namespace ergochain
