// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <span>
#include <vector>

#include "ergochain/chain_model.hpp"

namespace ergochain {

/// Eigenpairs of the single-excitation block. Energies ascend; vector k is
/// stored contiguously (vectors[k * n + site]) with its first nonzero
/// component positive.
class SpectralDecomposition {
 public:
  SpectralDecomposition() = default;
  SpectralDecomposition(int n, std::vector<double> energies, std::vector<double> vectors, double vacuum_energy);

  int size() const noexcept { return n_; }
  std::span<const double> energies() const noexcept { return energies_; }
  double energy(int k) const { return energies_[static_cast<std::size_t>(k)]; }
  std::span<const double> vector(int k) const {
    return std::span<const double>(vectors_).subspan(static_cast<std::size_t>(k * n_), static_cast<std::size_t>(n_));
  }
  /// Component `site` (0-based) of eigenvector k.
  double component(int k, int site) const { return vectors_[static_cast<std::size_t>(k * n_ + site)]; }
  double vacuum_energy() const noexcept { return vacuum_energy_; }

 private:
  int n_ = 0;
  std::vector<double> energies_;
  std::vector<double> vectors_;
  double vacuum_energy_ = 0.0;
};

/// Numerical diagonalisation of the tridiagonal block. Throws NumericalFailure
/// (carrying the residual) when max_k ||H v_k - E_k v_k|| exceeds 1e-9 max(||H||, 1).
SpectralDecomposition diagonalize(const SingleExcitationHamiltonian& h);

/// Sine-basis spectrum of the uniform chain (alpha = 0, delta = 0).
SpectralDecomposition analytic_uniform_spectrum(const ChainConfig& cfg);

/// Krawtchouk-basis spectrum of the PST chain (alpha = 1, delta = 0). Vectors
/// are sqrt(w(n)) K_{k-1}(n-1) normalised by their 2-norm.
SpectralDecomposition analytic_pst_spectrum(const ChainConfig& cfg);

/// sum_i (-1)^i C(x, i) C(m - x, k - i), with p = 1/2 and m = N - 1.
double krawtchouk(int k, int x, int m);

/// Binomial weight C(m, x) 2^{-m}.
double krawtchouk_weight(int x, int m);

/// Exact binomial as a double (exact for results below 2^53).
double binomial(int n, int k);

}  // namespace ergochain
