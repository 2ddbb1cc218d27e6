// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <vector>

namespace ergochain {

/// How the interpolated nearest-neighbour element is formed from J and the
/// PST profile J_j.
///   Printed:  (alpha - 1) J + alpha J_j   (uniform end is -J, PST end is +J_j)
///   Positive: (1 - alpha) J + alpha J_j   (all bonds positive for every alpha)
/// Both agree in modulus at alpha = 0 and alpha = 1.
enum class CouplingConvention { Printed, Positive };

struct ChainConfig {
  int n = 2;
  double b = 1.0;
  double j = 1.0;
  double alpha = 0.0;
  double delta = 0.0;
  std::uint64_t seed = 0;
  CouplingConvention convention = CouplingConvention::Printed;

  /// Throws InvalidConfiguration when an invariant is violated.
  void validate() const;
};

/// The N-1 off-diagonal elements <1_j|H|1_{j+1}> of the single-excitation block.
struct BondSet {
  std::vector<double> bonds;

  std::size_t size() const noexcept { return bonds.size(); }
  double operator[](std::size_t i) const { return bonds[i]; }
};

/// Real symmetric tridiagonal block with constant diagonal -(N-2)B, plus the
/// vacuum energy -N B. Only one off-diagonal is stored.
struct SingleExcitationHamiltonian {
  int n = 0;
  double diagonal = 0.0;
  BondSet offdiagonal;
  double vacuum_energy = 0.0;

  /// Row-major dense copy, n*n entries.
  std::vector<double> dense() const;
  /// Infinity norm (max absolute row sum).
  double norm() const;
};

double gn_factor(int n);

BondSet pst_couplings(const ChainConfig& cfg);

/// Clean bonds for cfg.alpha (cfg.delta must be zero).
BondSet interpolated_bonds(const ChainConfig& cfg);

/// Clean bonds scaled by (1 + d_j), d_j ~ U[-delta, delta] i.i.d. per bond. The
/// stream is a pure function of (cfg.seed, realization).
BondSet disordered_bonds(const ChainConfig& cfg, std::uint64_t realization);

SingleExcitationHamiltonian build_hamiltonian(const BondSet& bonds, const ChainConfig& cfg);

namespace rng {

std::uint64_t mix64(std::uint64_t x) noexcept;

/// Counter-based uniform stream on [0, 1).
class UniformStream {
 public:
  UniformStream(std::uint64_t seed, std::uint64_t stream) noexcept;
  double at(std::uint64_t counter) const noexcept;

 private:
  std::uint64_t key_;
};

}  // namespace rng

}  // namespace ergochain
