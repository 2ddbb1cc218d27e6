// SPDX-License-Identifier: Apache-2.0
#include "ergochain/chain_model.hpp"

#include <cmath>
#include <string>

#include "ergochain/error.hpp"

namespace ergochain {

void ChainConfig::validate() const {
  if (n < 2) fail(ErrorKind::InvalidConfiguration, "N must be >= 2, got " + std::to_string(n));
  if (!(alpha >= 0.0 && alpha <= 1.0))
    fail(ErrorKind::InvalidConfiguration, "alpha must lie in [0, 1], got " + std::to_string(alpha));
  if (!(delta >= 0.0) || !std::isfinite(delta))
    fail(ErrorKind::InvalidConfiguration, "delta must be >= 0, got " + std::to_string(delta));
  if (!(j > 0.0) || !std::isfinite(j))
    fail(ErrorKind::InvalidConfiguration, "J must be > 0, got " + std::to_string(j));
  if (!std::isfinite(b)) fail(ErrorKind::InvalidConfiguration, "B must be finite");
}

std::vector<double> SingleExcitationHamiltonian::dense() const {
  const auto dim = static_cast<std::size_t>(n);
  std::vector<double> m(dim * dim, 0.0);
  for (std::size_t i = 0; i < dim; ++i) m[i * dim + i] = diagonal;
  for (std::size_t i = 0; i + 1 < dim; ++i) {
    m[i * dim + i + 1] = offdiagonal[i];
    m[(i + 1) * dim + i] = offdiagonal[i];
  }
  return m;
}

double SingleExcitationHamiltonian::norm() const {
  double best = 0.0;
  const auto dim = static_cast<std::size_t>(n);
  for (std::size_t i = 0; i < dim; ++i) {
    double row = std::abs(diagonal);
    if (i > 0) row += std::abs(offdiagonal[i - 1]);
    if (i + 1 < dim) row += std::abs(offdiagonal[i]);
    best = std::max(best, row);
  }
  return best;
}

double gn_factor(int n) {
  if (n < 2) fail(ErrorKind::InvalidConfiguration, "G_N requires N >= 2, got " + std::to_string(n));
  if (n % 2 == 0) return 1.0;
  const double nn = static_cast<double>(n);
  return 1.0 / std::sqrt(1.0 - 1.0 / (nn * nn));
}

BondSet pst_couplings(const ChainConfig& cfg) {
  cfg.validate();
  const double g = gn_factor(cfg.n);
  const double nn = static_cast<double>(cfg.n);
  BondSet out;
  out.bonds.resize(static_cast<std::size_t>(cfg.n - 1));
  for (int site = 1; site < cfg.n; ++site) {
    // j(N-j) is symmetric in j <-> N-j, so the profile is palindromic bit-for-bit.
    const double prod = static_cast<double>(site) * static_cast<double>(cfg.n - site);
    out.bonds[static_cast<std::size_t>(site - 1)] = (2.0 * cfg.j / nn) * std::sqrt(prod) * g;
  }
  return out;
}

BondSet interpolated_bonds(const ChainConfig& cfg) {
  BondSet out = pst_couplings(cfg);
  const double a = cfg.alpha;
  const double uniform = cfg.convention == CouplingConvention::Printed ? -cfg.j : cfg.j;
  for (double& b : out.bonds) b = (1.0 - a) * uniform + a * b;
  return out;
}

BondSet disordered_bonds(const ChainConfig& cfg, std::uint64_t realization) {
  BondSet out = interpolated_bonds(cfg);
  if (cfg.delta == 0.0) return out;
  const rng::UniformStream stream(cfg.seed, realization);
  for (std::size_t i = 0; i < out.bonds.size(); ++i) {
    const double d = cfg.delta * (2.0 * stream.at(i) - 1.0);
    out.bonds[i] *= 1.0 + d;
  }
  return out;
}

SingleExcitationHamiltonian build_hamiltonian(const BondSet& bonds, const ChainConfig& cfg) {
  cfg.validate();
  if (bonds.size() != static_cast<std::size_t>(cfg.n - 1))
    fail(ErrorKind::InvalidInput, "bond count " + std::to_string(bonds.size()) + " does not match N-1 = " +
                                      std::to_string(cfg.n - 1));
  SingleExcitationHamiltonian h;
  h.n = cfg.n;
  h.diagonal = -static_cast<double>(cfg.n - 2) * cfg.b;
  h.offdiagonal = bonds;
  h.vacuum_energy = -static_cast<double>(cfg.n) * cfg.b;
  return h;
}

namespace rng {

namespace {
constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ULL;
}

std::uint64_t mix64(std::uint64_t x) noexcept {
  x ^= x >> 30;
  x *= 0xBF58476D1CE4E5B9ULL;
  x ^= x >> 27;
  x *= 0x94D049BB133111EBULL;
  x ^= x >> 31;
  return x;
}

UniformStream::UniformStream(std::uint64_t seed, std::uint64_t stream) noexcept
    : key_(mix64(seed ^ mix64(stream + kGolden))) {}

double UniformStream::at(std::uint64_t counter) const noexcept {
  const std::uint64_t bits = mix64(key_ + (counter + 1) * kGolden) >> 11;
  return static_cast<double>(bits) * 0x1.0p-53;
}

}  // namespace rng

}  // namespace ergochain
