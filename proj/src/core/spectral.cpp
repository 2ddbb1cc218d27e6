// SPDX-License-Identifier: Apache-2.0
#include "ergochain/spectral.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>
#include <numbers>
#include <string>

#include "ergochain/error.hpp"

namespace ergochain {

namespace {

// First component above this magnitude decides the overall sign.
constexpr double kSignThreshold = 1e-12;

void fix_sign(std::span<double> v) {
  for (double x : v) {
    if (std::abs(x) > kSignThreshold) {
      if (x < 0.0)
        for (double& y : v) y = -y;
      return;
    }
  }
}

void normalize(std::span<double> v) {
  double s = 0.0;
  for (double x : v) s += x * x;
  const double inv = 1.0 / std::sqrt(s);
  for (double& x : v) x *= inv;
}

// Sign of the hopping at an endpoint; analytic bases assume negative hopping
// and need the staggering gauge (-1)^(site) otherwise.
bool positive_hopping(const ChainConfig& cfg) {
  const BondSet bonds = interpolated_bonds(cfg);
  return bonds[0] > 0.0;
}

void require_clean(const ChainConfig& cfg, double alpha, const char* what) {
  cfg.validate();
  if (cfg.alpha != alpha || cfg.delta != 0.0)
    fail(ErrorKind::Misuse, std::string(what) + " requires alpha = " + std::to_string(alpha) +
                                " and delta = 0 (got alpha = " + std::to_string(cfg.alpha) +
                                ", delta = " + std::to_string(cfg.delta) + ")");
}

__extension__ typedef __int128 Int;

Int binomial_exact(int n, int k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  Int r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

// Largest m for which every partial sum fits comfortably in 128 bits.
constexpr int kExactKrawtchoukLimit = 126;

}  // namespace

SpectralDecomposition::SpectralDecomposition(int n, std::vector<double> energies, std::vector<double> vectors,
                                             double vacuum_energy)
    : n_(n), energies_(std::move(energies)), vectors_(std::move(vectors)), vacuum_energy_(vacuum_energy) {}

SpectralDecomposition diagonalize(const SingleExcitationHamiltonian& h) {
  const int n = h.n;
  if (n < 2 || h.offdiagonal.size() != static_cast<std::size_t>(n - 1))
    fail(ErrorKind::InvalidInput, "malformed Hamiltonian");

  // The diagonal is constant, so solve the pure hopping problem and shift.
  Eigen::VectorXd diag = Eigen::VectorXd::Zero(n);
  Eigen::VectorXd sub(n - 1);
  for (int i = 0; i + 1 < n; ++i) sub(i) = h.offdiagonal[static_cast<std::size_t>(i)];

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver;
  solver.computeFromTridiagonal(diag, sub, Eigen::ComputeEigenvectors);
  if (solver.info() != Eigen::Success)
    throw NumericalFailure("tridiagonal eigensolver did not converge", std::numeric_limits<double>::infinity());

  const auto& vals = solver.eigenvalues();
  const auto& vecs = solver.eigenvectors();
  std::vector<double> energies(static_cast<std::size_t>(n));
  std::vector<double> vectors(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
  double residual = 0.0;
  for (int k = 0; k < n; ++k) {
    energies[static_cast<std::size_t>(k)] = vals(k) + h.diagonal;
    std::span<double> v(vectors.data() + static_cast<std::size_t>(k * n), static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) v[static_cast<std::size_t>(i)] = vecs(i, k);
    fix_sign(v);
    double r2 = 0.0;
    for (int i = 0; i < n; ++i) {
      double hv = h.diagonal * v[static_cast<std::size_t>(i)];
      if (i > 0) hv += h.offdiagonal[static_cast<std::size_t>(i - 1)] * v[static_cast<std::size_t>(i - 1)];
      if (i + 1 < n) hv += h.offdiagonal[static_cast<std::size_t>(i)] * v[static_cast<std::size_t>(i + 1)];
      const double d = hv - energies[static_cast<std::size_t>(k)] * v[static_cast<std::size_t>(i)];
      r2 += d * d;
    }
    residual = std::max(residual, std::sqrt(r2));
  }
  const double tol = 1e-9 * std::max(h.norm(), 1.0);
  if (!(residual <= tol))
    throw NumericalFailure("eigensolver residual " + std::to_string(residual) + " exceeds " + std::to_string(tol),
                           residual);
  return SpectralDecomposition(n, std::move(energies), std::move(vectors), h.vacuum_energy);
}

SpectralDecomposition analytic_uniform_spectrum(const ChainConfig& cfg) {
  require_clean(cfg, 0.0, "analytic_uniform_spectrum");
  const int n = cfg.n;
  const double shift = -static_cast<double>(n - 2) * cfg.b;
  const double denom = static_cast<double>(n + 1);
  const double scale = std::sqrt(2.0 / denom);
  const bool gauge = positive_hopping(cfg);

  std::vector<double> energies(static_cast<std::size_t>(n));
  std::vector<double> vectors(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
  for (int k = 1; k <= n; ++k) {
    const double x = std::numbers::pi * k / denom;
    energies[static_cast<std::size_t>(k - 1)] = -2.0 * cfg.j * std::cos(x) + shift;
    std::span<double> v(vectors.data() + static_cast<std::size_t>((k - 1) * n), static_cast<std::size_t>(n));
    for (int site = 1; site <= n; ++site) {
      double c = scale * std::sin(x * site);
      if (gauge && site % 2 == 0) c = -c;
      v[static_cast<std::size_t>(site - 1)] = c;
    }
    fix_sign(v);
  }
  return SpectralDecomposition(n, std::move(energies), std::move(vectors), -static_cast<double>(n) * cfg.b);
}

SpectralDecomposition analytic_pst_spectrum(const ChainConfig& cfg) {
  require_clean(cfg, 1.0, "analytic_pst_spectrum");
  const int n = cfg.n;
  const int m = n - 1;
  const double g = gn_factor(n);
  const double nn = static_cast<double>(n);
  const double shift = -static_cast<double>(n - 2) * cfg.b;
  const bool gauge = positive_hopping(cfg);

  std::vector<double> energies(static_cast<std::size_t>(n));
  std::vector<double> vectors(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
  for (int k = 1; k <= n; ++k) {
    energies[static_cast<std::size_t>(k - 1)] = -(2.0 * cfg.j / nn) * (nn - (2.0 * k - 1.0)) * g + shift;
    std::span<double> v(vectors.data() + static_cast<std::size_t>((k - 1) * n), static_cast<std::size_t>(n));
    for (int site = 1; site <= n; ++site) {
      double c = std::sqrt(krawtchouk_weight(site - 1, m)) * krawtchouk(k - 1, site - 1, m);
      if (gauge && site % 2 == 0) c = -c;
      v[static_cast<std::size_t>(site - 1)] = c;
    }
    normalize(v);
    fix_sign(v);
  }
  return SpectralDecomposition(n, std::move(energies), std::move(vectors), -nn * cfg.b);
}

double krawtchouk(int k, int x, int m) {
  if (m < 0 || k < 0 || x < 0 || k > m || x > m)
    fail(ErrorKind::InvalidInput, "krawtchouk index out of range: k=" + std::to_string(k) + " x=" +
                                      std::to_string(x) + " m=" + std::to_string(m));
  if (m <= kExactKrawtchoukLimit) {
    Int sum = 0;
    for (int i = 0; i <= k; ++i) {
      const Int term = binomial_exact(x, i) * binomial_exact(m - x, k - i);
      sum += (i % 2 == 0) ? term : -term;
    }
    return static_cast<double>(sum);
  }
  // Long double fallback; cancellation limits accuracy for large m.
  long double sum = 0.0L;
  for (int i = 0; i <= k; ++i) {
    if (i > x || k - i > m - x) continue;
    const long double term = std::exp(std::lgamma(static_cast<long double>(x + 1)) -
                                      std::lgamma(static_cast<long double>(i + 1)) -
                                      std::lgamma(static_cast<long double>(x - i + 1)) +
                                      std::lgamma(static_cast<long double>(m - x + 1)) -
                                      std::lgamma(static_cast<long double>(k - i + 1)) -
                                      std::lgamma(static_cast<long double>(m - x - k + i + 1)));
    sum += (i % 2 == 0) ? term : -term;
  }
  return static_cast<double>(sum);
}

double krawtchouk_weight(int x, int m) {
  if (m < 0 || x < 0 || x > m) fail(ErrorKind::InvalidInput, "krawtchouk weight index out of range");
  if (m <= kExactKrawtchoukLimit) return std::ldexp(static_cast<double>(binomial_exact(m, x)), -m);
  return std::exp(std::lgamma(m + 1.0) - std::lgamma(x + 1.0) - std::lgamma(m - x + 1.0) - m * std::numbers::ln2);
}

double binomial(int n, int k) {
  if (k < 0 || k > n) return 0.0;
  if (n <= kExactKrawtchoukLimit) return static_cast<double>(binomial_exact(n, k));
  return std::exp(std::lgamma(n + 1.0) - std::lgamma(k + 1.0) - std::lgamma(n - k + 1.0));
}

}  // namespace ergochain
