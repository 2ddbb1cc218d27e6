// SPDX-License-Identifier: Apache-2.0
#include "ergochain/work_stats.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <numbers>

#include "ergochain/error.hpp"

namespace ergochain {

namespace {

constexpr double kMergeTol = 1e-12;

std::string shortest(double x) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, res.ptr);
}

// Sorts by W and merges atoms closer than tol (relative to J).
std::vector<WorkAtom> merge(std::vector<WorkAtom> atoms, double j) {
  std::stable_sort(atoms.begin(), atoms.end(), [](const WorkAtom& a, const WorkAtom& b) { return a.w < b.w; });
  std::vector<WorkAtom> out;
  for (const WorkAtom& a : atoms) {
    if (!out.empty() && std::abs(a.w - out.back().w) <= kMergeTol * j) {
      out.back().p += a.p;
    } else {
      out.push_back(a);
    }
  }
  return out;
}

void require_excited(const ChainConfig& cfg, double alpha, const char* what) {
  cfg.validate();
  if (cfg.alpha != alpha || cfg.delta != 0.0)
    fail(ErrorKind::Misuse, std::string(what) + " requires alpha = " + std::to_string(alpha) + " and delta = 0");
}

}  // namespace

double WorkDistribution::total_probability() const {
  double s = 0.0;
  for (const auto& a : atoms) s += a.p;
  return s;
}

double WorkDistribution::probability_at_zero(double tol) const {
  for (const auto& a : atoms)
    if (std::abs(a.w) <= tol) return a.p;
  return 0.0;
}

std::string describe(const InitialSiteState& initial) {
  if (const auto* pure = std::get_if<PureSite>(&initial))
    return "pure(theta=" + shortest(pure->theta) + ",phi=" + shortest(pure->phi) + ")";
  return "mixed(q=" + shortest(std::get<MixedSite>(initial).q) + ")";
}

WorkDistribution tpm_distribution(const SpectralDecomposition& final_spectrum, const ChainConfig& cfg,
                                  const InitialSiteState& initial) {
  const QubitState rho = initial_qubit(initial);
  // Couplings off: |0...0> at -N B, |1_1> at -(N-2) B. The first measurement
  // removes the vacuum/excitation coherence.
  const double vacuum_initial = -cfg.n * cfg.b;
  const double excited_initial = -(cfg.n - 2.0) * cfg.b;
  std::vector<WorkAtom> atoms;
  atoms.reserve(static_cast<std::size_t>(final_spectrum.size()) + 1);
  if (rho.p0 > 0.0) atoms.push_back({final_spectrum.vacuum_energy() - vacuum_initial, rho.p0});
  if (rho.p1 > 0.0) {
    for (int k = 0; k < final_spectrum.size(); ++k) {
      const double overlap = final_spectrum.component(k, 0);
      atoms.push_back({final_spectrum.energy(k) - excited_initial, rho.p1 * overlap * overlap});
    }
  }
  WorkDistribution d;
  d.atoms = merge(std::move(atoms), cfg.j);
  d.n = cfg.n;
  d.alpha = cfg.alpha;
  d.initial = describe(initial);
  return d;
}

WorkDistribution tpm_distribution(const ChainConfig& cfg, const InitialSiteState& initial) {
  cfg.validate();
  const SpectralDecomposition dec = diagonalize(build_hamiltonian(disordered_bonds(cfg, 0), cfg));
  return tpm_distribution(dec, cfg, initial);
}

WorkDistribution pst_closed_distribution(const ChainConfig& cfg) {
  require_excited(cfg, 1.0, "pst_closed_distribution");
  const int m = cfg.n - 1;
  const double nn = cfg.n;
  const double g = gn_factor(cfg.n);
  std::vector<WorkAtom> atoms;
  for (int k = 1; k <= cfg.n; ++k)
    atoms.push_back({-(2.0 * cfg.j / nn) * (nn - (2.0 * k - 1.0)) * g, krawtchouk_weight(k - 1, m)});
  WorkDistribution d;
  d.atoms = merge(std::move(atoms), cfg.j);
  d.n = cfg.n;
  d.alpha = 1.0;
  d.initial = describe(MixedSite{1.0});
  return d;
}

WorkDistribution uniform_closed_distribution(const ChainConfig& cfg) {
  require_excited(cfg, 0.0, "uniform_closed_distribution");
  const double denom = cfg.n + 1.0;
  std::vector<WorkAtom> atoms;
  for (int k = 1; k <= cfg.n; ++k) {
    const double x = std::numbers::pi * k / denom;
    const double s = std::sin(x);
    atoms.push_back({-2.0 * cfg.j * std::cos(x), 2.0 / denom * s * s});
  }
  WorkDistribution d;
  d.atoms = merge(std::move(atoms), cfg.j);
  d.n = cfg.n;
  d.alpha = 0.0;
  d.initial = describe(MixedSite{1.0});
  return d;
}

WorkMoments moments(const WorkDistribution& d, int max_order) {
  if (max_order < 0) fail(ErrorKind::InvalidInput, "moment order must be >= 0");
  WorkMoments m;
  for (const auto& a : d.atoms) m.mean += a.p * a.w;
  for (const auto& a : d.atoms) m.variance += a.p * (a.w - m.mean) * (a.w - m.mean);
  m.raw.assign(static_cast<std::size_t>(max_order), 0.0);
  for (const auto& a : d.atoms) {
    double power = 1.0;
    for (int i = 0; i < max_order; ++i) {
      power *= a.w;
      m.raw[static_cast<std::size_t>(i)] += a.p * power;
    }
  }
  return m;
}

double pst_work_variance(const ChainConfig& cfg) {
  cfg.validate();
  const double g = gn_factor(cfg.n);
  const double scale = 2.0 * cfg.j / cfg.n;
  return scale * scale * (cfg.n - 1.0) * g * g;
}

double gaussian_density(double w, const ChainConfig& cfg) {
  const double var = pst_work_variance(cfg);
  return std::exp(-w * w / (2.0 * var)) / std::sqrt(2.0 * std::numbers::pi * var);
}

double semicircle_density(double w, double j) {
  if (std::abs(w) >= 2.0 * j) return 0.0;
  return std::sqrt(4.0 * j * j - w * w) / (2.0 * std::numbers::pi * j * j);
}

std::vector<HistogramBin> histogram(const WorkDistribution& d, int bins, double lo, double hi) {
  if (bins < 1 || !(hi > lo)) fail(ErrorKind::InvalidInput, "histogram needs bins >= 1 and hi > lo");
  const double width = (hi - lo) / bins;
  std::vector<HistogramBin> out(static_cast<std::size_t>(bins));
  for (int i = 0; i < bins; ++i) {
    auto& b = out[static_cast<std::size_t>(i)];
    b.lo = lo + i * width;
    b.hi = lo + (i + 1) * width;
    b.center = lo + (i + 0.5) * width;
  }
  for (const auto& a : d.atoms) {
    if (a.w < lo || a.w > hi) continue;
    auto idx = static_cast<int>(std::floor((a.w - lo) / width));
    idx = std::clamp(idx, 0, bins - 1);
    out[static_cast<std::size_t>(idx)].density += a.p;
  }
  for (auto& b : out) b.density /= width;
  return out;
}

std::vector<HistogramBin> cell_histogram(const WorkDistribution& d) {
  const auto& atoms = d.atoms;
  if (atoms.size() < 2) fail(ErrorKind::InvalidInput, "cell histogram needs at least two atoms");
  const std::size_t n = atoms.size();
  std::vector<HistogramBin> out(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double left = i > 0 ? 0.5 * (atoms[i - 1].w + atoms[i].w) : atoms[0].w - 0.5 * (atoms[1].w - atoms[0].w);
    const double right =
        i + 1 < n ? 0.5 * (atoms[i].w + atoms[i + 1].w) : atoms[n - 1].w + 0.5 * (atoms[n - 1].w - atoms[n - 2].w);
    out[i] = {left, right, atoms[i].w, atoms[i].p / (right - left)};
  }
  return out;
}

}  // namespace ergochain
