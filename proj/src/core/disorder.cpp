// SPDX-License-Identifier: Apache-2.0
#include "ergochain/disorder.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "ergochain/ergotropy.hpp"
#include "ergochain/error.hpp"
#include "ergochain/parallel.hpp"

namespace ergochain {

namespace {

double pairwise_sum(std::span<const double> v) {
  if (v.size() <= 8) {
    double s = 0.0;
    for (double x : v) s += x;
    return s;
  }
  const std::size_t half = v.size() / 2;
  return pairwise_sum(v.first(half)) + pairwise_sum(v.subspan(half));
}

struct Evaluated {
  std::vector<std::vector<std::optional<double>>> per_state;
};

// Evaluates every initial state on the same realizations so paired
// comparisons share their disorder.
Evaluated evaluate(const ChainConfig& cfg, std::span<const InitialSiteState> states, int realizations,
                   unsigned threads) {
  cfg.validate();
  if (realizations < 1) fail(ErrorKind::InvalidInput, "realizations must be >= 1");
  const auto count = static_cast<std::size_t>(realizations);
  Evaluated out;
  out.per_state.assign(states.size(), std::vector<std::optional<double>>(count));
  const double t = reflection_time(cfg.alpha, cfg.n) / cfg.j;
  parallel_for(count, threads, [&](std::size_t r) {
    SpectralDecomposition dec;
    try {
      dec = diagonalize(build_hamiltonian(disordered_bonds(cfg, r), cfg));
    } catch (const NumericalFailure&) {
      return;
    }
    const TransitionAmplitude f = amplitude_spectral(dec, cfg.n, t);
    for (std::size_t s = 0; s < states.size(); ++s)
      out.per_state[s][r] = qubit_ergotropy(reduced_state(states[s], f), cfg.b);
  });
  return out;
}

std::vector<double> present(const std::vector<std::optional<double>>& v) {
  std::vector<double> out;
  out.reserve(v.size());
  for (const auto& x : v)
    if (x) out.push_back(*x);
  return out;
}

}  // namespace

EnsembleStats summarize(std::span<const double> values, double delta) {
  EnsembleStats s;
  s.delta = delta;
  s.count = static_cast<int>(values.size());
  if (values.empty()) return s;
  s.mean = pairwise_sum(values) / static_cast<double>(values.size());
  if (values.size() > 1) {
    std::vector<double> sq(values.size());
    for (std::size_t i = 0; i < values.size(); ++i) sq[i] = (values[i] - s.mean) * (values[i] - s.mean);
    s.stddev = std::sqrt(pairwise_sum(sq) / static_cast<double>(values.size() - 1));
  }
  return s;
}

std::vector<std::optional<double>> ensemble_samples(const ChainConfig& cfg, const InitialSiteState& initial,
                                                    int realizations, unsigned threads) {
  const InitialSiteState states[] = {initial};
  return std::move(evaluate(cfg, states, realizations, threads).per_state[0]);
}

EnsembleStats ensemble_erg(const ChainConfig& cfg, const InitialSiteState& initial, int realizations,
                           unsigned threads) {
  const auto samples = ensemble_samples(cfg, initial, realizations, threads);
  const auto values = present(samples);
  EnsembleStats s = summarize(values, cfg.delta);
  s.failures = realizations - s.count;
  return s;
}

double gamma_metric(const EnsembleStats& coh, const EnsembleStats& mix) {
  if (coh.mean == 0.0) fail(ErrorKind::UndefinedMetric, "gamma undefined for zero coherent mean");
  return (coh.mean - mix.mean) / coh.mean;
}

MatchedEnsemble matched_ensemble(const ChainConfig& cfg, double theta, int realizations, unsigned threads) {
  const InitialSiteState states[] = {PureSite{theta, 0.0}, MixedSite{match_mixed_to_pure(theta)}};
  const Evaluated ev = evaluate(cfg, states, realizations, threads);
  MatchedEnsemble m;
  const auto coh = present(ev.per_state[0]);
  const auto mix = present(ev.per_state[1]);
  m.coherent = summarize(coh, cfg.delta);
  m.mixed = summarize(mix, cfg.delta);
  m.coherent.failures = realizations - m.coherent.count;
  m.mixed.failures = realizations - m.mixed.count;
  std::vector<double> diff(coh.size());
  for (std::size_t i = 0; i < coh.size(); ++i) diff[i] = coh[i] - mix[i];
  const EnsembleStats d = summarize(diff, cfg.delta);
  m.difference_stderr = d.count > 0 ? d.stddev / std::sqrt(static_cast<double>(d.count)) : 0.0;
  if (m.coherent.mean == 0.0) {
    m.gamma = m.gamma_stderr = std::numeric_limits<double>::quiet_NaN();
    return m;
  }
  m.gamma = gamma_metric(m.coherent, m.mixed);
  m.gamma_stderr = m.difference_stderr / m.coherent.mean;
  return m;
}

}  // namespace ergochain
