// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <optional>
#include <span>
#include <vector>

#include "ergochain/chain_model.hpp"
#include "ergochain/dynamics.hpp"

namespace ergochain {

struct EnsembleStats {
  double mean = 0.0;
  /// Sample standard deviation (n - 1 denominator); 0 for a single sample.
  double stddev = 0.0;
  int count = 0;
  int failures = 0;
  double delta = 0.0;
};

/// Per-realization site-N ergotropy at the clean reflection time T(alpha, N).
/// Entries are empty for realizations whose diagonalisation failed.
std::vector<std::optional<double>> ensemble_samples(const ChainConfig& cfg, const InitialSiteState& initial,
                                                    int realizations, unsigned threads = 1);

EnsembleStats ensemble_erg(const ChainConfig& cfg, const InitialSiteState& initial, int realizations,
                           unsigned threads = 1);

/// Stats of a sample set using pairwise summation (order-independent of scheduling).
EnsembleStats summarize(std::span<const double> values, double delta);

/// (coh.mean - mix.mean) / coh.mean. Throws UndefinedMetric if coh.mean == 0.
double gamma_metric(const EnsembleStats& coh, const EnsembleStats& mix);

/// Coherent Pure{theta} paired with Mixed{match_mixed_to_pure(theta)} on the
/// same disorder realizations. gamma and gamma_stderr are NaN when the
/// coherent mean is zero.
struct MatchedEnsemble {
  EnsembleStats coherent;
  EnsembleStats mixed;
  double gamma = 0.0;
  /// Standard error of mean(coh - mix) from the paired differences.
  double difference_stderr = 0.0;
  /// Standard error of gamma, difference_stderr / coherent.mean.
  double gamma_stderr = 0.0;
};

MatchedEnsemble matched_ensemble(const ChainConfig& cfg, double theta, int realizations, unsigned threads = 1);

}  // namespace ergochain
