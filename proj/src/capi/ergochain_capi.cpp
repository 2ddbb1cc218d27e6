// SPDX-License-Identifier: Apache-2.0
#include "ergochain/ergochain.h"

#include <cstring>
#include <new>
#include <string>

#include "ergochain/disorder.hpp"
#include "ergochain/ergotropy.hpp"
#include "ergochain/scenario.hpp"
#include "ergochain/work_stats.hpp"

struct ergochain_chain {
  ergochain::Chain chain;
};

struct ergochain_work_distribution {
  ergochain::WorkDistribution dist;
};

namespace {

thread_local std::string g_last_error;

ergochain_status to_status(ergochain::ErrorKind kind) {
  using ergochain::ErrorKind;
  switch (kind) {
    case ErrorKind::InvalidConfiguration: return ERGOCHAIN_INVALID_CONFIG;
    case ErrorKind::InvalidInput: return ERGOCHAIN_INVALID_INPUT;
    case ErrorKind::NumericalFailure: return ERGOCHAIN_NUMERICAL;
    case ErrorKind::Misuse: return ERGOCHAIN_MISUSE;
    case ErrorKind::UndefinedMetric: return ERGOCHAIN_UNDEFINED;
    case ErrorKind::Io: return ERGOCHAIN_IO;
  }
  return ERGOCHAIN_INTERNAL;
}

template <class Fn>
ergochain_status guarded(Fn&& fn) {
  g_last_error.clear();
  try {
    fn();
    return ERGOCHAIN_OK;
  } catch (const ergochain::Error& e) {
    g_last_error = e.what();
    return to_status(e.kind());
  } catch (const std::bad_alloc&) {
    g_last_error = "out of memory";
  } catch (const std::exception& e) {
    g_last_error = e.what();
  } catch (...) {
    g_last_error = "unknown error";
  }
  return ERGOCHAIN_INTERNAL;
}

void require(bool ok, const char* what) {
  if (!ok) ergochain::fail(ergochain::ErrorKind::Misuse, what);
}

ergochain::ChainConfig convert(const ergochain_config* c) {
  require(c != nullptr, "config is null");
  ergochain::ChainConfig cfg;
  cfg.n = c->n;
  cfg.b = c->b;
  cfg.j = c->j;
  cfg.alpha = c->alpha;
  cfg.delta = c->delta;
  cfg.seed = c->seed;
  cfg.convention = c->convention == ERGOCHAIN_POSITIVE ? ergochain::CouplingConvention::Positive
                                                       : ergochain::CouplingConvention::Printed;
  return cfg;
}

ergochain::InitialSiteState convert(const ergochain_initial* s) {
  require(s != nullptr, "initial state is null");
  if (s->is_mixed) return ergochain::MixedSite{s->q};
  return ergochain::PureSite{s->theta, s->phi};
}

void store(const ergochain::ErgotropyRecord& r, ergochain_ergotropy* out) {
  *out = {r.erg_in, r.erg_max, r.site, r.time, r.eta};
}

}  // namespace

extern "C" {

const char* ergochain_last_error(void) { return g_last_error.c_str(); }

const char* ergochain_version(void) { return ergochain::scenario::kToolVersion.data(); }

void ergochain_config_default(ergochain_config* cfg) {
  if (cfg) *cfg = {2, 1.0, 1.0, 0.0, 0.0, 0, ERGOCHAIN_PRINTED};
}

ergochain_status ergochain_chain_create(const ergochain_config* cfg, uint64_t realization, ergochain_chain** out) {
  return guarded([&] {
    require(out != nullptr, "output pointer is null");
    *out = nullptr;
    auto chain = ergochain::Chain::build(convert(cfg), realization);
    *out = new ergochain_chain{std::move(chain)};
  });
}

void ergochain_chain_destroy(ergochain_chain* chain) { delete chain; }

int ergochain_chain_size(const ergochain_chain* chain) { return chain ? chain->chain.spectrum.size() : 0; }

ergochain_status ergochain_chain_bonds(const ergochain_chain* chain, double* out, size_t len) {
  return guarded([&] {
    require(chain && out, "null argument");
    const auto& b = chain->chain.bonds.bonds;
    require(len >= b.size(), "buffer too small for bonds");
    std::memcpy(out, b.data(), b.size() * sizeof(double));
  });
}

ergochain_status ergochain_chain_energies(const ergochain_chain* chain, double* out, size_t len) {
  return guarded([&] {
    require(chain && out, "null argument");
    const auto e = chain->chain.spectrum.energies();
    require(len >= e.size(), "buffer too small for energies");
    std::memcpy(out, e.data(), e.size() * sizeof(double));
  });
}

ergochain_status ergochain_chain_amplitude(const ergochain_chain* chain, int site, double t, double* re, double* im) {
  return guarded([&] {
    require(chain && re && im, "null argument");
    const auto f = ergochain::amplitude_spectral(chain->chain.spectrum, site, t);
    *re = f.value.real();
    *im = f.value.imag();
  });
}

ergochain_status ergochain_chain_erg_at_reflection(const ergochain_chain* chain, const ergochain_initial* initial,
                                                   ergochain_ergotropy* out) {
  return guarded([&] {
    require(chain && out, "null argument");
    store(ergochain::erg_at_reflection(chain->chain, convert(initial)), out);
  });
}

ergochain_status ergochain_qubit_ergotropy(double p0, double p1, double c_re, double c_im, double b, double* out) {
  return guarded([&] {
    require(out != nullptr, "output pointer is null");
    *out = ergochain::qubit_ergotropy({p0, p1, {c_re, c_im}}, b);
  });
}

ergochain_status ergochain_reflection_time(double alpha, int n, double* out) {
  return guarded([&] {
    require(out != nullptr, "output pointer is null");
    *out = ergochain::reflection_time(alpha, n);
  });
}

ergochain_status ergochain_erg_at_reflection(const ergochain_config* cfg, const ergochain_initial* initial,
                                             ergochain_ergotropy* out) {
  return guarded([&] {
    require(out != nullptr, "output pointer is null");
    store(ergochain::erg_at_reflection(convert(cfg), convert(initial)), out);
  });
}

ergochain_status ergochain_erg_max_window(const ergochain_config* cfg, const ergochain_initial* initial, double t_max,
                                          double dt, ergochain_ergotropy* out) {
  return guarded([&] {
    require(out != nullptr, "output pointer is null");
    store(ergochain::erg_max_window(convert(cfg), convert(initial), t_max, dt), out);
  });
}

ergochain_status ergochain_ensemble_erg(const ergochain_config* cfg, const ergochain_initial* initial,
                                        int realizations, unsigned threads, ergochain_ensemble* out) {
  return guarded([&] {
    require(out != nullptr, "output pointer is null");
    const auto s = ergochain::ensemble_erg(convert(cfg), convert(initial), realizations, threads);
    *out = {s.mean, s.stddev, s.count, s.failures};
  });
}

ergochain_status ergochain_work_distribution_create(const ergochain_config* cfg, const ergochain_initial* initial,
                                                    ergochain_work_distribution** out) {
  return guarded([&] {
    require(out != nullptr, "output pointer is null");
    *out = nullptr;
    auto d = ergochain::tpm_distribution(convert(cfg), convert(initial));
    *out = new ergochain_work_distribution{std::move(d)};
  });
}

void ergochain_work_distribution_destroy(ergochain_work_distribution* d) { delete d; }

size_t ergochain_work_distribution_size(const ergochain_work_distribution* d) { return d ? d->dist.atoms.size() : 0; }

ergochain_status ergochain_work_distribution_atoms(const ergochain_work_distribution* d, double* w, double* p,
                                                   size_t len) {
  return guarded([&] {
    require(d && w && p, "null argument");
    require(len >= d->dist.atoms.size(), "buffer too small for atoms");
    for (std::size_t i = 0; i < d->dist.atoms.size(); ++i) {
      w[i] = d->dist.atoms[i].w;
      p[i] = d->dist.atoms[i].p;
    }
  });
}

ergochain_status ergochain_work_distribution_moments(const ergochain_work_distribution* d, double* mean,
                                                     double* variance) {
  return guarded([&] {
    require(d && mean && variance, "null argument");
    const auto m = ergochain::moments(d->dist, 2);
    *mean = m.mean;
    *variance = m.variance;
  });
}

ergochain_status ergochain_run_scenario(const char* scenario, const char* config_path,
                                        const ergochain_run_options* options, ergochain_run_summary* summary) {
  namespace sc = ergochain::scenario;
  return guarded([&] {
    require(scenario && config_path, "scenario and config path are required");
    const auto kind = sc::parse_kind(scenario);
    if (!kind)
      ergochain::fail(ergochain::ErrorKind::InvalidConfiguration, "unknown scenario '" + std::string(scenario) +
                                                                      "' (expected transport-sweep, theta-sweep, "
                                                                      "disorder, workdist or bessel-compare)");
    sc::ScenarioConfig cfg = sc::load_config(config_path, *kind);
    unsigned threads = 1;
    if (options) {
      if (options->has_seed) cfg.seed = options->seed;
      if (options->out_dir) cfg.output_dir = options->out_dir;
      if (options->format) {
        const std::string f = options->format;
        if (f == "csv")
          cfg.format = sc::OutputFormat::Csv;
        else if (f == "json")
          cfg.format = sc::OutputFormat::Json;
        else
          ergochain::fail(ergochain::ErrorKind::InvalidConfiguration, "--format: expected 'csv' or 'json'");
      }
      threads = options->threads;
    }
    const sc::RunResult r = sc::run_to_files(cfg, threads);
    if (summary) {
      summary->row_count = r.row_count;
      std::snprintf(summary->config_hash, sizeof summary->config_hash, "%s", r.config_hash.c_str());
    }
  });
}

}  // extern "C"
