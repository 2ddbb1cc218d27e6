/* SPDX-License-Identifier: Apache-2.0 */
#ifndef ERGOCHAIN_ERGOCHAIN_H
#define ERGOCHAIN_ERGOCHAIN_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define ERGOCHAIN_API __declspec(dllexport)
#else
#define ERGOCHAIN_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum ergochain_status {
  ERGOCHAIN_OK = 0,
  ERGOCHAIN_INVALID_CONFIG = 1,
  ERGOCHAIN_INVALID_INPUT = 2,
  ERGOCHAIN_NUMERICAL = 3,
  ERGOCHAIN_MISUSE = 4,
  ERGOCHAIN_UNDEFINED = 5,
  ERGOCHAIN_IO = 6,
  ERGOCHAIN_INTERNAL = 7
} ergochain_status;

typedef enum ergochain_convention { ERGOCHAIN_PRINTED = 0, ERGOCHAIN_POSITIVE = 1 } ergochain_convention;

typedef struct ergochain_config {
  int n;
  double b;
  double j;
  double alpha;
  double delta;
  uint64_t seed;
  ergochain_convention convention;
} ergochain_config;

/* Initial state of site 1: pure (theta, phi) when is_mixed == 0, otherwise
   the diagonal state with excited population q. */
typedef struct ergochain_initial {
  int is_mixed;
  double theta;
  double phi;
  double q;
} ergochain_initial;

typedef struct ergochain_ergotropy {
  double erg_in;
  double erg_max;
  int site;
  double time;
  double eta; /* NaN when erg_in == 0 */
} ergochain_ergotropy;

typedef struct ergochain_ensemble {
  double mean;
  double stddev;
  int count;
  int failures;
} ergochain_ensemble;

typedef struct ergochain_run_options {
  int has_seed;
  uint64_t seed;
  const char* out_dir; /* NULL keeps the config value */
  const char* format;  /* "csv", "json" or NULL */
  unsigned threads;    /* 0 = hardware concurrency */
} ergochain_run_options;

typedef struct ergochain_run_summary {
  size_t row_count;
  char config_hash[17];
} ergochain_run_summary;

typedef struct ergochain_chain ergochain_chain;
typedef struct ergochain_work_distribution ergochain_work_distribution;

/* Message of the last failed call on this thread ("" when none). */
ERGOCHAIN_API const char* ergochain_last_error(void);
ERGOCHAIN_API const char* ergochain_version(void);

ERGOCHAIN_API void ergochain_config_default(ergochain_config* cfg);

/* Builds and diagonalizes the chain for disorder realization `realization`. */
ERGOCHAIN_API ergochain_status ergochain_chain_create(const ergochain_config* cfg, uint64_t realization,
                                                      ergochain_chain** out);
ERGOCHAIN_API void ergochain_chain_destroy(ergochain_chain* chain);
ERGOCHAIN_API int ergochain_chain_size(const ergochain_chain* chain);
/* Copies N-1 bonds / N ascending energies into `out` (capacity `len`). */
ERGOCHAIN_API ergochain_status ergochain_chain_bonds(const ergochain_chain* chain, double* out, size_t len);
ERGOCHAIN_API ergochain_status ergochain_chain_energies(const ergochain_chain* chain, double* out, size_t len);
/* f_site(t), site is 1-based. */
ERGOCHAIN_API ergochain_status ergochain_chain_amplitude(const ergochain_chain* chain, int site, double t, double* re,
                                                         double* im);
ERGOCHAIN_API ergochain_status ergochain_chain_erg_at_reflection(const ergochain_chain* chain,
                                                                 const ergochain_initial* initial,
                                                                 ergochain_ergotropy* out);

/* Ergotropy of the qubit [[p0, c], [conj(c), p1]] under -B sigma_z. */
ERGOCHAIN_API ergochain_status ergochain_qubit_ergotropy(double p0, double p1, double c_re, double c_im, double b,
                                                         double* out);
ERGOCHAIN_API ergochain_status ergochain_reflection_time(double alpha, int n, double* out);
ERGOCHAIN_API ergochain_status ergochain_erg_at_reflection(const ergochain_config* cfg,
                                                           const ergochain_initial* initial,
                                                           ergochain_ergotropy* out);
ERGOCHAIN_API ergochain_status ergochain_erg_max_window(const ergochain_config* cfg, const ergochain_initial* initial,
                                                        double t_max, double dt, ergochain_ergotropy* out);
ERGOCHAIN_API ergochain_status ergochain_ensemble_erg(const ergochain_config* cfg, const ergochain_initial* initial,
                                                      int realizations, unsigned threads, ergochain_ensemble* out);

ERGOCHAIN_API ergochain_status ergochain_work_distribution_create(const ergochain_config* cfg,
                                                                  const ergochain_initial* initial,
                                                                  ergochain_work_distribution** out);
ERGOCHAIN_API void ergochain_work_distribution_destroy(ergochain_work_distribution* d);
ERGOCHAIN_API size_t ergochain_work_distribution_size(const ergochain_work_distribution* d);
ERGOCHAIN_API ergochain_status ergochain_work_distribution_atoms(const ergochain_work_distribution* d, double* w,
                                                                 double* p, size_t len);
ERGOCHAIN_API ergochain_status ergochain_work_distribution_moments(const ergochain_work_distribution* d,
                                                                   double* mean, double* variance);

/* Runs a named scenario from a config file and writes data + manifest. */
ERGOCHAIN_API ergochain_status ergochain_run_scenario(const char* scenario, const char* config_path,
                                                      const ergochain_run_options* options,
                                                      ergochain_run_summary* summary);

#ifdef __cplusplus
}
#endif

#endif /* ERGOCHAIN_ERGOCHAIN_H */
