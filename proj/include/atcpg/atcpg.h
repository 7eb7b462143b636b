#ifndef ATCPG_H
#define ATCPG_H

/* C interface to the adaptive pacing library.
 *
 * Configs are opaque handles created from a named experiment preset, a file,
 * or raw JSON text (comments allowed), and run as a whole suite that writes
 * CSV traces plus CSV/JSON summaries. A handful of math primitives are
 * exposed directly for callers that only want the geometry.
 *
 * Every function that can fail returns an atcpg_status; on failure
 * atcpg_last_error() describes what went wrong for the calling thread.
 */

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

#if defined(_WIN32)
#define ATCPG_API __declspec(dllexport)
#else
#define ATCPG_API __attribute__((visibility("default")))
#endif

typedef enum atcpg_status {
  ATCPG_OK = 0,
  ATCPG_ERR_RUN = 1,    /* execution or I/O failure */
  ATCPG_ERR_CONFIG = 2, /* parse or validation failure */
  ATCPG_ERR_ARG = 3     /* null pointer or out-of-domain argument */
} atcpg_status;

typedef struct atcpg_config atcpg_config;

/* Library version, "major.minor.patch". Never fails. */
ATCPG_API const char* atcpg_version(void);

/* Message for the most recent failure on this thread; empty string if the
 * last call succeeded. The pointer stays valid until the thread's next
 * library call. */
ATCPG_API const char* atcpg_last_error(void);

/* Creates the shipped preset for an experiment: one of "ablation",
 * "headtohead", "spatial", "regimes", "multiagent", "single". */
ATCPG_API atcpg_status atcpg_config_preset(const char* experiment,
                                           atcpg_config** out);

/* Loads and validates a JSON config file. */
ATCPG_API atcpg_status atcpg_config_load(const char* path,
                                         atcpg_config** out);

/* Parses and validates config text; source_name labels diagnostics and may
 * be NULL. */
ATCPG_API atcpg_status atcpg_config_parse(const char* text,
                                          const char* source_name,
                                          atcpg_config** out);

ATCPG_API void atcpg_config_free(atcpg_config* cfg);

ATCPG_API atcpg_status atcpg_config_set_output_dir(atcpg_config* cfg,
                                                   const char* dir);
ATCPG_API atcpg_status atcpg_config_set_seeds(atcpg_config* cfg,
                                              const uint64_t* seeds,
                                              size_t n_seeds);
ATCPG_API atcpg_status atcpg_config_set_ticks(atcpg_config* cfg, int ticks);

/* Serialises the full config, defaults included, as pretty-printed JSON.
 * Free the returned text with atcpg_string_free. */
ATCPG_API atcpg_status atcpg_config_to_json(const atcpg_config* cfg,
                                            char** out_text);

ATCPG_API void atcpg_string_free(char* text);

/* Runs the configured experiment suite. On success *out_files (if non-NULL)
 * receives a newline-separated list of files written, summaries first; free
 * it with atcpg_string_free. */
ATCPG_API atcpg_status atcpg_run_suite(const atcpg_config* cfg,
                                       char** out_files);

/* Geodesic distance between two points given in ball coordinates; each is
 * projected into the open ball first, so any finite vector is accepted. */
ATCPG_API atcpg_status atcpg_poincare_distance(const double* x,
                                               const double* y, size_t dim,
                                               double curvature,
                                               double* out_distance);

/* Spread signal (mean + variance of pairwise distances) over n_futures
 * points of dimension dim, row-major, each projected into the ball. */
ATCPG_API atcpg_status atcpg_predictive_spread(const double* futures,
                                               size_t n_futures, size_t dim,
                                               double curvature,
                                               double* out_kappa);

/* Interval-aware reward total for one tick at the default coefficients. */
ATCPG_API atcpg_status atcpg_interval_reward(double wellbeing_delta,
                                             double kappa,
                                             double interval_s,
                                             double* out_total);

#ifdef __cplusplus
}
#endif

#endif /* ATCPG_H */
