/*
 * acsee — antagonistic crowd simulation engine, C interface.
 *
 * The library simulates civilians, activists, and cops on a bounded cell
 * grid: emotions spread between neighbors, emotions set deterrent forces,
 * forces frame a cop-vs-activist game whose strategies evolve by local
 * imitation, and the game's outcomes feed back into emotion, movement, and
 * subdual. Everything is deterministic per seed.
 *
 * All functions returning acsee_status leave a human-readable message for
 * the calling thread in acsee_last_error() on failure. Handles are opaque;
 * free them with their matching *_free function exactly once.
 */
#ifndef ACSEE_H
#define ACSEE_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#if defined(ACSEE_BUILD)
#define ACSEE_API __declspec(dllexport)
#else
#define ACSEE_API __declspec(dllimport)
#endif
#else
#define ACSEE_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum acsee_status {
  ACSEE_OK = 0,
  ACSEE_ERR_IO = 1,         /* file unreadable/unwritable */
  ACSEE_ERR_PARSE = 2,      /* malformed scenario or trace */
  ACSEE_ERR_VALIDATION = 3, /* well-formed but inconsistent scenario */
  ACSEE_ERR_CAPACITY = 4,   /* more agents than grid cells */
  ACSEE_ERR_PARAM = 5,      /* bad argument to an API call */
  ACSEE_ERR_RUNTIME = 6     /* anything else */
} acsee_status;

typedef struct acsee_scenario acsee_scenario;
typedef struct acsee_run_result acsee_run_result;
typedef struct acsee_batch_result acsee_batch_result;

/* Engine knobs that are not part of a scenario file. Initialize with
 * acsee_options_init and override selectively; passing NULL wherever an
 * options pointer is accepted means "all defaults". */
typedef struct acsee_options {
  double eps_bal;      /* force-difference tolerance counted as balanced */
  double p_mut;        /* per-bit strategy mutation probability */
  int benefit_agg;     /* 0 = sum payoffs over opponents, 1 = mean */
  int death_radius;    /* 0 = perception radius, 1 = Moore-1 */
  int emotion_enabled; /* 0 freezes all emotions (ablation) */
  double heat_sigma;   /* heat-map Gaussian width, cells */
  int heat_every;      /* heat-map cadence in ticks; 0 disables */
  double link_radius;  /* single-linkage distance for path clustering */
  int min_group;       /* minimum cluster size for a dominant path */
  int keep_trace;      /* 0 drops per-tick snapshots (series only) */
} acsee_options;

ACSEE_API void acsee_options_init(acsee_options* opts);

/* Message for the most recent failure on this thread; empty on success. */
ACSEE_API const char* acsee_last_error(void);

ACSEE_API const char* acsee_version(void);

/* ---- scenarios ---- */

ACSEE_API acsee_status acsee_scenario_load(const char* path,
                                           acsee_scenario** out);
ACSEE_API acsee_status acsee_scenario_parse(const char* json_text,
                                            acsee_scenario** out);
ACSEE_API void acsee_scenario_free(acsee_scenario* scenario);
ACSEE_API uint64_t acsee_scenario_seed(const acsee_scenario* scenario);
ACSEE_API acsee_status acsee_scenario_set_seed(acsee_scenario* scenario,
                                               uint64_t seed);
ACSEE_API acsee_status acsee_scenario_set_max_ticks(acsee_scenario* scenario,
                                                    int max_ticks);

/* ---- single runs ---- */

ACSEE_API acsee_status acsee_run(const acsee_scenario* scenario,
                                 const acsee_options* opts,
                                 acsee_run_result** out);
ACSEE_API void acsee_run_result_free(acsee_run_result* result);

ACSEE_API int acsee_run_termination_tick(const acsee_run_result* result);
/* 1 if a side was eliminated, 0 if the run hit max_ticks. */
ACSEE_API int acsee_run_side_eliminated(const acsee_run_result* result);

/* Per-tick series rows; row index equals the tick. Valid column names:
 * live_civilians, live_activists, live_cops, dead_total, active_ratio,
 * coop_ratio_cops, coop_ratio_activists, mean_e_civ, mean_e_act,
 * mean_e_cop. */
ACSEE_API size_t acsee_run_series_length(const acsee_run_result* result);
ACSEE_API acsee_status acsee_run_series_column(const acsee_run_result* result,
                                               const char* column,
                                               double* out_values,
                                               size_t capacity);

/* ---- batches ---- */

ACSEE_API acsee_status acsee_batch(const acsee_scenario* scenario,
                                   const acsee_options* opts, int n_runs,
                                   uint64_t base_seed, int jobs,
                                   acsee_batch_result** out);
ACSEE_API void acsee_batch_result_free(acsee_batch_result* result);

ACSEE_API int acsee_batch_n_runs(const acsee_batch_result* result);
ACSEE_API size_t acsee_batch_series_length(const acsee_batch_result* result);
/* stddev = 0 fetches the mean column, 1 the standard deviation column. */
ACSEE_API acsee_status acsee_batch_series_column(
    const acsee_batch_result* result, const char* column, int stddev,
    double* out_values, size_t capacity);
ACSEE_API acsee_status acsee_batch_run_info(const acsee_batch_result* result,
                                            int run_index, uint64_t* seed,
                                            int* termination_tick,
                                            int* side_eliminated);

/* ---- output bundles ---- */

ACSEE_API acsee_status acsee_write_run_bundle(const acsee_scenario* scenario,
                                              const acsee_options* opts,
                                              const acsee_run_result* result,
                                              const char* out_dir);
ACSEE_API acsee_status acsee_write_batch_bundle(
    const acsee_scenario* scenario, const acsee_options* opts,
    uint64_t base_seed, const acsee_batch_result* result,
    const char* out_dir);

/* Runs one batch per value of a sweepable parameter (n_cops, pr, a, b) and
 * writes summary plus per-value bundles under out_dir. */
ACSEE_API acsee_status acsee_sweep_and_write(
    const acsee_scenario* scenario, const acsee_options* opts,
    const char* param, const double* values, size_t n_values, int n_runs,
    uint64_t base_seed, int jobs, const char* out_dir);

/* ---- trace comparison ---- */

/* Compares two trace files and returns a JSON report (entropy, mean
 * angular error, inter-group distance, path counts, warnings) in *out_json.
 * Free the string with acsee_string_free. Degenerate traces produce a
 * report with nulls and warnings, not an error. */
ACSEE_API acsee_status acsee_compare_traces(const char* trace_path_a,
                                            const char* trace_path_b,
                                            double link_radius, int min_group,
                                            char** out_json);
ACSEE_API void acsee_string_free(char* str);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* ACSEE_H */
