/* Copyright 2026 The swapreg Authors.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/* C interface to libswapreg.
 *
 * Every function returns a swapreg_status. On failure the message is kept
 * per thread and can be read with swapreg_last_error() until the next call
 * on the same thread. Strings handed out through char** parameters are
 * owned by the caller and released with swapreg_string_free().
 */

#ifndef SWAPREG_SWAPREG_H_
#define SWAPREG_SWAPREG_H_

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#if defined(SWAPREG_BUILDING_LIBRARY)
#define SWAPREG_API __declspec(dllexport)
#else
#define SWAPREG_API __declspec(dllimport)
#endif
#else
#define SWAPREG_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum swapreg_status {
  SWAPREG_OK = 0,
  SWAPREG_E_DOMAIN = 1,     /* argument outside the mathematical domain */
  SWAPREG_E_VALIDATION = 2, /* malformed loss, distribution or config */
  SWAPREG_E_SOLVER = 3,     /* LP failed or its post-check did not hold */
  SWAPREG_E_PROTOCOL = 4,   /* predict/observe called out of order */
  SWAPREG_E_IO = 5,
  SWAPREG_E_PARSE = 6,
  SWAPREG_E_INTERNAL = 7,
  SWAPREG_E_ARGUMENT = 8 /* null handle or output pointer */
} swapreg_status;

SWAPREG_API const char* swapreg_version(void);
SWAPREG_API const char* swapreg_status_name(swapreg_status status);
SWAPREG_API const char* swapreg_last_error(void);
SWAPREG_API void swapreg_string_free(char* s);

/* SWAPREG_JOBS if set, else the hardware concurrency. */
SWAPREG_API size_t swapreg_default_jobs(void);

/* ---- losses ---------------------------------------------------------- */

typedef struct swapreg_loss swapreg_loss;

/* Piecewise-linear convex 1-Lipschitz loss on [0,1]: n breakpoints
 * 0 = x_0 < ... < x_{n-1} = 1, n - 1 slopes, and the value at 0. */
SWAPREG_API swapreg_status swapreg_loss_create(const double* breakpoints, size_t n,
                                               const double* slopes, double value_at_zero,
                                               swapreg_loss** out);
/* |p - v| */
SWAPREG_API swapreg_status swapreg_loss_vshape(double v, swapreg_loss** out);
SWAPREG_API swapreg_status swapreg_loss_eval(const swapreg_loss* loss, double p, double* out);
SWAPREG_API void swapreg_loss_free(swapreg_loss* loss);

/* ---- predictors ------------------------------------------------------ */

typedef struct swapreg_predictor swapreg_predictor;

/* delta <= 0 selects the default 1/T. */
SWAPREG_API swapreg_status swapreg_predictor_create_efficient(uint64_t horizon, double delta,
                                                              uint64_t seed,
                                                              swapreg_predictor** out);
SWAPREG_API swapreg_status swapreg_predictor_create_truthful(uint64_t horizon, double delta,
                                                             swapreg_predictor** out);
SWAPREG_API swapreg_status swapreg_predictor_create_fixed_grid(uint32_t grid_size,
                                                               uint64_t horizon, uint64_t seed,
                                                               swapreg_predictor** out);
SWAPREG_API void swapreg_predictor_free(swapreg_predictor* pred);

/* Number of actions the distribution in predict() ranges over. */
SWAPREG_API swapreg_status swapreg_predictor_num_actions(const swapreg_predictor* pred,
                                                         size_t* out);
/* 0 for the fixed grid. */
SWAPREG_API swapreg_status swapreg_predictor_gamma(const swapreg_predictor* pred, double* out);

/* Commits the round's distribution and draws the prediction. kappa may be
 * NULL; otherwise it receives num_actions entries. Efficient and fixed-grid
 * predictors only. */
SWAPREG_API swapreg_status swapreg_predictor_predict(swapreg_predictor* pred, double* kappa,
                                                     size_t* action, double* p);
/* Order-reversed round: the loss distribution is revealed first. Truthful
 * predictor only. */
SWAPREG_API swapreg_status swapreg_predictor_predict_given(swapreg_predictor* pred,
                                                           const swapreg_loss* const* losses,
                                                           const double* weights, size_t n,
                                                           size_t* action, double* p);
/* Supplies the round's loss. has_outcome != 0 attaches an outcome used by
 * calibration metrics. */
SWAPREG_API swapreg_status swapreg_predictor_observe(swapreg_predictor* pred,
                                                     const swapreg_loss* loss, int has_outcome,
                                                     double outcome);
SWAPREG_API swapreg_status swapreg_predictor_rounds(const swapreg_predictor* pred,
                                                    uint64_t* out);
/* Swap regret of the rounds played so far. */
SWAPREG_API swapreg_status swapreg_predictor_swap_regret(const swapreg_predictor* pred,
                                                         double* out);
SWAPREG_API swapreg_status swapreg_predictor_write_transcript(const swapreg_predictor* pred,
                                                              const char* path);

/* ---- metrics --------------------------------------------------------- */

/* rule: "median", "mean" or "quantile" (then q is read). */
SWAPREG_API swapreg_status swapreg_cal_error(const char* rule, double q,
                                             const double* predictions,
                                             const double* outcomes, size_t n, double* out);
SWAPREG_API swapreg_status swapreg_mcal1_median(const double* predictions,
                                                const double* outcomes, size_t n,
                                                double* out);

/* ---- harness --------------------------------------------------------- */

/* Runs a sweep described by a JSON config file and writes transcripts,
 * summary.csv and sweep.json into out_dir. jobs == 0 uses the default.
 * sweep_json may be NULL. */
SWAPREG_API swapreg_status swapreg_run(const char* config_path, const char* out_dir,
                                       size_t jobs, char** sweep_json);
/* Per-T aggregates and exponent fits for a summary.csv. */
SWAPREG_API swapreg_status swapreg_fit_summary(const char* summary_path, char** fit_json);
/* Replays a JSON-lines transcript; *ok is 1 when every check passes. */
SWAPREG_API swapreg_status swapreg_verify_transcript(const char* path, int* ok,
                                                     char** report_json);

#ifdef __cplusplus
}
#endif

#endif /* SWAPREG_SWAPREG_H_ */
