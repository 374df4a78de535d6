// Copyright 2026 The mroc Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

/* C interface to the mroc library: ROC and model-based ROC curves, the
 * simulation-based calibration test, and the simulation study harness.
 *
 * Objects are opaque handles created by mroc_*_create/load/... functions and
 * released with the matching *_destroy function. Every fallible function
 * returns an mroc_status; on failure a message is available from
 * mroc_last_error() on the calling thread until the next failing call. */

#ifndef MROC_MROC_H
#define MROC_MROC_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(MROC_BUILDING_LIBRARY)
#    define MROC_API __declspec(dllexport)
#  else
#    define MROC_API __declspec(dllimport)
#  endif
#else
#  define MROC_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum mroc_status {
  MROC_OK = 0,
  MROC_ERR_LENGTH_MISMATCH = 1,
  MROC_ERR_OUT_OF_RANGE_RISK = 2,
  MROC_ERR_NON_BINARY_OUTCOME = 3,
  MROC_ERR_EMPTY_SAMPLE = 4,
  MROC_ERR_DEGENERATE_SAMPLE = 5,
  MROC_ERR_ALL_ZERO_RISKS = 6,
  MROC_ERR_ALL_ONE_RISKS = 7,
  MROC_ERR_INVALID_SIMS = 8,
  MROC_ERR_DOMAIN = 9,
  MROC_ERR_INVALID_SCENARIO = 10,
  MROC_ERR_SEPARATION = 11,
  MROC_ERR_NON_CONVERGENCE = 12,
  MROC_ERR_INFINITE_LOGIT = 13,
  MROC_ERR_FILE_NOT_FOUND = 14,
  MROC_ERR_MISSING_COLUMN = 15,
  MROC_ERR_PARSE = 16,
  MROC_ERR_CONFIG = 17,
  MROC_ERR_IO = 18,
  MROC_ERR_NUMERIC = 19,
  MROC_ERR_INVALID_ARGUMENT = 20, /* null handle or pointer */
  MROC_ERR_INTERNAL = 21
} mroc_status;

typedef struct mroc_sample mroc_sample;
typedef struct mroc_curve mroc_curve;
typedef struct mroc_power_table mroc_power_table;

typedef enum mroc_family {
  MROC_FAMILY_LOGIT_LINEAR = 0,
  MROC_FAMILY_SIGN_POWER = 1,
  MROC_FAMILY_SUPP_LOGIT_LINEAR = 2,
  MROC_FAMILY_CASE_MIX = 3
} mroc_family;

typedef enum mroc_test_kind {
  MROC_TEST_MEAN_CALIBRATION = 0,
  MROC_TEST_ROC_EQUALITY = 1,
  MROC_TEST_UNIFIED = 2,
  MROC_TEST_LIKELIHOOD_RATIO = 3
} mroc_test_kind;

typedef struct mroc_scenario {
  mroc_family family;
  double a;
  double b;
  size_t n;
  double predictor_mean;
  double predictor_sd;
  char panel; /* 'A'..'D', case-mix family only */
} mroc_scenario;

typedef struct mroc_test_result {
  double stat_a;
  double stat_b;
  double p_a;
  double p_b;
  double stat_u;
  double brown_c;
  double brown_k;
  double p_unified;
  uint64_t n_sims;
  uint64_t seed;
} mroc_test_result;

typedef struct mroc_validate_options {
  const char* input;
  const char* y_column;   /* default "y" */
  const char* p_column;   /* default "p" */
  size_t n_sims;          /* default 10000 */
  uint64_t seed;          /* default 0 */
  size_t bins;            /* default 10 */
  const char* out_dir;    /* default "." */
  unsigned threads;       /* 0 = hardware concurrency */
} mroc_validate_options;

typedef struct mroc_validate_summary {
  size_t n;
  size_t events;
  double auc_empirical;
  double auc_model_based;
  double t_test_p;
  mroc_test_result test;
} mroc_validate_summary;

/* ---- library ---------------------------------------------------------- */

MROC_API const char* mroc_version(void);
MROC_API const char* mroc_last_error(void);
MROC_API const char* mroc_status_name(mroc_status status);
/* Process exit code for a status: 0 success, 2 input or validation error,
 * 3 configuration error, 4 numeric failure. */
MROC_API int mroc_exit_code(mroc_status status);

/* ---- samples ---------------------------------------------------------- */

MROC_API mroc_status mroc_sample_create(const int* outcomes, const double* risks, size_t n,
                                        mroc_sample** out);
MROC_API mroc_status mroc_sample_load_csv(const char* path, const char* y_column,
                                          const char* p_column, mroc_sample** out);
MROC_API void mroc_sample_destroy(mroc_sample* sample);
MROC_API size_t mroc_sample_size(const mroc_sample* sample);
MROC_API size_t mroc_sample_cases(const mroc_sample* sample);
/* Copies the sample into caller buffers of mroc_sample_size() entries;
 * either pointer may be null. */
MROC_API mroc_status mroc_sample_copy(const mroc_sample* sample, int* outcomes, double* risks);

/* ---- curves ----------------------------------------------------------- */

MROC_API mroc_status mroc_curve_empirical(const mroc_sample* sample, mroc_curve** out);
MROC_API mroc_status mroc_curve_model_based(const mroc_sample* sample, mroc_curve** out);
MROC_API void mroc_curve_destroy(mroc_curve* curve);
MROC_API size_t mroc_curve_size(const mroc_curve* curve);
MROC_API double mroc_curve_auc(const mroc_curve* curve);
MROC_API mroc_status mroc_curve_points(const mroc_curve* curve, double* fpr, double* tpr);
/* Right-continuous step evaluation at false positive rate t. */
MROC_API double mroc_curve_tpr_at(const mroc_curve* curve, double t);

/* ---- statistics ------------------------------------------------------- */

MROC_API mroc_status mroc_auc_concordance(const mroc_sample* sample, double* out);
MROC_API mroc_status mroc_mean_calibration_stat(const mroc_sample* sample, double* out);
MROC_API mroc_status mroc_roc_equality_stat(const mroc_sample* sample, double* out);
MROC_API mroc_status mroc_unified_test(const mroc_sample* sample, size_t n_sims, uint64_t seed,
                                       uint64_t stream_id, unsigned threads,
                                       mroc_test_result* out);
MROC_API mroc_status mroc_mc_p_value(double observed, const double* null_values, size_t n,
                                     double* out);
MROC_API mroc_status mroc_chi_square_cdf(double x, double k, double* out);
MROC_API mroc_status mroc_fit_logistic(const mroc_sample* sample, double* alpha, double* beta,
                                       double* loglik);
MROC_API mroc_status mroc_lrt_calibration(const mroc_sample* sample, double* statistic,
                                          double* p_value);

/* ---- simulation ------------------------------------------------------- */

/* Fills defaults for the family (n = 1000, a = 0, b = 1, panel 'A'). */
MROC_API mroc_status mroc_scenario_init(mroc_scenario* scenario, mroc_family family);
MROC_API mroc_status mroc_family_from_name(const char* name, mroc_family* out);
/* `true_risks` may be null or a buffer of scenario->n entries. */
MROC_API mroc_status mroc_generate_dataset(const mroc_scenario* scenario, uint64_t seed,
                                           uint64_t stream_id, mroc_sample** out,
                                           double* true_risks);

/* ---- commands --------------------------------------------------------- */

MROC_API void mroc_validate_options_init(mroc_validate_options* options);
/* Writes report.json, roc.svg and calibration.svg; `summary` may be null. */
MROC_API mroc_status mroc_validate(const mroc_validate_options* options,
                                   mroc_validate_summary* summary);
MROC_API mroc_status mroc_simulate_csv(const mroc_scenario* scenario, uint64_t seed,
                                       const char* out_path, int include_true_p);
/* Writes power.json, power.svg and calibration_curves.svg. `out` may be null;
 * otherwise it receives a table to release with mroc_power_table_destroy. */
MROC_API mroc_status mroc_power(const char* config_path, const char* out_dir, unsigned threads,
                                mroc_power_table** out);

MROC_API void mroc_power_table_destroy(mroc_power_table* table);
MROC_API size_t mroc_power_table_rows(const mroc_power_table* table);
MROC_API mroc_status mroc_power_table_scenario(const mroc_power_table* table, size_t row,
                                               mroc_scenario* out);
MROC_API mroc_status mroc_power_table_tally(const mroc_power_table* table, size_t row,
                                            mroc_test_kind test, size_t* rejections,
                                            size_t* evaluated, size_t* failures);

#ifdef __cplusplus
}
#endif

#endif /* MROC_MROC_H */
