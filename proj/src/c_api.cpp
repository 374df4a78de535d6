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

#include "mroc/mroc.h"

#include <exception>
#include <new>
#include <string>
#include <utility>

#include "mroc/caltest.hpp"
#include "mroc/commands.hpp"
#include "mroc/io.hpp"
#include "mroc/roc.hpp"
#include "mroc/simstudy.hpp"

struct mroc_sample {
  mroc::ValidationSample value;
};

struct mroc_curve {
  mroc::RocCurve value;
};

struct mroc_power_table {
  mroc::PowerTable value;
};

namespace {

thread_local std::string g_last_error;

mroc_status status_for(mroc::ErrorCode code) {
  using mroc::ErrorCode;
  switch (code) {
    case ErrorCode::kLengthMismatch: return MROC_ERR_LENGTH_MISMATCH;
    case ErrorCode::kOutOfRangeRisk: return MROC_ERR_OUT_OF_RANGE_RISK;
    case ErrorCode::kNonBinaryOutcome: return MROC_ERR_NON_BINARY_OUTCOME;
    case ErrorCode::kEmptySample: return MROC_ERR_EMPTY_SAMPLE;
    case ErrorCode::kDegenerateSample: return MROC_ERR_DEGENERATE_SAMPLE;
    case ErrorCode::kAllZeroRisks: return MROC_ERR_ALL_ZERO_RISKS;
    case ErrorCode::kAllOneRisks: return MROC_ERR_ALL_ONE_RISKS;
    case ErrorCode::kInvalidSims: return MROC_ERR_INVALID_SIMS;
    case ErrorCode::kDomainError: return MROC_ERR_DOMAIN;
    case ErrorCode::kInvalidScenario: return MROC_ERR_INVALID_SCENARIO;
    case ErrorCode::kSeparationDetected: return MROC_ERR_SEPARATION;
    case ErrorCode::kNonConvergence: return MROC_ERR_NON_CONVERGENCE;
    case ErrorCode::kInfiniteLogit: return MROC_ERR_INFINITE_LOGIT;
    case ErrorCode::kFileNotFound: return MROC_ERR_FILE_NOT_FOUND;
    case ErrorCode::kMissingColumn: return MROC_ERR_MISSING_COLUMN;
    case ErrorCode::kParseError: return MROC_ERR_PARSE;
    case ErrorCode::kConfigError: return MROC_ERR_CONFIG;
    case ErrorCode::kIoError: return MROC_ERR_IO;
    case ErrorCode::kNumericFailure: return MROC_ERR_NUMERIC;
  }
  return MROC_ERR_INTERNAL;
}

mroc_status fail(mroc_status status, std::string message) {
  g_last_error = std::move(message);
  return status;
}

// Runs fn, translating exceptions into status codes.
template <class Fn>
mroc_status guarded(Fn&& fn) {
  try {
    fn();
    return MROC_OK;
  } catch (const mroc::Error& e) {
    return fail(status_for(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return fail(MROC_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(MROC_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(MROC_ERR_INTERNAL, "unknown error");
  }
}

mroc_status null_argument(const char* what) {
  return fail(MROC_ERR_INVALID_ARGUMENT, std::string("null argument: ") + what);
}

mroc_test_result to_c(const mroc::CalibrationTestResult& r) {
  return {r.stat_a,  r.stat_b,  r.p_a,       r.p_b,    r.stat_u,
          r.brown_c, r.brown_k, r.p_unified, r.n_sims, r.seed};
}

mroc::Scenario from_c(const mroc_scenario& s) {
  mroc::Scenario out;
  switch (s.family) {
    case MROC_FAMILY_LOGIT_LINEAR: out.family = mroc::ScenarioFamily::kLogitLinear; break;
    case MROC_FAMILY_SIGN_POWER: out.family = mroc::ScenarioFamily::kSignPower; break;
    case MROC_FAMILY_SUPP_LOGIT_LINEAR: out.family = mroc::ScenarioFamily::kSuppLogitLinear; break;
    case MROC_FAMILY_CASE_MIX: out.family = mroc::ScenarioFamily::kCaseMixPreset; break;
    default: throw mroc::Error(mroc::ErrorCode::kInvalidScenario, "unknown family");
  }
  out.a = s.a;
  out.b = s.b;
  out.n = s.n;
  out.predictor_mean = s.predictor_mean;
  out.predictor_sd = s.predictor_sd;
  out.panel = mroc::parse_panel(std::string(1, s.panel));
  return out;
}

mroc_scenario to_c(const mroc::Scenario& s) {
  mroc_scenario out{};
  out.family = static_cast<mroc_family>(static_cast<int>(s.family));
  out.a = s.a;
  out.b = s.b;
  out.n = s.n;
  out.predictor_mean = s.predictor_mean;
  out.predictor_sd = s.predictor_sd;
  out.panel = mroc::to_string(s.panel)[0];
  return out;
}

}  // namespace

extern "C" {

const char* mroc_version(void) { return mroc::kVersion.data(); }

const char* mroc_last_error(void) { return g_last_error.c_str(); }

const char* mroc_status_name(mroc_status status) {
  switch (status) {
    case MROC_OK: return "OK";
    case MROC_ERR_INVALID_ARGUMENT: return "InvalidArgument";
    case MROC_ERR_INTERNAL: return "Internal";
    default: break;
  }
  for (int c = 0; c <= static_cast<int>(mroc::ErrorCode::kNumericFailure); ++c) {
    const auto code = static_cast<mroc::ErrorCode>(c);
    if (status_for(code) == status) return mroc::to_string(code).data();
  }
  return "Unknown";
}

int mroc_exit_code(mroc_status status) {
  switch (status) {
    case MROC_OK: return 0;
    case MROC_ERR_CONFIG: return 3;
    case MROC_ERR_SEPARATION:
    case MROC_ERR_NON_CONVERGENCE:
    case MROC_ERR_INFINITE_LOGIT:
    case MROC_ERR_NUMERIC:
    case MROC_ERR_INTERNAL:
      return 4;
    default: return 2;
  }
}

mroc_status mroc_sample_create(const int* outcomes, const double* risks, size_t n,
                               mroc_sample** out) {
  if (!out) return null_argument("out");
  if (n > 0 && (!outcomes || !risks)) return null_argument("outcomes/risks");
  return guarded([&] {
    *out = new mroc_sample{mroc::make_sample(std::span<const int>(outcomes, n),
                                             std::span<const double>(risks, n))};
  });
}

mroc_status mroc_sample_load_csv(const char* path, const char* y_column, const char* p_column,
                                 mroc_sample** out) {
  if (!out || !path) return null_argument("path/out");
  return guarded([&] {
    *out = new mroc_sample{mroc::load_csv(path, y_column ? y_column : "y",
                                          p_column ? p_column : "p")};
  });
}

void mroc_sample_destroy(mroc_sample* sample) { delete sample; }

size_t mroc_sample_size(const mroc_sample* sample) { return sample ? sample->value.size() : 0; }

size_t mroc_sample_cases(const mroc_sample* sample) { return sample ? sample->value.cases() : 0; }

mroc_status mroc_sample_copy(const mroc_sample* sample, int* outcomes, double* risks) {
  if (!sample) return null_argument("sample");
  const auto& s = sample->value;
  for (size_t i = 0; i < s.size(); ++i) {
    if (outcomes) outcomes[i] = s.outcomes()[i];
    if (risks) risks[i] = s.risks()[i];
  }
  return MROC_OK;
}

mroc_status mroc_curve_empirical(const mroc_sample* sample, mroc_curve** out) {
  if (!sample || !out) return null_argument("sample/out");
  return guarded([&] { *out = new mroc_curve{mroc::empirical_roc(sample->value)}; });
}

mroc_status mroc_curve_model_based(const mroc_sample* sample, mroc_curve** out) {
  if (!sample || !out) return null_argument("sample/out");
  return guarded([&] { *out = new mroc_curve{mroc::model_based_roc(sample->value.risks())}; });
}

void mroc_curve_destroy(mroc_curve* curve) { delete curve; }

size_t mroc_curve_size(const mroc_curve* curve) { return curve ? curve->value.points.size() : 0; }

double mroc_curve_auc(const mroc_curve* curve) { return curve ? curve->value.auc : 0.0; }

mroc_status mroc_curve_points(const mroc_curve* curve, double* fpr, double* tpr) {
  if (!curve) return null_argument("curve");
  const auto& pts = curve->value.points;
  for (size_t k = 0; k < pts.size(); ++k) {
    if (fpr) fpr[k] = pts[k].fpr;
    if (tpr) tpr[k] = pts[k].tpr;
  }
  return MROC_OK;
}

double mroc_curve_tpr_at(const mroc_curve* curve, double t) {
  return curve ? curve->value.tpr_at(t) : 0.0;
}

mroc_status mroc_auc_concordance(const mroc_sample* sample, double* out) {
  if (!sample || !out) return null_argument("sample/out");
  return guarded([&] { *out = mroc::auc_concordance(sample->value); });
}

mroc_status mroc_mean_calibration_stat(const mroc_sample* sample, double* out) {
  if (!sample || !out) return null_argument("sample/out");
  return guarded([&] { *out = mroc::mean_calibration_stat(sample->value); });
}

mroc_status mroc_roc_equality_stat(const mroc_sample* sample, double* out) {
  if (!sample || !out) return null_argument("sample/out");
  return guarded([&] { *out = mroc::roc_equality_stat(sample->value); });
}

mroc_status mroc_unified_test(const mroc_sample* sample, size_t n_sims, uint64_t seed,
                              uint64_t stream_id, unsigned threads, mroc_test_result* out) {
  if (!sample || !out) return null_argument("sample/out");
  return guarded([&] {
    *out = to_c(mroc::unified_test(sample->value, n_sims, mroc::RngStream(seed, stream_id),
                                   threads));
  });
}

mroc_status mroc_mc_p_value(double observed, const double* null_values, size_t n, double* out) {
  if (!out || (n > 0 && !null_values)) return null_argument("null_values/out");
  return guarded([&] {
    *out = mroc::mc_p_value(observed, std::span<const double>(null_values, n));
  });
}

mroc_status mroc_chi_square_cdf(double x, double k, double* out) {
  if (!out) return null_argument("out");
  return guarded([&] { *out = mroc::chi_square_cdf(x, k); });
}

mroc_status mroc_fit_logistic(const mroc_sample* sample, double* alpha, double* beta,
                              double* loglik) {
  if (!sample) return null_argument("sample");
  return guarded([&] {
    const auto fit = mroc::fit_logistic_2param(sample->value);
    if (alpha) *alpha = fit.alpha;
    if (beta) *beta = fit.beta;
    if (loglik) *loglik = fit.loglik;
  });
}

mroc_status mroc_lrt_calibration(const mroc_sample* sample, double* statistic,
                                 double* p_value) {
  if (!sample) return null_argument("sample");
  return guarded([&] {
    const auto r = mroc::lrt_calibration(sample->value);
    if (statistic) *statistic = r.statistic;
    if (p_value) *p_value = r.p_value;
  });
}

mroc_status mroc_scenario_init(mroc_scenario* scenario, mroc_family family) {
  if (!scenario) return null_argument("scenario");
  return guarded([&] {
    switch (family) {
      case MROC_FAMILY_LOGIT_LINEAR: *scenario = to_c(mroc::Scenario::logit_linear(0, 1, 1000)); break;
      case MROC_FAMILY_SIGN_POWER: *scenario = to_c(mroc::Scenario::sign_power(0, 1, 1000)); break;
      case MROC_FAMILY_SUPP_LOGIT_LINEAR:
        *scenario = to_c(mroc::Scenario::supp_logit_linear(0, 1, 1000));
        break;
      case MROC_FAMILY_CASE_MIX:
        *scenario = to_c(mroc::Scenario::case_mix(mroc::CaseMixPanel::kA, 1000));
        break;
      default: throw mroc::Error(mroc::ErrorCode::kInvalidScenario, "unknown family");
    }
  });
}

mroc_status mroc_family_from_name(const char* name, mroc_family* out) {
  if (!name || !out) return null_argument("name/out");
  return guarded([&] {
    *out = static_cast<mroc_family>(static_cast<int>(mroc::parse_family(name)));
  });
}

mroc_status mroc_generate_dataset(const mroc_scenario* scenario, uint64_t seed,
                                  uint64_t stream_id, mroc_sample** out, double* true_risks) {
  if (!scenario || !out) return null_argument("scenario/out");
  return guarded([&] {
    mroc::RngStream rng(seed, stream_id);
    std::vector<double> truth;
    auto sample = mroc::generate_dataset(from_c(*scenario), rng, &truth);
    if (true_risks) std::copy(truth.begin(), truth.end(), true_risks);
    *out = new mroc_sample{std::move(sample)};
  });
}

void mroc_validate_options_init(mroc_validate_options* options) {
  if (!options) return;
  *options = mroc_validate_options{nullptr, "y", "p", 10000, 0, 10, ".", 0};
}

mroc_status mroc_validate(const mroc_validate_options* options, mroc_validate_summary* summary) {
  if (!options || !options->input) return null_argument("options/input");
  return guarded([&] {
    mroc::ValidateOptions opts;
    opts.input = options->input;
    if (options->y_column) opts.y_column = options->y_column;
    if (options->p_column) opts.p_column = options->p_column;
    opts.n_sims = options->n_sims;
    opts.seed = options->seed;
    opts.bins = options->bins;
    if (options->out_dir) opts.out_dir = options->out_dir;
    opts.threads = options->threads;
    const auto report = mroc::validate_command(opts);
    if (summary) {
      summary->n = report.summary.n;
      summary->events = report.summary.events;
      summary->auc_empirical = report.empirical.auc;
      summary->auc_model_based = report.model_based.auc;
      summary->t_test_p = report.t_test.p_value;
      summary->test = to_c(report.test);
    }
  });
}

mroc_status mroc_simulate_csv(const mroc_scenario* scenario, uint64_t seed, const char* out_path,
                              int include_true_p) {
  if (!scenario || !out_path) return null_argument("scenario/out_path");
  return guarded([&] {
    mroc::simulate_command({from_c(*scenario), seed, out_path, include_true_p != 0});
  });
}

mroc_status mroc_power(const char* config_path, const char* out_dir, unsigned threads,
                       mroc_power_table** out) {
  if (!config_path || !out_dir) return null_argument("config_path/out_dir");
  return guarded([&] {
    auto table = mroc::power_command(config_path, out_dir, threads);
    if (out) *out = new mroc_power_table{std::move(table)};
  });
}

void mroc_power_table_destroy(mroc_power_table* table) { delete table; }

size_t mroc_power_table_rows(const mroc_power_table* table) {
  return table ? table->value.rows.size() : 0;
}

mroc_status mroc_power_table_scenario(const mroc_power_table* table, size_t row,
                                      mroc_scenario* out) {
  if (!table || !out) return null_argument("table/out");
  if (row >= table->value.rows.size()) return fail(MROC_ERR_DOMAIN, "row out of range");
  *out = to_c(table->value.rows[row].scenario);
  return MROC_OK;
}

mroc_status mroc_power_table_tally(const mroc_power_table* table, size_t row, mroc_test_kind test,
                                   size_t* rejections, size_t* evaluated, size_t* failures) {
  if (!table) return null_argument("table");
  if (row >= table->value.rows.size()) return fail(MROC_ERR_DOMAIN, "row out of range");
  if (test < MROC_TEST_MEAN_CALIBRATION || test > MROC_TEST_LIKELIHOOD_RATIO) {
    return fail(MROC_ERR_DOMAIN, "unknown test kind");
  }
  const auto& t = table->value.rows[row].tests[static_cast<size_t>(test)];
  if (rejections) *rejections = t.rejections;
  if (evaluated) *evaluated = t.evaluated;
  if (failures) *failures = t.failures;
  return MROC_OK;
}

}  // extern "C"
