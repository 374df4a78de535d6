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

#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "mroc/caltest.hpp"
#include "mroc/core.hpp"
#include "mroc/roc.hpp"

namespace mroc {

inline constexpr std::string_view kReportSchema = "mroc.validation-report";
inline constexpr int kReportSchemaVersion = 1;

struct SampleSummary {
  std::size_t n = 0;
  std::size_t events = 0;
  double mean_predicted_risk = 0.0;
};

// Two-sided one-sample t-test of the residuals Y_i - risk_i against mean 0.
struct TTestResult {
  double statistic = 0.0;
  double df = 0.0;
  double p_value = 1.0;
};

TTestResult residual_t_test(const ValidationSample& sample);

struct CalibrationBin {
  double mean_predicted = 0.0;
  double observed_rate = 0.0;
  std::size_t count = 0;
};

// Equal-count bins over rows sorted by predicted risk (stable, so tied risks
// keep input order). Uses min(bins, n) bins; counts differ by at most one.
std::vector<CalibrationBin> calibration_bins(const ValidationSample& sample, std::size_t bins);

struct Provenance {
  std::string input;
  std::string input_fnv1a64;
  std::uint64_t seed = 0;
  std::size_t n_sims = 0;
  std::size_t bins = 0;
  std::string tool_version;
};

struct ValidationReport {
  SampleSummary summary;
  RocCurve empirical;
  RocCurve model_based;
  CalibrationTestResult test;
  TTestResult t_test;
  std::vector<CalibrationBin> bins;
  Provenance provenance;
};

struct ReportOptions {
  std::size_t n_sims = 10000;
  std::uint64_t seed = 0;
  std::size_t bins = 10;
  unsigned threads = 0;
};

// Stream id used for the calibration test's null simulation.
inline constexpr std::uint64_t kValidateStreamId = 0x56414c4944415445ull;

// Curves, unified test, t-test and calibration bins for one sample.
// Provenance is left for the caller to fill.
ValidationReport build_validation_report(const ValidationSample& sample,
                                         const ReportOptions& options);

std::string report_to_json(const ValidationReport& report);
// Throws kParseError on malformed documents or a schema mismatch.
ValidationReport report_from_json(std::string_view text);

}  // namespace mroc
