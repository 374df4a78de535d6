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
#include <span>
#include <vector>

#include "mroc/core.hpp"
#include "mroc/rng.hpp"
#include "mroc/roc.hpp"

namespace mroc {

// Regularized lower incomplete gamma P(a, x), and its complement Q(a, x).
double regularized_gamma_p(double a, double x);
double regularized_gamma_q(double a, double x);

// Chi-square CDF with (possibly fractional) k degrees of freedom.
// Throws kDomainError for x < 0 or k <= 0.
double chi_square_cdf(double x, double k);
// Upper tail 1 - CDF, computed without cancellation.
double chi_square_sf(double x, double k);

// A_n = |sum(Y_i - risk_i)| / n.
double mean_calibration_stat(const ValidationSample& sample);

// B_n = integral over [0,1] of |ROC_n(t) - mROC_n(t)|, both read as step
// functions. Throws kDegenerateSample, kAllZeroRisks or kAllOneRisks.
double roc_equality_stat(const ValidationSample& sample);

// Evaluates A_n and B_n for many outcome vectors against one fixed risk
// vector. Risk grouping and the mROC are computed once at construction.
class CalibrationStatistics {
 public:
  struct Workspace {
    WeightedCdfPair cdfs;
    StepCurve steps;
  };

  explicit CalibrationStatistics(std::span<const double> risks);

  std::span<const double> risks() const noexcept { return risks_; }
  const RocCurve& model_curve() const noexcept { return model_curve_; }

  double mean_calibration(std::span<const std::uint8_t> outcomes) const noexcept;
  // Throws kDegenerateSample if outcomes are all 0 or all 1.
  double roc_equality(std::span<const std::uint8_t> outcomes, Workspace& ws) const;

 private:
  std::vector<double> risks_;
  double risk_sum_ = 0.0;
  RiskGroups groups_;
  RocCurve model_curve_;
  StepCurve model_steps_;
};

struct NullDistribution {
  std::vector<double> a_values;
  std::vector<double> b_values;
  std::vector<double> u_values;  // zero until filled by unified_test
  std::size_t n_sims = 0;
  std::uint64_t seed = 0;
  std::uint64_t stream_id = 0;
};

// Replicate i draws outcomes from the risks with rng.substream(i), so the
// result does not depend on `threads` (0 = hardware concurrency). Draws with
// only one outcome class are redrawn from the same substream.
NullDistribution simulate_null(std::span<const double> risks, std::size_t n_sims,
                               const RngStream& rng, unsigned threads = 0);

// max(#{null >= observed}, 1) / N.
double mc_p_value(double observed, std::span<const double> null_values);
// Same, against values already sorted ascending.
double mc_p_value_sorted(double observed, std::span<const double> sorted_null);

struct BrownParameters {
  double c = 1.0;
  double k = 4.0;
};

// Moment matching of U to c * chi-square(k): c = var / (2 mean),
// k = 2 mean^2 / var, with the N-1 variance denominator.
BrownParameters brown_parameters(std::span<const double> u_values);

// 1 - F(u / c; k), floored at machine epsilon.
double brown_p_value(double u, const BrownParameters& params);

struct CalibrationTestResult {
  double stat_a = 0.0;
  double stat_b = 0.0;
  double p_a = 1.0;
  double p_b = 1.0;
  double stat_u = 0.0;
  double brown_c = 1.0;
  double brown_k = 4.0;
  double p_unified = 1.0;
  std::size_t n_sims = 0;
  std::uint64_t seed = 0;
};

inline constexpr std::size_t kMinUnifiedSims = 100;

// Mean-calibration and ROC-equality tests with simulated null distributions,
// combined by Brown's adjustment of Fisher's method. Throws kInvalidSims for
// n_sims < 100. When `null_out` is given it receives the simulated null with
// u_values filled in.
CalibrationTestResult unified_test(const ValidationSample& sample, std::size_t n_sims,
                                   const RngStream& rng, unsigned threads = 0,
                                   NullDistribution* null_out = nullptr);

}  // namespace mroc
