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

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "mroc/caltest.hpp"
#include "mroc/core.hpp"
#include "mroc/rng.hpp"

namespace mroc {

enum class ScenarioFamily {
  kLogitLinear,      // logit(pred) = a + b * X
  kSignPower,        // logit(pred) = a + b * sign(X) * |X|^(1/b)
  kSuppLogitLinear,  // logit-linear with X ~ Normal(-2, 1)
  kCaseMixPreset,    // stylized case-mix panels A-D
};

enum class CaseMixPanel { kA, kB, kC, kD };

std::string_view to_string(ScenarioFamily family);
ScenarioFamily parse_family(std::string_view name);  // throws kInvalidScenario
std::string_view to_string(CaseMixPanel panel);
CaseMixPanel parse_panel(std::string_view name);     // throws kInvalidScenario

// A generative design: X ~ Normal(predictor_mean, predictor_sd^2), true risk
// logistic(true_slope * X), outcome ~ Bernoulli(true risk), and a predicted
// risk given by the family map.
struct Scenario {
  ScenarioFamily family = ScenarioFamily::kLogitLinear;
  double a = 0.0;
  double b = 1.0;
  std::size_t n = 1000;
  double predictor_mean = 0.0;
  double predictor_sd = 1.0;
  CaseMixPanel panel = CaseMixPanel::kA;

  static Scenario logit_linear(double a, double b, std::size_t n);
  static Scenario sign_power(double a, double b, std::size_t n);
  static Scenario supp_logit_linear(double a, double b, std::size_t n);
  static Scenario case_mix(CaseMixPanel panel, std::size_t n);

  // Throws kInvalidScenario.
  void validate() const;
  // Slope of the true logit on X (1, or 1/2 for case-mix panels C and D).
  double true_slope() const noexcept;
  // Predicted logit for predictor value x.
  double predicted_logit(double x) const;
  // Population calibration curve: true risk among individuals whose predicted
  // risk equals z, from the closed-form inverse of the family map.
  double true_risk_given_predicted(double z) const;
  // Whether the data satisfy the null of moderate calibration.
  bool is_calibrated() const noexcept;

  std::string label() const;
};

double logistic(double x) noexcept;
double logit(double p) noexcept;

// Draw order per row is X_i then the outcome uniform, independent of (a, b),
// so reusing a stream reproduces X and Y across miscalibration maps.
// `true_risks`, when non-null, receives the true risks (not part of the sample).
ValidationSample generate_dataset(const Scenario& scenario, RngStream& rng,
                                  std::vector<double>* true_risks = nullptr);

ValidationSample case_mix_preset(CaseMixPanel panel, std::size_t n, RngStream& rng);

struct LogisticFit {
  double alpha = 0.0;
  double beta = 1.0;
  double loglik = 0.0;
  int iterations = 0;
};

// Maximum likelihood fit of logit P(Y=1) = alpha + beta * logit(risk) by
// Newton-Raphson. Throws kInfiniteLogit (risk at 0 or 1), kDegenerateSample,
// kSeparationDetected (|alpha| or |beta| above 50) or kNonConvergence.
LogisticFit fit_logistic_2param(const ValidationSample& sample);

// Log-likelihood of the outcomes when the risks are taken as given.
double calibrated_loglik(const ValidationSample& sample);

struct LikelihoodRatioResult {
  double statistic = 0.0;
  double p_value = 1.0;
  LogisticFit fit;
};

// LR = 2 (loglik at MLE - loglik at alpha=0, beta=1), referred to chi-square(2).
LikelihoodRatioResult lrt_calibration(const ValidationSample& sample);

enum class TestKind { kMeanCalibration = 0, kRocEquality = 1, kUnified = 2, kLikelihoodRatio = 3 };
inline constexpr std::size_t kTestKinds = 4;
std::string_view to_string(TestKind kind);

struct TestTally {
  std::size_t rejections = 0;
  std::size_t evaluated = 0;
  std::size_t failures = 0;

  double rate() const noexcept {
    return evaluated == 0 ? 0.0 : static_cast<double>(rejections) / evaluated;
  }
  friend bool operator==(const TestTally&, const TestTally&) = default;
};

struct PowerRow {
  Scenario scenario;
  std::array<TestTally, kTestKinds> tests{};
  std::size_t outer_reps = 0;
  std::size_t inner_sims = 0;

  const TestTally& tally(TestKind kind) const { return tests[static_cast<std::size_t>(kind)]; }
};

struct PowerTable {
  std::vector<PowerRow> rows;
  double level = 0.05;
  std::uint64_t seed = 0;
};

inline constexpr double kPowerLevel = 0.05;

// Stable key of a scenario's parameters; per-scenario streams derive from it,
// so the table does not depend on the order of the grid.
std::uint64_t scenario_key(const Scenario& scenario);

// For every scenario and outer replicate: generate a dataset on the stream
// (seed, scenario key, replicate), run the unified test (recording p_a, p_b,
// p_unified) and the likelihood ratio test, and tally rejections at level
// 0.05. A test that throws on a replicate is counted under `failures` and
// left out of that test's denominator.
PowerTable run_power_study(std::span<const Scenario> grid, std::size_t outer_reps,
                           std::size_t inner_sims, const RngStream& rng, unsigned threads = 0);

inline constexpr std::size_t kMinOuterReps = 50;

}  // namespace mroc
