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

#include <algorithm>
#include <cmath>
#include <vector>

#include <gtest/gtest.h>

#include "mroc/caltest.hpp"
#include "mroc/roc.hpp"
#include "mroc/simstudy.hpp"

namespace mroc {
namespace {

ValidationSample sample_of(const std::vector<int>& y, const std::vector<double>& p) {
  return make_sample(std::span<const int>(y), std::span<const double>(p));
}

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorCode::kNumericFailure;
}

double mean_of(std::span<const double> v) {
  double s = 0;
  for (double x : v) s += x;
  return s / static_cast<double>(v.size());
}

double event_rate(const ValidationSample& s) {
  return static_cast<double>(s.cases()) / static_cast<double>(s.size());
}

TEST(Scenario, Validation) {
  EXPECT_EQ(code_of([] { Scenario::sign_power(0.0, 0.0, 100).validate(); }),
            ErrorCode::kInvalidScenario);
  EXPECT_EQ(code_of([] { Scenario::sign_power(0.0, -1.0, 100).validate(); }),
            ErrorCode::kInvalidScenario);
  EXPECT_EQ(code_of([] { Scenario::logit_linear(0.0, 1.0, 9).validate(); }),
            ErrorCode::kInvalidScenario);
  Scenario bad_sd = Scenario::logit_linear(0.0, 1.0, 100);
  bad_sd.predictor_sd = 0.0;
  EXPECT_EQ(code_of([&] { bad_sd.validate(); }), ErrorCode::kInvalidScenario);
  EXPECT_NO_THROW(Scenario::logit_linear(0.5, -2.0, 10).validate());
}

TEST(Scenario, NamesRoundTrip) {
  for (auto f : {ScenarioFamily::kLogitLinear, ScenarioFamily::kSignPower,
                 ScenarioFamily::kSuppLogitLinear, ScenarioFamily::kCaseMixPreset}) {
    EXPECT_EQ(parse_family(to_string(f)), f);
  }
  for (auto p : {CaseMixPanel::kA, CaseMixPanel::kB, CaseMixPanel::kC, CaseMixPanel::kD}) {
    EXPECT_EQ(parse_panel(to_string(p)), p);
  }
  EXPECT_EQ(code_of([] { parse_family("cubic"); }), ErrorCode::kInvalidScenario);
}

TEST(Scenario, CalibratedCells) {
  EXPECT_TRUE(Scenario::logit_linear(0, 1, 100).is_calibrated());
  EXPECT_TRUE(Scenario::sign_power(0, 1, 100).is_calibrated());
  EXPECT_TRUE(Scenario::supp_logit_linear(0, 1, 100).is_calibrated());
  EXPECT_TRUE(Scenario::case_mix(CaseMixPanel::kB, 100).is_calibrated());
  EXPECT_FALSE(Scenario::case_mix(CaseMixPanel::kC, 100).is_calibrated());
  EXPECT_FALSE(Scenario::sign_power(0, 2, 100).is_calibrated());
  EXPECT_FALSE(Scenario::logit_linear(0.25, 1, 100).is_calibrated());
}

TEST(Scenario, CalibrationCurveInvertsTheMap) {
  const std::vector<Scenario> scenarios = {
      Scenario::logit_linear(0.5, 2.0, 100),     Scenario::logit_linear(-0.25, 0.5, 100),
      Scenario::sign_power(0.25, 0.5, 100),      Scenario::sign_power(0.0, 1.5, 100),
      Scenario::supp_logit_linear(0.5, 0.75, 100), Scenario::case_mix(CaseMixPanel::kD, 100)};
  for (const auto& sc : scenarios) {
    for (double x = -3.0; x <= 3.0; x += 0.37) {
      const double z = logistic(sc.predicted_logit(x));
      EXPECT_NEAR(sc.true_risk_given_predicted(z), logistic(sc.true_slope() * x), 1e-9)
          << sc.label() << " x=" << x;
    }
  }
}

TEST(GenerateDataset, IdentityMapsAreCalibrated) {
  for (const Scenario& sc : {Scenario::logit_linear(0, 1, 500), Scenario::sign_power(0, 1, 500)}) {
    RngStream rng(12);
    std::vector<double> truth;
    const auto s = generate_dataset(sc, rng, &truth);
    ASSERT_EQ(truth.size(), s.size());
    for (std::size_t i = 0; i < s.size(); ++i) EXPECT_NEAR(s.risks()[i], truth[i], 1e-15);
  }
}

TEST(GenerateDataset, SignPowerZeroPredictorIsOdd) {
  const Scenario sc = Scenario::sign_power(0.0, 2.0, 100);
  EXPECT_EQ(sc.predicted_logit(0.0), 0.0);
  for (double x : {0.3, 1.0, 2.5}) EXPECT_DOUBLE_EQ(sc.predicted_logit(-x), -sc.predicted_logit(x));
}

TEST(GenerateDataset, DeterministicPerStream) {
  const Scenario sc = Scenario::sign_power(0.25, 0.75, 300);
  RngStream a(5, 6), b(5, 6);
  const auto s1 = generate_dataset(sc, a);
  const auto s2 = generate_dataset(sc, b);
  EXPECT_TRUE(std::equal(s1.risks().begin(), s1.risks().end(), s2.risks().begin()));
  EXPECT_TRUE(std::equal(s1.outcomes().begin(), s1.outcomes().end(), s2.outcomes().begin()));
}

TEST(GenerateDataset, SupplementaryPrevalence) {
  RngStream rng(155);
  const auto s = generate_dataset(Scenario::supp_logit_linear(0, 1, 1000000), rng);
  EXPECT_NEAR(event_rate(s), 0.155, 0.002);
}

TEST(GenerateDataset, SignPowerPreservesMeanRisk) {
  for (double b : {0.5, 0.75, 1.5, 2.0}) {
    const Scenario sc = Scenario::sign_power(0.0, b, 100);
    RngStream rng(77);
    const int n = 10000000;
    double mean_pred = 0, mean_true = 0;
    for (int i = 0; i < n; ++i) {
      const double x = rng.normal();
      mean_pred += logistic(sc.predicted_logit(x));
      mean_true += logistic(x);
    }
    EXPECT_NEAR(mean_pred / n, mean_true / n, 0.002) << "b=" << b;
  }
}

TEST(GenerateDataset, SignPowerKeepsTheRocAcrossSlopes) {
  double reference = -1.0;
  std::vector<std::uint8_t> outcomes;
  for (double b : {0.5, 0.75, 1.0, 1.5, 2.0}) {
    RngStream rng(2020);
    const auto s = generate_dataset(Scenario::sign_power(0.0, b, 5000), rng);
    const double c = auc_concordance(s);
    if (reference < 0) {
      reference = c;
      outcomes.assign(s.outcomes().begin(), s.outcomes().end());
    }
    EXPECT_TRUE(std::equal(outcomes.begin(), outcomes.end(), s.outcomes().begin()));
    EXPECT_EQ(c, reference) << "b=" << b;
  }
}

// Population c-statistic of a model ranking by X when X ~ N(0, sd^2) and
// P(Y = 1 | X) = logistic(slope * X), by quadrature over the predictor density.
double population_c_statistic(double sd, double slope) {
  const int grid = 40001;
  const double lo = -10.0 * sd, step = 20.0 * sd / (grid - 1);
  std::vector<double> w1(grid), w0(grid);
  double t1 = 0, t0 = 0;
  for (int i = 0; i < grid; ++i) {
    const double x = lo + step * i;
    const double density = std::exp(-0.5 * x * x / (sd * sd));
    const double p = 1.0 / (1.0 + std::exp(-slope * x));
    w1[i] = density * p;
    w0[i] = density * (1.0 - p);
    t1 += w1[i];
    t0 += w0[i];
  }
  double below = 0, c = 0;
  for (int i = 0; i < grid; ++i) {
    c += w1[i] / t1 * (below + 0.5 * w0[i] / t0);
    below += w0[i] / t0;
  }
  return c;
}

TEST(CaseMixPreset, CStatisticsMatchPopulationValues) {
  struct Want {
    CaseMixPanel panel;
    double sd, slope;
  };
  for (const Want& w : {Want{CaseMixPanel::kA, 1.0, 1.0}, Want{CaseMixPanel::kB, 0.5, 1.0},
                        Want{CaseMixPanel::kC, 1.0, 0.5}, Want{CaseMixPanel::kD, 0.5, 0.5}}) {
    RngStream rng(1000 + static_cast<int>(w.panel));
    const auto s = case_mix_preset(w.panel, 1000000, rng);
    const double gap = max_vertical_gap(empirical_roc(s), model_based_roc(s.risks()));
    EXPECT_NEAR(auc_concordance(s), population_c_statistic(w.sd, w.slope), 0.003)
        << to_string(w.panel);
    if (w.panel == CaseMixPanel::kA) EXPECT_NEAR(auc_concordance(s), 0.740, 0.005);
    if (w.panel == CaseMixPanel::kB) EXPECT_LT(gap, 0.02);
    if (w.panel == CaseMixPanel::kD) EXPECT_GT(gap, 0.03);
  }
}

TEST(FitLogistic, ConsistentOnCalibratedData) {
  RngStream rng(100000);
  const auto s = generate_dataset(Scenario::logit_linear(0, 1, 100000), rng);
  const LogisticFit fit = fit_logistic_2param(s);
  EXPECT_NEAR(fit.alpha, 0.0, 0.05);
  EXPECT_NEAR(fit.beta, 1.0, 0.05);
  EXPECT_GE(fit.loglik, calibrated_loglik(s));
}

TEST(FitLogistic, RecoversSlopeOfHalfShrunkModel) {
  RngStream rng(100001);
  const auto s = generate_dataset(Scenario::logit_linear(0, 0.5, 100000), rng);
  EXPECT_NEAR(fit_logistic_2param(s).beta, 2.0, 0.1);
}

TEST(FitLogistic, Errors) {
  EXPECT_EQ(code_of([] { fit_logistic_2param(sample_of({0, 0, 1, 1}, {0.1, 0.2, 0.8, 0.9})); }),
            ErrorCode::kSeparationDetected);
  EXPECT_EQ(code_of([] { fit_logistic_2param(sample_of({0, 1, 1}, {0.0, 0.5, 0.7})); }),
            ErrorCode::kInfiniteLogit);
  EXPECT_EQ(code_of([] { fit_logistic_2param(sample_of({1, 1, 1}, {0.3, 0.5, 0.7})); }),
            ErrorCode::kDegenerateSample);
}

TEST(LikelihoodRatio, ExactFitGivesUnitPValue) {
  // Observed rates equal predicted risks in both groups, so (0, 1) is the MLE.
  const auto s = sample_of({1, 0, 0, 0, 1, 1, 1, 0}, {0.25, 0.25, 0.25, 0.25, 0.75, 0.75, 0.75, 0.75});
  const auto r = lrt_calibration(s);
  EXPECT_NEAR(r.statistic, 0.0, 1e-12);
  EXPECT_NEAR(r.p_value, 1.0, 1e-10);
  EXPECT_NEAR(r.fit.alpha, 0.0, 1e-8);
  EXPECT_NEAR(r.fit.beta, 1.0, 1e-8);
}

TEST(LikelihoodRatio, NominalSize) {
  const RngStream root(31337);
  int rejections = 0;
  const int reps = 500;
  for (int rep = 0; rep < reps; ++rep) {
    RngStream rng = root.substream(static_cast<std::uint64_t>(rep));
    const auto s = generate_dataset(Scenario::logit_linear(0, 1, 1000), rng);
    rejections += lrt_calibration(s).p_value < 0.05;
  }
  const double rate = static_cast<double>(rejections) / reps;
  EXPECT_GE(rate, 0.03);
  EXPECT_LE(rate, 0.07);
}

TEST(PowerStudy, DeterministicAndPermutationInvariant) {
  const std::vector<Scenario> grid = {Scenario::logit_linear(0.5, 1.0, 100),
                                      Scenario::sign_power(0.0, 2.0, 120),
                                      Scenario::supp_logit_linear(0.25, 1.0, 150)};
  const std::vector<Scenario> reversed(grid.rbegin(), grid.rend());
  const auto a = run_power_study(grid, 50, 100, RngStream(8));
  const auto b = run_power_study(grid, 50, 100, RngStream(8));
  const auto c = run_power_study(reversed, 50, 100, RngStream(8));
  ASSERT_EQ(a.rows.size(), 3u);
  for (std::size_t i = 0; i < grid.size(); ++i) {
    EXPECT_EQ(a.rows[i].tests, b.rows[i].tests);
    EXPECT_EQ(a.rows[i].tests, c.rows[grid.size() - 1 - i].tests);
    EXPECT_EQ(a.rows[i].outer_reps, 50u);
    EXPECT_EQ(a.rows[i].inner_sims, 100u);
    for (const auto& t : a.rows[i].tests) {
      EXPECT_EQ(t.evaluated + t.failures, 50u);
      EXPECT_GE(t.rate(), 0.0);
      EXPECT_LE(t.rate(), 1.0);
    }
  }
}

TEST(PowerStudy, ArgumentChecks) {
  const std::vector<Scenario> grid = {Scenario::logit_linear(0, 1, 100)};
  EXPECT_EQ(code_of([&] { run_power_study(grid, kMinOuterReps - 1, 100, RngStream(1)); }),
            ErrorCode::kInvalidSims);
  EXPECT_EQ(code_of([&] { run_power_study(grid, 50, 99, RngStream(1)); }),
            ErrorCode::kInvalidSims);
  const std::vector<Scenario> bad = {Scenario::sign_power(0, 0, 100)};
  EXPECT_EQ(code_of([&] { run_power_study(bad, 50, 100, RngStream(1)); }),
            ErrorCode::kInvalidScenario);
}

}  // namespace
}  // namespace mroc
