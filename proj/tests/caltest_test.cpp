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
#include <cstdint>
#include <limits>
#include <numbers>
#include <numeric>
#include <vector>

#include <boost/math/special_functions/gamma.hpp>
#include <gtest/gtest.h>

#include "mroc/caltest.hpp"
#include "mroc/rng.hpp"
#include "mroc/roc.hpp"
#include "mroc/simstudy.hpp"
#include "oracles.hpp"

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

TEST(MeanCalibrationStat, Examples) {
  EXPECT_NEAR(mean_calibration_stat(sample_of({1, 0, 1, 0}, {0.9, 0.1, 0.8, 0.2})), 0.0, 1e-15);
  EXPECT_DOUBLE_EQ(mean_calibration_stat(sample_of({1, 1}, {0.5, 0.5})), 0.5);
  EXPECT_EQ(mean_calibration_stat(sample_of({1, 0, 0, 1}, {1, 0, 0, 1})), 0.0);
}

TEST(MeanCalibrationStat, PermutationInvariant) {
  RngStream rng(5);
  std::vector<int> y(40);
  std::vector<double> p(40);
  for (std::size_t i = 0; i < p.size(); ++i) {
    p[i] = rng.uniform();
    y[i] = rng.uniform() < 0.4 ? 1 : 0;
  }
  y[0] = 1;
  y[1] = 0;
  const double a = mean_calibration_stat(sample_of(y, p));
  const double b = roc_equality_stat(sample_of(y, p));
  for (int rep = 0; rep < 20; ++rep) {
    for (std::size_t i = p.size() - 1; i > 0; --i) {
      const std::size_t j = rng.next_u32() % (i + 1);
      std::swap(p[i], p[j]);
      std::swap(y[i], y[j]);
    }
    EXPECT_NEAR(mean_calibration_stat(sample_of(y, p)), a, 1e-14);
    EXPECT_EQ(roc_equality_stat(sample_of(y, p)), b);
  }
}

TEST(RocEqualityStat, CoincidingCurves) {
  EXPECT_EQ(roc_equality_stat(sample_of({1, 0, 1, 0}, {0.5, 0.5, 0.5, 0.5})), 0.0);
}

TEST(RocEqualityStat, FourRowOracle) {
  const std::vector<int> y{1, 0, 1, 0};
  const std::vector<double> p{0.9, 0.1, 0.8, 0.2};
  const double grid = oracle::riemann_abs_difference(oracle::empirical_points(y, p),
                                                     oracle::model_points(p));
  EXPECT_NEAR(roc_equality_stat(sample_of(y, p)), grid, 2e-6);
}

TEST(RocEqualityStat, RandomSamplesMatchOracleAndStayInUnitInterval) {
  RngStream rng(404);
  for (int rep = 0; rep < 40; ++rep) {
    const std::size_t n = 2 + rng.next_u32() % 49;
    std::vector<int> y(n);
    std::vector<double> p(n);
    for (std::size_t i = 0; i < n; ++i) {
      p[i] = rng.uniform() < 0.3 ? std::floor(rng.uniform() * 5.0) / 5.0 : rng.uniform();
      y[i] = rng.uniform() < 0.5 ? 1 : 0;
    }
    y[0] = 1;
    y[1] = 0;
    p[0] = 0.5;
    const double b = roc_equality_stat(sample_of(y, p));
    ASSERT_GE(b, 0.0);
    ASSERT_LE(b, 1.0);
    ASSERT_NEAR(b, oracle::riemann_abs_difference(oracle::empirical_points(y, p),
                                                  oracle::model_points(p)),
                2e-6);
  }
}

TEST(RocEqualityStat, Errors) {
  EXPECT_EQ(code_of([] { roc_equality_stat(sample_of({1, 1}, {0.3, 0.4})); }),
            ErrorCode::kDegenerateSample);
  EXPECT_EQ(code_of([] { roc_equality_stat(sample_of({1, 0}, {0.0, 0.0})); }),
            ErrorCode::kAllZeroRisks);
  EXPECT_EQ(code_of([] { roc_equality_stat(sample_of({1, 0}, {1.0, 1.0})); }),
            ErrorCode::kAllOneRisks);
}

TEST(McPValue, Examples) {
  std::vector<double> null(1000);
  for (std::size_t i = 0; i < null.size(); ++i) null[i] = 0.001 * (static_cast<double>(i) + 1);
  EXPECT_DOUBLE_EQ(mc_p_value(5.0, null), 0.001);
  EXPECT_DOUBLE_EQ(mc_p_value(0.0, null), 1.0);

  std::vector<double> odd(999);
  for (std::size_t i = 0; i < odd.size(); ++i) odd[i] = static_cast<double>(i);
  EXPECT_DOUBLE_EQ(mc_p_value(499.0, odd), 500.0 / 999.0);
}

TEST(McPValue, RangeAndMonotonicity) {
  RngStream rng(3);
  std::vector<double> null(257);
  for (auto& v : null) v = std::floor(rng.uniform() * 20.0);
  std::vector<double> sorted = null;
  std::sort(sorted.begin(), sorted.end());
  double prev = 2.0;
  for (double obs = -1.0; obs <= 21.0; obs += 0.25) {
    const double p = mc_p_value(obs, null);
    EXPECT_GE(p, 1.0 / 257.0);
    EXPECT_LE(p, 1.0);
    EXPECT_LE(p, prev);
    EXPECT_EQ(p, mc_p_value_sorted(obs, sorted));
    prev = p;
  }
}

TEST(ChiSquareCdf, Examples) {
  EXPECT_EQ(chi_square_cdf(0.0, 3.7), 0.0);
  EXPECT_NEAR(chi_square_cdf(2.0 * std::log(2.0), 2.0), 0.5, 1e-14);
  EXPECT_NEAR(chi_square_cdf(9.4877, 4.0), 0.95, 1e-5);
}

TEST(ChiSquareCdf, DomainErrors) {
  EXPECT_EQ(code_of([] { chi_square_cdf(-0.1, 2.0); }), ErrorCode::kDomainError);
  EXPECT_EQ(code_of([] { chi_square_cdf(1.0, 0.0); }), ErrorCode::kDomainError);
  EXPECT_EQ(code_of([] { chi_square_cdf(1.0, -2.0); }), ErrorCode::kDomainError);
}

TEST(ChiSquareCdf, MatchesReferenceIncompleteGamma) {
  double worst = 0.0;
  for (double k = 0.5; k <= 50.0; k += 0.37) {
    for (double x = 0.0; x <= 200.0; x += 0.53) {
      const double want = boost::math::gamma_p(k / 2.0, x / 2.0);
      const double got = chi_square_cdf(x, k);
      if (want > 0.0) worst = std::max(worst, std::abs(got - want) / want);
      const double want_q = boost::math::gamma_q(k / 2.0, x / 2.0);
      if (want_q > 1e-300) {
        ASSERT_LE(std::abs(chi_square_sf(x, k) - want_q) / want_q, 1e-10) << k << " " << x;
      }
    }
  }
  EXPECT_LE(worst, 1e-10);
}

TEST(Brown, ReducesToFisherWithUnitScaleAndFourDf) {
  for (double u : {0.1, 1.0, 4.0, 9.4877, 20.0, 60.0}) {
    const double fisher = std::exp(-u / 2.0) * (1.0 + u / 2.0);
    EXPECT_NEAR(brown_p_value(u, BrownParameters{1.0, 4.0}), fisher, 1e-13 + 1e-10 * fisher);
  }
}

TEST(Brown, MomentMatching) {
  const std::vector<double> u{1.0, 2.0, 3.0, 6.0};
  // mean 3, unbiased variance 14/3
  const BrownParameters b = brown_parameters(u);
  EXPECT_NEAR(b.c, (14.0 / 3.0) / 6.0, 1e-14);
  EXPECT_NEAR(b.k, 18.0 / (14.0 / 3.0), 1e-14);
  EXPECT_EQ(code_of([] { brown_parameters(std::vector<double>{2.0, 2.0, 2.0}); }),
            ErrorCode::kNumericFailure);
}

TEST(Brown, ClampedAtMachineEpsilon) {
  EXPECT_EQ(brown_p_value(1e4, BrownParameters{1.0, 4.0}),
            std::numeric_limits<double>::epsilon());
}

TEST(SimulateNull, DegenerateRisksGiveZeroMeanStatistic) {
  const std::vector<double> p{1, 1, 1, 0, 0, 0};
  const auto null = simulate_null(p, 50, RngStream(1));
  ASSERT_EQ(null.a_values.size(), 50u);
  for (double a : null.a_values) EXPECT_EQ(a, 0.0);
  for (double u : null.u_values) EXPECT_EQ(u, 0.0);
}

TEST(SimulateNull, DeterministicAndThreadIndependent) {
  RngStream rng(17);
  const auto s = generate_dataset(Scenario::logit_linear(0.0, 1.0, 200), rng);
  const auto a = simulate_null(s.risks(), 100, RngStream(9, 4), 1);
  const auto b = simulate_null(s.risks(), 100, RngStream(9, 4), 1);
  const auto c = simulate_null(s.risks(), 100, RngStream(9, 4), 4);
  EXPECT_EQ(a.a_values, b.a_values);
  EXPECT_EQ(a.b_values, b.b_values);
  EXPECT_EQ(a.a_values, c.a_values);
  EXPECT_EQ(a.b_values, c.b_values);
  EXPECT_EQ(a.seed, 9u);
  EXPECT_EQ(a.stream_id, 4u);
  for (std::size_t i = 0; i < a.n_sims; ++i) {
    EXPECT_GE(a.a_values[i], 0.0);
    EXPECT_GE(a.b_values[i], 0.0);
  }
}

TEST(SimulateNull, RejectsTooFewSims) {
  const std::vector<double> p{0.2, 0.7};
  EXPECT_EQ(code_of([&] { simulate_null(p, 1, RngStream(1)); }), ErrorCode::kInvalidSims);
}

TEST(SimulateNull, MeanStatisticFollowsHalfNormal) {
  RngStream rng(250);
  const auto s = generate_dataset(Scenario::logit_linear(0.0, 1.0, 250), rng);
  const auto null = simulate_null(s.risks(), 10000, RngStream(251));
  const double n = static_cast<double>(null.n_sims);
  double sum = 0, sum_sq = 0;
  for (double a : null.a_values) {
    sum += a;
    sum_sq += a * a;
  }
  const double mean = sum / n;
  const double scale = std::sqrt(sum_sq / n);  // sd of the underlying signed normal
  const double sd = std::sqrt((sum_sq - n * mean * mean) / (n - 1.0));
  EXPECT_NEAR(mean, std::sqrt(2.0 / std::numbers::pi) * scale, 3.0 * sd / std::sqrt(n));
}

TEST(UnifiedTest, ResultInvariantsAndReplicatePValues) {
  RngStream rng(31);
  const auto s = generate_dataset(Scenario::logit_linear(0.25, 1.0, 300), rng);
  NullDistribution null;
  const auto r = unified_test(s, 500, RngStream(32), 0, &null);
  EXPECT_EQ(r.n_sims, 500u);
  EXPECT_EQ(r.seed, 32u);
  EXPECT_EQ(r.stat_a, mean_calibration_stat(s));
  EXPECT_EQ(r.stat_b, roc_equality_stat(s));
  for (double p : {r.p_a, r.p_b, r.p_unified}) {
    EXPECT_GT(p, 0.0);
    EXPECT_LE(p, 1.0);
  }
  EXPECT_NEAR(r.stat_u, -2.0 * (std::log(r.p_a) + std::log(r.p_b)), 1e-10);
  EXPECT_EQ(r.p_a, mc_p_value(r.stat_a, null.a_values));
  EXPECT_EQ(r.p_b, mc_p_value(r.stat_b, null.b_values));

  for (std::size_t i = 0; i < null.n_sims; i += 37) {
    const double pa = mc_p_value(null.a_values[i], null.a_values);
    const double pb = mc_p_value(null.b_values[i], null.b_values);
    EXPECT_NEAR(null.u_values[i], -2.0 * (std::log(pa) + std::log(pb)), 1e-12);
  }
  const double mean = std::accumulate(null.u_values.begin(), null.u_values.end(), 0.0) / 500.0;
  double ss = 0;
  for (double u : null.u_values) ss += (u - mean) * (u - mean);
  const double var = ss / 499.0;
  EXPECT_NEAR(r.brown_c, var / (2.0 * mean), 1e-12);
  EXPECT_NEAR(r.brown_k, 2.0 * mean * mean / var, 1e-10);
  EXPECT_NEAR(r.p_unified,
              std::max(boost::math::gamma_q(r.brown_k / 2.0, r.stat_u / r.brown_c / 2.0),
                       std::numeric_limits<double>::epsilon()),
              1e-10);
}

TEST(UnifiedTest, BitIdenticalAcrossRunsAndThreadCounts) {
  RngStream rng(33);
  const auto s = generate_dataset(Scenario::sign_power(0.0, 2.0, 400), rng);
  const auto a = unified_test(s, 1000, RngStream(34), 1);
  const auto b = unified_test(s, 1000, RngStream(34), 3);
  EXPECT_EQ(a.stat_a, b.stat_a);
  EXPECT_EQ(a.stat_b, b.stat_b);
  EXPECT_EQ(a.p_a, b.p_a);
  EXPECT_EQ(a.p_b, b.p_b);
  EXPECT_EQ(a.brown_c, b.brown_c);
  EXPECT_EQ(a.brown_k, b.brown_k);
  EXPECT_EQ(a.p_unified, b.p_unified);
}

TEST(UnifiedTest, RequiresEnoughSims) {
  const auto s = sample_of({1, 0, 1}, {0.6, 0.3, 0.5});
  EXPECT_EQ(code_of([&] { unified_test(s, kMinUnifiedSims - 1, RngStream(1)); }),
            ErrorCode::kInvalidSims);
}

// Calibrated data at n = 250: each test's rejection rate at 0.05 lies in the
// exact binomial 99% band over 500 replicates.
TEST(UnifiedTest, NullSizeWithinBinomialBand) {
  const auto table = run_power_study(std::vector<Scenario>{Scenario::logit_linear(0, 1, 250)},
                                     500, 5000, RngStream(2500));
  const auto [lo, hi] = oracle::binomial_band(500);
  for (TestKind kind :
       {TestKind::kMeanCalibration, TestKind::kRocEquality, TestKind::kUnified}) {
    const auto& t = table.rows[0].tally(kind);
    EXPECT_EQ(t.evaluated, 500u);
    EXPECT_GE(t.rate(), lo) << to_string(kind);
    EXPECT_LE(t.rate(), hi) << to_string(kind);
  }
}

// Under calibration the per-statistic p-values are close to Uniform(0, 1).
TEST(UnifiedTest, NullPValuesApproximatelyUniform) {
  const RngStream root(4242);
  std::vector<double> pa, pb;
  for (std::uint64_t rep = 0; rep < 1000; ++rep) {
    RngStream data = root.substream(2 * rep);
    const auto s = generate_dataset(Scenario::logit_linear(0, 1, 1000), data);
    const auto r = unified_test(s, 1000, root.substream(2 * rep + 1));
    pa.push_back(r.p_a);
    pb.push_back(r.p_b);
  }
  EXPECT_LT(oracle::ks_uniform(pa), 0.05);
  EXPECT_LT(oracle::ks_uniform(pb), 0.05);
}

// Rank-preserving miscalibration with b = 1 leaves the ROC-equality test near level.
TEST(UnifiedTest, RocEqualityBlindToInterceptShift) {
  const auto table = run_power_study(std::vector<Scenario>{Scenario::sign_power(0.5, 1.0, 1000)},
                                     200, 1000, RngStream(1001));
  EXPECT_LT(table.rows[0].tally(TestKind::kRocEquality).rate(), 0.15);
  EXPECT_GT(table.rows[0].tally(TestKind::kMeanCalibration).rate(), 0.5);
}

}  // namespace
}  // namespace mroc
