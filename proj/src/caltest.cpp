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

#include "mroc/caltest.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include "parallel.hpp"

namespace mroc {
namespace {

// Redraw limit for null replicates that come out with a single outcome class.
constexpr int kMaxRedraws = 1000;

NullDistribution simulate_null_impl(const CalibrationStatistics& stats, std::size_t n_sims,
                                    const RngStream& rng, unsigned threads) {
  NullDistribution null;
  null.a_values.assign(n_sims, 0.0);
  null.b_values.assign(n_sims, 0.0);
  null.u_values.assign(n_sims, 0.0);
  null.n_sims = n_sims;
  null.seed = rng.seed();
  null.stream_id = rng.stream_id();

  const auto risks = stats.risks();
  struct State {
    std::vector<std::uint8_t> outcomes;
    CalibrationStatistics::Workspace ws;
  };
  detail::parallel_for(
      n_sims, threads, [&] { return State{std::vector<std::uint8_t>(risks.size()), {}}; },
      [&](State& st, std::size_t i) {
        RngStream stream = rng.substream(i);
        for (int attempt = 0;; ++attempt) {
          bernoulli_draw_into(risks, stream, st.outcomes);
          const auto cases = std::count(st.outcomes.begin(), st.outcomes.end(), 1);
          if (cases > 0 && static_cast<std::size_t>(cases) < risks.size()) break;
          if (attempt + 1 == kMaxRedraws) {
            throw Error(ErrorCode::kNumericFailure,
                        "null replicate " + std::to_string(i) +
                            " kept drawing a single outcome class; risks are too extreme");
          }
        }
        null.a_values[i] = stats.mean_calibration(st.outcomes);
        null.b_values[i] = stats.roc_equality(st.outcomes, st.ws);
      });
  return null;
}

}  // namespace

CalibrationStatistics::CalibrationStatistics(std::span<const double> risks)
    : risks_(risks.begin(), risks.end()), groups_(risks) {
  if (risks_.empty()) throw Error(ErrorCode::kEmptySample, "no predicted risks");
  check_risks(risks_);
  risk_sum_ = std::accumulate(risks_.begin(), risks_.end(), 0.0);
  const WeightedCdfPair cdfs = model_based_cdfs(groups_, risks_);
  model_curve_ = curve_from_cdfs(cdfs, CurveKind::kModelBased);
  step_curve_from_cdfs(cdfs, model_steps_);
}

double CalibrationStatistics::mean_calibration(
    std::span<const std::uint8_t> outcomes) const noexcept {
  std::size_t cases = 0;
  for (auto y : outcomes) cases += y;
  return std::abs(static_cast<double>(cases) - risk_sum_) / static_cast<double>(risks_.size());
}

double CalibrationStatistics::roc_equality(std::span<const std::uint8_t> outcomes,
                                           Workspace& ws) const {
  empirical_cdfs_into(groups_, outcomes, ws.cdfs);
  step_curve_from_cdfs(ws.cdfs, ws.steps);
  return integrated_abs_difference(ws.steps, model_steps_);
}

double mean_calibration_stat(const ValidationSample& sample) {
  const auto r = sample.risks();
  const double risk_sum = std::accumulate(r.begin(), r.end(), 0.0);
  return std::abs(static_cast<double>(sample.cases()) - risk_sum) /
         static_cast<double>(sample.size());
}

double roc_equality_stat(const ValidationSample& sample) {
  if (!sample.has_both_classes()) {
    throw Error(ErrorCode::kDegenerateSample,
                "ROC equality needs at least one case and one control");
  }
  CalibrationStatistics stats(sample.risks());
  CalibrationStatistics::Workspace ws;
  return stats.roc_equality(sample.outcomes(), ws);
}

NullDistribution simulate_null(std::span<const double> risks, std::size_t n_sims,
                               const RngStream& rng, unsigned threads) {
  if (n_sims < 2) throw Error(ErrorCode::kInvalidSims, "null simulation needs n_sims >= 2");
  return simulate_null_impl(CalibrationStatistics(risks), n_sims, rng, threads);
}

double mc_p_value_sorted(double observed, std::span<const double> sorted_null) {
  const auto below = std::lower_bound(sorted_null.begin(), sorted_null.end(), observed);
  const auto at_or_above = static_cast<std::size_t>(sorted_null.end() - below);
  return static_cast<double>(std::max<std::size_t>(at_or_above, 1)) /
         static_cast<double>(sorted_null.size());
}

double mc_p_value(double observed, std::span<const double> null_values) {
  if (null_values.size() < 2) {
    throw Error(ErrorCode::kInvalidSims, "Monte Carlo p-value needs at least 2 null values");
  }
  std::size_t at_or_above = 0;
  for (double v : null_values) at_or_above += v >= observed ? 1 : 0;
  return static_cast<double>(std::max<std::size_t>(at_or_above, 1)) /
         static_cast<double>(null_values.size());
}

BrownParameters brown_parameters(std::span<const double> u_values) {
  const std::size_t n = u_values.size();
  if (n < 2) throw Error(ErrorCode::kInvalidSims, "Brown moments need at least 2 values");
  const double mean = std::accumulate(u_values.begin(), u_values.end(), 0.0) / n;
  double ss = 0.0;
  for (double u : u_values) ss += (u - mean) * (u - mean);
  const double var = ss / static_cast<double>(n - 1);
  if (!(var > 0.0) || !(mean > 0.0)) {
    throw Error(ErrorCode::kNumericFailure,
                "simulated combined statistic has zero variance; Brown's moments are undefined");
  }
  return {var / (2.0 * mean), 2.0 * mean * mean / var};
}

double brown_p_value(double u, const BrownParameters& params) {
  const double p = chi_square_sf(u / params.c, params.k);
  return std::max(p, std::numeric_limits<double>::epsilon());
}

CalibrationTestResult unified_test(const ValidationSample& sample, std::size_t n_sims,
                                   const RngStream& rng, unsigned threads,
                                   NullDistribution* null_out) {
  if (n_sims < kMinUnifiedSims) {
    throw Error(ErrorCode::kInvalidSims, "unified test needs n_sims >= " +
                                             std::to_string(kMinUnifiedSims) + ", got " +
                                             std::to_string(n_sims));
  }
  if (!sample.has_both_classes()) {
    throw Error(ErrorCode::kDegenerateSample,
                "calibration test needs at least one case and one control");
  }
  const CalibrationStatistics stats(sample.risks());
  CalibrationStatistics::Workspace ws;

  CalibrationTestResult result;
  result.n_sims = n_sims;
  result.seed = rng.seed();
  result.stat_a = stats.mean_calibration(sample.outcomes());
  result.stat_b = stats.roc_equality(sample.outcomes(), ws);

  NullDistribution null = simulate_null_impl(stats, n_sims, rng, threads);

  std::vector<double> sorted_a = null.a_values;
  std::vector<double> sorted_b = null.b_values;
  std::sort(sorted_a.begin(), sorted_a.end());
  std::sort(sorted_b.begin(), sorted_b.end());

  result.p_a = mc_p_value_sorted(result.stat_a, sorted_a);
  result.p_b = mc_p_value_sorted(result.stat_b, sorted_b);
  result.stat_u = -2.0 * (std::log(result.p_a) + std::log(result.p_b));

  for (std::size_t i = 0; i < n_sims; ++i) {
    const double pa = mc_p_value_sorted(null.a_values[i], sorted_a);
    const double pb = mc_p_value_sorted(null.b_values[i], sorted_b);
    null.u_values[i] = -2.0 * (std::log(pa) + std::log(pb));
  }
  const BrownParameters brown = brown_parameters(null.u_values);
  result.brown_c = brown.c;
  result.brown_k = brown.k;
  result.p_unified = brown_p_value(result.stat_u, brown);

  if (null_out) *null_out = std::move(null);
  return result;
}

}  // namespace mroc
