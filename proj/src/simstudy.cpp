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

#include "mroc/simstudy.hpp"

#include <bit>
#include <cmath>
#include <limits>
#include <sstream>

#include "parallel.hpp"

namespace mroc {

double logistic(double x) noexcept {
  if (x >= 0.0) return 1.0 / (1.0 + std::exp(-x));
  const double e = std::exp(x);
  return e / (1.0 + e);
}

double logit(double p) noexcept { return std::log(p) - std::log1p(-p); }

std::string_view to_string(ScenarioFamily family) {
  switch (family) {
    case ScenarioFamily::kLogitLinear: return "logit-linear";
    case ScenarioFamily::kSignPower: return "sign-power";
    case ScenarioFamily::kSuppLogitLinear: return "supp-logit-linear";
    case ScenarioFamily::kCaseMixPreset: return "case-mix";
  }
  return "unknown";
}

ScenarioFamily parse_family(std::string_view name) {
  for (auto f : {ScenarioFamily::kLogitLinear, ScenarioFamily::kSignPower,
                 ScenarioFamily::kSuppLogitLinear, ScenarioFamily::kCaseMixPreset}) {
    if (name == to_string(f)) return f;
  }
  throw Error(ErrorCode::kInvalidScenario,
              "unknown scenario family '" + std::string(name) +
                  "' (expected logit-linear, sign-power, supp-logit-linear or case-mix)");
}

std::string_view to_string(CaseMixPanel panel) {
  switch (panel) {
    case CaseMixPanel::kA: return "A";
    case CaseMixPanel::kB: return "B";
    case CaseMixPanel::kC: return "C";
    case CaseMixPanel::kD: return "D";
  }
  return "?";
}

CaseMixPanel parse_panel(std::string_view name) {
  for (auto p : {CaseMixPanel::kA, CaseMixPanel::kB, CaseMixPanel::kC, CaseMixPanel::kD}) {
    if (name == to_string(p)) return p;
  }
  throw Error(ErrorCode::kInvalidScenario,
              "unknown case-mix panel '" + std::string(name) + "' (expected A, B, C or D)");
}

std::string_view to_string(TestKind kind) {
  switch (kind) {
    case TestKind::kMeanCalibration: return "mean_calibration";
    case TestKind::kRocEquality: return "roc_equality";
    case TestKind::kUnified: return "unified";
    case TestKind::kLikelihoodRatio: return "likelihood_ratio";
  }
  return "unknown";
}

Scenario Scenario::logit_linear(double a, double b, std::size_t n) {
  return Scenario{ScenarioFamily::kLogitLinear, a, b, n, 0.0, 1.0, CaseMixPanel::kA};
}

Scenario Scenario::sign_power(double a, double b, std::size_t n) {
  return Scenario{ScenarioFamily::kSignPower, a, b, n, 0.0, 1.0, CaseMixPanel::kA};
}

Scenario Scenario::supp_logit_linear(double a, double b, std::size_t n) {
  return Scenario{ScenarioFamily::kSuppLogitLinear, a, b, n, -2.0, 1.0, CaseMixPanel::kA};
}

Scenario Scenario::case_mix(CaseMixPanel panel, std::size_t n) {
  const bool narrow = panel == CaseMixPanel::kB || panel == CaseMixPanel::kD;
  return Scenario{ScenarioFamily::kCaseMixPreset, 0.0, 1.0, n, 0.0, narrow ? 0.5 : 1.0, panel};
}

void Scenario::validate() const {
  if (n < 10) {
    throw Error(ErrorCode::kInvalidScenario, "scenario needs n >= 10, got " + std::to_string(n));
  }
  if (!std::isfinite(a) || !std::isfinite(b) || !std::isfinite(predictor_mean)) {
    throw Error(ErrorCode::kInvalidScenario, "scenario parameters must be finite");
  }
  if (!(predictor_sd > 0.0) || !std::isfinite(predictor_sd)) {
    throw Error(ErrorCode::kInvalidScenario, "predictor sd must be positive");
  }
  if (family == ScenarioFamily::kSignPower && !(b > 0.0)) {
    throw Error(ErrorCode::kInvalidScenario,
                "sign-power scenario needs b > 0 (the exponent is 1/b), got b=" +
                    std::to_string(b));
  }
}

double Scenario::true_slope() const noexcept {
  if (family == ScenarioFamily::kCaseMixPreset &&
      (panel == CaseMixPanel::kC || panel == CaseMixPanel::kD)) {
    return 0.5;
  }
  return 1.0;
}

double Scenario::predicted_logit(double x) const {
  switch (family) {
    case ScenarioFamily::kLogitLinear:
    case ScenarioFamily::kSuppLogitLinear:
      return a + b * x;
    case ScenarioFamily::kSignPower: {
      const double sign = x > 0.0 ? 1.0 : (x < 0.0 ? -1.0 : 0.0);
      return a + b * sign * std::pow(std::abs(x), 1.0 / b);
    }
    case ScenarioFamily::kCaseMixPreset:
      return x;
  }
  return x;
}

double Scenario::true_risk_given_predicted(double z) const {
  const double w = logit(z) - (family == ScenarioFamily::kCaseMixPreset ? 0.0 : a);
  double x = 0.0;
  switch (family) {
    case ScenarioFamily::kLogitLinear:
    case ScenarioFamily::kSuppLogitLinear:
      if (b == 0.0) return std::numeric_limits<double>::quiet_NaN();
      x = w / b;
      break;
    case ScenarioFamily::kSignPower: {
      const double sign = w > 0.0 ? 1.0 : (w < 0.0 ? -1.0 : 0.0);
      x = sign * std::pow(std::abs(w) / b, b);
      break;
    }
    case ScenarioFamily::kCaseMixPreset:
      x = w;
      break;
  }
  return logistic(true_slope() * x);
}

bool Scenario::is_calibrated() const noexcept {
  if (family == ScenarioFamily::kCaseMixPreset) return true_slope() == 1.0;
  return a == 0.0 && b == 1.0;
}

std::string Scenario::label() const {
  std::ostringstream os;
  os << to_string(family);
  if (family == ScenarioFamily::kCaseMixPreset) {
    os << " panel=" << to_string(panel);
  } else {
    os << " a=" << a << " b=" << b;
  }
  os << " n=" << n;
  return os.str();
}

ValidationSample generate_dataset(const Scenario& scenario, RngStream& rng,
                                  std::vector<double>* true_risks) {
  scenario.validate();
  const std::size_t n = scenario.n;
  std::vector<std::uint8_t> outcomes(n);
  std::vector<double> predicted(n);
  if (true_risks) true_risks->resize(n);
  const double slope = scenario.true_slope();
  for (std::size_t i = 0; i < n; ++i) {
    const double x = scenario.predictor_mean + scenario.predictor_sd * rng.normal();
    const double p = logistic(slope * x);
    outcomes[i] = rng.uniform() < p ? 1 : 0;
    predicted[i] = logistic(scenario.predicted_logit(x));
    if (true_risks) (*true_risks)[i] = p;
  }
  return make_sample(std::move(outcomes), std::move(predicted));
}

ValidationSample case_mix_preset(CaseMixPanel panel, std::size_t n, RngStream& rng) {
  return generate_dataset(Scenario::case_mix(panel, n), rng);
}

std::uint64_t scenario_key(const Scenario& s) {
  std::uint64_t h = mix64(static_cast<std::uint64_t>(s.family) + 1);
  for (std::uint64_t word :
       {std::bit_cast<std::uint64_t>(s.a), std::bit_cast<std::uint64_t>(s.b),
        static_cast<std::uint64_t>(s.n), std::bit_cast<std::uint64_t>(s.predictor_mean),
        std::bit_cast<std::uint64_t>(s.predictor_sd), static_cast<std::uint64_t>(s.panel)}) {
    h = mix64(h ^ word);
  }
  return h;
}

PowerTable run_power_study(std::span<const Scenario> grid, std::size_t outer_reps,
                           std::size_t inner_sims, const RngStream& rng, unsigned threads) {
  if (outer_reps < kMinOuterReps) {
    throw Error(ErrorCode::kInvalidSims, "power study needs outer_reps >= " +
                                             std::to_string(kMinOuterReps));
  }
  if (inner_sims < kMinUnifiedSims) {
    throw Error(ErrorCode::kInvalidSims, "power study needs inner_sims >= " +
                                             std::to_string(kMinUnifiedSims));
  }
  for (const auto& s : grid) s.validate();

  // Per task: -1 failed, 0 accepted, 1 rejected; one slot per test.
  using Outcome = std::array<signed char, kTestKinds>;
  const std::size_t tasks = grid.size() * outer_reps;
  std::vector<Outcome> outcomes(tasks);

  detail::parallel_for(
      tasks, threads, [] { return 0; },
      [&](int&, std::size_t task) {
        const Scenario& scenario = grid[task / outer_reps];
        const std::size_t rep = task % outer_reps;
        const RngStream base =
            RngStream(rng.seed(), mix64(rng.stream_id() ^ scenario_key(scenario))).substream(rep);
        RngStream data_stream = base.substream(0);
        const RngStream test_stream = base.substream(1);

        Outcome& out = outcomes[task];
        out.fill(-1);
        const ValidationSample sample = generate_dataset(scenario, data_stream);
        try {
          const auto r = unified_test(sample, inner_sims, test_stream, 1);
          out[0] = r.p_a < kPowerLevel;
          out[1] = r.p_b < kPowerLevel;
          out[2] = r.p_unified < kPowerLevel;
        } catch (const Error&) {
        }
        try {
          out[3] = lrt_calibration(sample).p_value < kPowerLevel;
        } catch (const Error&) {
        }
      });

  PowerTable table;
  table.seed = rng.seed();
  table.level = kPowerLevel;
  table.rows.reserve(grid.size());
  for (std::size_t s = 0; s < grid.size(); ++s) {
    PowerRow row;
    row.scenario = grid[s];
    row.outer_reps = outer_reps;
    row.inner_sims = inner_sims;
    for (std::size_t rep = 0; rep < outer_reps; ++rep) {
      const Outcome& out = outcomes[s * outer_reps + rep];
      for (std::size_t t = 0; t < kTestKinds; ++t) {
        if (out[t] < 0) {
          ++row.tests[t].failures;
        } else {
          ++row.tests[t].evaluated;
          row.tests[t].rejections += static_cast<std::size_t>(out[t]);
        }
      }
    }
    table.rows.push_back(row);
  }
  return table;
}

}  // namespace mroc
