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
#include <string>
#include <vector>

#include "mroc/simstudy.hpp"

namespace mroc {
namespace {

constexpr double kScoreTolerance = 1e-8;
constexpr int kMaxNewtonIterations = 100;
constexpr double kSeparationBound = 50.0;

// log(logistic(eta)) without overflow.
double log_logistic(double eta) {
  return eta >= 0.0 ? -std::log1p(std::exp(-eta)) : eta - std::log1p(std::exp(eta));
}

double loglik_at(std::span<const std::uint8_t> y, std::span<const double> x, double alpha,
                 double beta) {
  double ll = 0.0;
  for (std::size_t i = 0; i < y.size(); ++i) {
    const double eta = alpha + beta * x[i];
    ll += y[i] ? log_logistic(eta) : log_logistic(-eta);
  }
  return ll;
}

}  // namespace

double calibrated_loglik(const ValidationSample& sample) {
  const auto y = sample.outcomes();
  const auto r = sample.risks();
  double ll = 0.0;
  for (std::size_t i = 0; i < sample.size(); ++i) {
    ll += y[i] ? std::log(r[i]) : std::log1p(-r[i]);
  }
  return ll;
}

LogisticFit fit_logistic_2param(const ValidationSample& sample) {
  const auto y = sample.outcomes();
  const auto r = sample.risks();
  std::vector<double> x(sample.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (!(r[i] > 0.0 && r[i] < 1.0)) {
      throw Error(ErrorCode::kInfiniteLogit,
                  "risk at index " + std::to_string(i) + " is 0 or 1; its logit is infinite");
    }
    x[i] = logit(r[i]);
  }
  if (!sample.has_both_classes()) {
    throw Error(ErrorCode::kDegenerateSample, "logistic fit needs both outcome classes");
  }
  // With one covariate and an intercept the MLE exists iff no threshold on
  // the covariate splits cases from controls (ties at the threshold included).
  double case_min = HUGE_VAL, case_max = -HUGE_VAL, control_min = HUGE_VAL, control_max = -HUGE_VAL;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (y[i]) {
      case_min = std::min(case_min, x[i]);
      case_max = std::max(case_max, x[i]);
    } else {
      control_min = std::min(control_min, x[i]);
      control_max = std::max(control_max, x[i]);
    }
  }
  if ((control_max <= case_min && control_min < case_max) ||
      (case_max <= control_min && case_min < control_max)) {
    throw Error(ErrorCode::kSeparationDetected,
                "outcomes are separated by predicted risk; the logistic MLE does not exist");
  }

  LogisticFit fit{0.0, 1.0, loglik_at(y, x, 0.0, 1.0), 0};
  for (int iter = 1; iter <= kMaxNewtonIterations; ++iter) {
    double g0 = 0.0, g1 = 0.0, h00 = 0.0, h01 = 0.0, h11 = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
      const double mu = logistic(fit.alpha + fit.beta * x[i]);
      const double resid = y[i] - mu;
      const double w = mu * (1.0 - mu);
      g0 += resid;
      g1 += resid * x[i];
      h00 += w;
      h01 += w * x[i];
      h11 += w * x[i] * x[i];
    }
    fit.iterations = iter - 1;
    if (std::max(std::abs(g0), std::abs(g1)) < kScoreTolerance) return fit;

    const double det = h00 * h11 - h01 * h01;
    if (!(det > 0.0) || !std::isfinite(det)) {
      if (std::max(std::abs(fit.alpha), std::abs(fit.beta)) > 0.5 * kSeparationBound) {
        throw Error(ErrorCode::kSeparationDetected, "logistic fit diverges: outcomes are separated");
      }
      throw Error(ErrorCode::kNonConvergence, "information matrix is singular");
    }
    double step0 = (h11 * g0 - h01 * g1) / det;
    double step1 = (h00 * g1 - h01 * g0) / det;

    // Step halving keeps the log-likelihood from decreasing by more than
    // rounding; near the optimum the gain is far below that resolution.
    const double slack = 1e-12 * std::max(1.0, std::abs(fit.loglik));
    double alpha = fit.alpha + step0, beta = fit.beta + step1;
    double ll = loglik_at(y, x, alpha, beta);
    for (int half = 0; half < 30 && !(ll >= fit.loglik - slack); ++half) {
      step0 *= 0.5;
      step1 *= 0.5;
      alpha = fit.alpha + step0;
      beta = fit.beta + step1;
      ll = loglik_at(y, x, alpha, beta);
    }
    if (std::abs(alpha) > kSeparationBound || std::abs(beta) > kSeparationBound) {
      throw Error(ErrorCode::kSeparationDetected,
                  "logistic fit diverges (|alpha| or |beta| > 50): outcomes are separated");
    }
    if (!(ll >= fit.loglik - slack)) {
      throw Error(ErrorCode::kNonConvergence, "Newton-Raphson step failed to increase the likelihood");
    }
    fit.alpha = alpha;
    fit.beta = beta;
    fit.loglik = ll;
  }
  throw Error(ErrorCode::kNonConvergence, "Newton-Raphson did not converge in " +
                                              std::to_string(kMaxNewtonIterations) +
                                              " iterations");
}

LikelihoodRatioResult lrt_calibration(const ValidationSample& sample) {
  LikelihoodRatioResult out;
  out.fit = fit_logistic_2param(sample);
  out.statistic = std::max(0.0, 2.0 * (out.fit.loglik - calibrated_loglik(sample)));
  out.p_value = chi_square_sf(out.statistic, 2.0);
  return out;
}

}  // namespace mroc
