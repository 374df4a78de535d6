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

namespace mroc {

struct RocPoint {
  double fpr = 0.0;
  double tpr = 0.0;
  friend bool operator==(const RocPoint&, const RocPoint&) = default;
};

enum class CurveKind { kEmpirical, kModelBased };

// Positive- and negative-group CDFs of the predicted risk, tabulated at every
// distinct risk value (ascending). Both CDFs end at exactly 1.
struct WeightedCdfPair {
  std::vector<double> thresholds;
  std::vector<double> cdf1;
  std::vector<double> cdf0;
};

// Breakpoints from (0,0) to (1,1) with both coordinates non-decreasing.
// `auc` is the trapezoidal area under the polyline through the points.
struct RocCurve {
  std::vector<RocPoint> points;
  double auc = 0.0;
  CurveKind kind = CurveKind::kEmpirical;

  // Right-continuous step evaluation: tpr of the last breakpoint with fpr <= t.
  double tpr_at(double fpr) const;
};

// Distinct risk values in ascending order and, for each row, the index of its
// value. Ties are grouped by exact equality.
class RiskGroups {
 public:
  explicit RiskGroups(std::span<const double> risks);

  std::size_t group_count() const noexcept { return thresholds_.size(); }
  std::span<const double> thresholds() const noexcept { return thresholds_; }
  std::span<const std::uint32_t> group_of() const noexcept { return group_of_; }

 private:
  std::vector<double> thresholds_;
  std::vector<std::uint32_t> group_of_;
};

// F_1n / F_0n: case and control fractions with risk <= each threshold.
// Throws kDegenerateSample unless both outcome classes are present.
WeightedCdfPair empirical_cdfs(const ValidationSample& sample);
void empirical_cdfs_into(const RiskGroups& groups, std::span<const std::uint8_t> outcomes,
                         WeightedCdfPair& out);

// Outcome-free CDFs that count row i as a fractional case of mass risk_i and a
// fractional control of mass 1 - risk_i. Throws kAllZeroRisks / kAllOneRisks
// when either total mass vanishes.
WeightedCdfPair model_based_cdfs(std::span<const double> risks);
WeightedCdfPair model_based_cdfs(const RiskGroups& groups, std::span<const double> risks);

RocCurve curve_from_cdfs(const WeightedCdfPair& cdfs, CurveKind kind);
void curve_from_cdfs_into(const WeightedCdfPair& cdfs, CurveKind kind, RocCurve& out);

RocCurve empirical_roc(const ValidationSample& sample);
RocCurve model_based_roc(std::span<const double> risks);

// Mann-Whitney concordance with half credit for ties, computed from midranks.
double auc_concordance(const ValidationSample& sample);

double trapezoid_area(std::span<const RocPoint> points);

// A curve read as a right-continuous step function: knots with strictly
// increasing fpr, from 0 to exactly 1; tpr[k] holds on [fpr[k], fpr[k+1]).
struct StepCurve {
  std::vector<double> fpr;
  std::vector<double> tpr;
};

StepCurve to_step_curve(const RocCurve& curve);
// Same knots as to_step_curve(curve_from_cdfs(cdfs, ...)), reusing `out`.
void step_curve_from_cdfs(const WeightedCdfPair& cdfs, StepCurve& out);

// Exact integral over [0, 1] of |a(t) - b(t)| with both curves read as
// right-continuous step functions.
double integrated_abs_difference(const StepCurve& a, const StepCurve& b);
double integrated_abs_difference(const RocCurve& a, const RocCurve& b);

// Largest |a(t) - b(t)| over grid_points evenly spaced fpr values in [0, 1].
double max_vertical_gap(const RocCurve& a, const RocCurve& b, std::size_t grid_points = 1001);

}  // namespace mroc
