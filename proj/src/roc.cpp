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

#include "mroc/roc.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace mroc {

RiskGroups::RiskGroups(std::span<const double> risks) : group_of_(risks.size()) {
  std::vector<std::uint32_t> order(risks.size());
  std::iota(order.begin(), order.end(), 0u);
  std::sort(order.begin(), order.end(),
            [&](std::uint32_t l, std::uint32_t r) { return risks[l] < risks[r]; });
  for (std::uint32_t idx : order) {
    if (thresholds_.empty() || risks[idx] != thresholds_.back()) {
      thresholds_.push_back(risks[idx]);
    }
    group_of_[idx] = static_cast<std::uint32_t>(thresholds_.size() - 1);
  }
}

double RocCurve::tpr_at(double fpr) const {
  auto it = std::upper_bound(points.begin(), points.end(), fpr,
                             [](double t, const RocPoint& p) { return t < p.fpr; });
  if (it == points.begin()) return 0.0;
  return std::prev(it)->tpr;
}

void empirical_cdfs_into(const RiskGroups& groups, std::span<const std::uint8_t> outcomes,
                         WeightedCdfPair& out) {
  const std::size_t g = groups.group_count();
  out.thresholds.assign(groups.thresholds().begin(), groups.thresholds().end());
  out.cdf1.assign(g, 0.0);
  out.cdf0.assign(g, 0.0);
  const auto group_of = groups.group_of();
  double* cdf1 = out.cdf1.data();
  double* cdf0 = out.cdf0.data();
  for (std::size_t i = 0; i < outcomes.size(); ++i) {
    const double y = outcomes[i];
    cdf1[group_of[i]] += y;
    cdf0[group_of[i]] += 1.0 - y;
  }
  double cases = 0.0, controls = 0.0;
  for (std::size_t j = 0; j < g; ++j) {
    cases += out.cdf1[j];
    controls += out.cdf0[j];
    out.cdf1[j] = cases;
    out.cdf0[j] = controls;
  }
  if (cases == 0.0 || controls == 0.0) {
    throw Error(ErrorCode::kDegenerateSample,
                "empirical ROC needs at least one case and one control");
  }
  for (std::size_t j = 0; j < g; ++j) {
    cdf1[j] /= cases;
    cdf0[j] /= controls;
  }
}

WeightedCdfPair empirical_cdfs(const ValidationSample& sample) {
  if (!sample.has_both_classes()) {
    throw Error(ErrorCode::kDegenerateSample,
                "empirical ROC needs at least one case and one control");
  }
  WeightedCdfPair out;
  empirical_cdfs_into(RiskGroups(sample.risks()), sample.outcomes(), out);
  return out;
}

WeightedCdfPair model_based_cdfs(const RiskGroups& groups, std::span<const double> risks) {
  const std::size_t g = groups.group_count();
  WeightedCdfPair out;
  out.thresholds.assign(groups.thresholds().begin(), groups.thresholds().end());
  out.cdf1.assign(g, 0.0);
  out.cdf0.assign(g, 0.0);
  const auto group_of = groups.group_of();
  for (std::size_t i = 0; i < risks.size(); ++i) {
    out.cdf1[group_of[i]] += risks[i];
    out.cdf0[group_of[i]] += 1.0 - risks[i];
  }
  double mass1 = 0.0, mass0 = 0.0;
  for (std::size_t j = 0; j < g; ++j) {
    mass1 += out.cdf1[j];
    mass0 += out.cdf0[j];
    out.cdf1[j] = mass1;
    out.cdf0[j] = mass0;
  }
  if (!(mass1 > 0.0)) throw Error(ErrorCode::kAllZeroRisks, "all predicted risks are 0");
  if (!(mass0 > 0.0)) throw Error(ErrorCode::kAllOneRisks, "all predicted risks are 1");
  for (std::size_t j = 0; j < g; ++j) {
    out.cdf1[j] /= mass1;
    out.cdf0[j] /= mass0;
  }
  return out;
}

WeightedCdfPair model_based_cdfs(std::span<const double> risks) {
  if (risks.empty()) throw Error(ErrorCode::kEmptySample, "no predicted risks");
  check_risks(risks);
  return model_based_cdfs(RiskGroups(risks), risks);
}

void curve_from_cdfs_into(const WeightedCdfPair& cdfs, CurveKind kind, RocCurve& out) {
  out.kind = kind;
  out.points.clear();
  out.points.reserve(cdfs.thresholds.size() + 2);
  out.points.push_back({0.0, 0.0});
  auto append = [&](RocPoint p) {
    if (!(p == out.points.back())) out.points.push_back(p);
  };
  for (std::size_t j = cdfs.thresholds.size(); j-- > 0;) {
    append({1.0 - cdfs.cdf0[j], 1.0 - cdfs.cdf1[j]});
  }
  append({1.0, 1.0});
  out.auc = trapezoid_area(out.points);
}

RocCurve curve_from_cdfs(const WeightedCdfPair& cdfs, CurveKind kind) {
  RocCurve out;
  curve_from_cdfs_into(cdfs, kind, out);
  return out;
}

RocCurve empirical_roc(const ValidationSample& sample) {
  return curve_from_cdfs(empirical_cdfs(sample), CurveKind::kEmpirical);
}

RocCurve model_based_roc(std::span<const double> risks) {
  return curve_from_cdfs(model_based_cdfs(risks), CurveKind::kModelBased);
}

double trapezoid_area(std::span<const RocPoint> points) {
  double area = 0.0;
  for (std::size_t k = 1; k < points.size(); ++k) {
    area += (points[k].fpr - points[k - 1].fpr) * (points[k].tpr + points[k - 1].tpr) * 0.5;
  }
  return area;
}

double auc_concordance(const ValidationSample& sample) {
  if (!sample.has_both_classes()) {
    throw Error(ErrorCode::kDegenerateSample,
                "concordance needs at least one case and one control");
  }
  const auto risks = sample.risks();
  const auto outcomes = sample.outcomes();
  const std::size_t n = sample.size();
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(),
            [&](std::size_t l, std::size_t r) { return risks[l] < risks[r]; });

  // Sum of midranks over cases.
  double case_rank_sum = 0.0;
  std::size_t start = 0;
  while (start < n) {
    std::size_t end = start + 1;
    while (end < n && risks[order[end]] == risks[order[start]]) ++end;
    const double midrank = 0.5 * static_cast<double>(start + 1 + end);
    for (std::size_t k = start; k < end; ++k) {
      if (outcomes[order[k]]) case_rank_sum += midrank;
    }
    start = end;
  }
  const double n1 = static_cast<double>(sample.cases());
  const double n0 = static_cast<double>(sample.controls());
  return (case_rank_sum - n1 * (n1 + 1.0) * 0.5) / (n1 * n0);
}

namespace {

// Appends (f, t), overwriting the last knot when f repeats it so that each
// fpr keeps its largest tpr. `k` indexes the last written knot.
inline void push_knot(double* fpr, double* tpr, std::size_t& k, double f, double t) {
  k += f != fpr[k] ? 1 : 0;
  fpr[k] = f;
  tpr[k] = t;
}

}  // namespace

StepCurve to_step_curve(const RocCurve& curve) {
  StepCurve out;
  out.fpr.assign(curve.points.size() + 2, 0.0);
  out.tpr.assign(curve.points.size() + 2, 0.0);
  std::size_t k = 0;
  for (const auto& p : curve.points) push_knot(out.fpr.data(), out.tpr.data(), k, p.fpr, p.tpr);
  if (out.fpr[k] != 1.0) push_knot(out.fpr.data(), out.tpr.data(), k, 1.0, 1.0);
  out.fpr.resize(k + 1);
  out.tpr.resize(k + 1);
  return out;
}

void step_curve_from_cdfs(const WeightedCdfPair& cdfs, StepCurve& out) {
  const std::size_t g = cdfs.thresholds.size();
  out.fpr.resize(g + 2);
  out.tpr.resize(g + 2);
  double* fpr = out.fpr.data();
  double* tpr = out.tpr.data();
  fpr[0] = 0.0;
  tpr[0] = 0.0;
  std::size_t k = 0;
  for (std::size_t j = g; j-- > 0;) push_knot(fpr, tpr, k, 1.0 - cdfs.cdf0[j], 1.0 - cdfs.cdf1[j]);
  push_knot(fpr, tpr, k, 1.0, 1.0);
  out.fpr.resize(k + 1);
  out.tpr.resize(k + 1);
}

double integrated_abs_difference(const StepCurve& a, const StepCurve& b) {
  const double* fa = a.fpr.data();
  const double* ta = a.tpr.data();
  const double* fb = b.fpr.data();
  const double* tb = b.tpr.data();
  // Both knot lists start at 0 and end at exactly 1, so while x < 1 each
  // cursor has a successor.
  std::size_t ia = 0, ib = 0;
  double x = 0.0;
  double total = 0.0;
  while (x < 1.0) {
    const double next_a = fa[ia + 1];
    const double next_b = fb[ib + 1];
    const double next = next_a < next_b ? next_a : next_b;
    total += (next - x) * std::abs(ta[ia] - tb[ib]);
    x = next;
    ia += next_a == next ? 1 : 0;
    ib += next_b == next ? 1 : 0;
  }
  return total;
}

double integrated_abs_difference(const RocCurve& a, const RocCurve& b) {
  return integrated_abs_difference(to_step_curve(a), to_step_curve(b));
}

double max_vertical_gap(const RocCurve& a, const RocCurve& b, std::size_t grid_points) {
  if (grid_points < 2) throw Error(ErrorCode::kDomainError, "grid needs at least 2 points");
  double gap = 0.0;
  const double step = 1.0 / static_cast<double>(grid_points - 1);
  for (std::size_t k = 0; k < grid_points; ++k) {
    const double t = k + 1 == grid_points ? 1.0 : static_cast<double>(k) * step;
    gap = std::max(gap, std::abs(a.tpr_at(t) - b.tpr_at(t)));
  }
  return gap;
}

}  // namespace mroc
