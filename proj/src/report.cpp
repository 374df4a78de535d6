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

#include "mroc/report.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include <boost/math/distributions/students_t.hpp>
#include <json.hpp>

#include "mroc/io.hpp"

namespace mroc {

using nlohmann::ordered_json;

TTestResult residual_t_test(const ValidationSample& sample) {
  const auto y = sample.outcomes();
  const auto r = sample.risks();
  const std::size_t n = sample.size();
  TTestResult out;
  out.df = static_cast<double>(n) - 1.0;
  if (n < 2) {
    out.statistic = 0.0;
    out.p_value = 1.0;
    return out;
  }
  double mean = 0.0;
  for (std::size_t i = 0; i < n; ++i) mean += y[i] - r[i];
  mean /= static_cast<double>(n);
  double ss = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double d = (y[i] - r[i]) - mean;
    ss += d * d;
  }
  const double se = std::sqrt(ss / out.df / static_cast<double>(n));
  if (se == 0.0) {
    // Constant residuals: the test is degenerate; report the limiting values.
    out.statistic = mean == 0.0 ? 0.0 : std::copysign(std::numeric_limits<double>::max(), mean);
    out.p_value = mean == 0.0 ? 1.0 : 0.0;
    return out;
  }
  out.statistic = mean / se;
  const boost::math::students_t dist(out.df);
  out.p_value = 2.0 * boost::math::cdf(boost::math::complement(dist, std::abs(out.statistic)));
  out.p_value = std::min(out.p_value, 1.0);
  return out;
}

std::vector<CalibrationBin> calibration_bins(const ValidationSample& sample, std::size_t bins) {
  if (bins < 2) throw Error(ErrorCode::kDomainError, "calibration plot needs at least 2 bins");
  const std::size_t n = sample.size();
  const auto y = sample.outcomes();
  const auto r = sample.risks();
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t l, std::size_t rr) { return r[l] < r[rr]; });
  bins = std::min(bins, n);
  std::vector<CalibrationBin> out;
  out.reserve(bins);
  for (std::size_t k = 0; k < bins; ++k) {
    const std::size_t lo = k * n / bins;
    const std::size_t hi = (k + 1) * n / bins;
    CalibrationBin bin;
    bin.count = hi - lo;
    double risk_sum = 0.0, event_sum = 0.0;
    for (std::size_t j = lo; j < hi; ++j) {
      risk_sum += r[order[j]];
      event_sum += y[order[j]];
    }
    bin.mean_predicted = risk_sum / static_cast<double>(bin.count);
    bin.observed_rate = event_sum / static_cast<double>(bin.count);
    out.push_back(bin);
  }
  return out;
}

ValidationReport build_validation_report(const ValidationSample& sample,
                                         const ReportOptions& options) {
  if (options.bins < 2) throw Error(ErrorCode::kDomainError, "--bins must be at least 2");
  ValidationReport report;
  report.summary.n = sample.size();
  report.summary.events = sample.cases();
  report.summary.mean_predicted_risk =
      std::accumulate(sample.risks().begin(), sample.risks().end(), 0.0) /
      static_cast<double>(sample.size());
  report.empirical = empirical_roc(sample);
  report.model_based = model_based_roc(sample.risks());
  report.test = unified_test(sample, options.n_sims, RngStream(options.seed, kValidateStreamId),
                             options.threads);
  report.t_test = residual_t_test(sample);
  report.bins = calibration_bins(sample, options.bins);
  report.provenance.seed = options.seed;
  report.provenance.n_sims = options.n_sims;
  report.provenance.bins = options.bins;
  report.provenance.tool_version = std::string(kVersion);
  return report;
}

namespace {

ordered_json curve_json(const RocCurve& c) {
  ordered_json fpr = ordered_json::array(), tpr = ordered_json::array();
  for (const auto& p : c.points) {
    fpr.push_back(p.fpr);
    tpr.push_back(p.tpr);
  }
  return {{"auc", c.auc}, {"fpr", std::move(fpr)}, {"tpr", std::move(tpr)}};
}

RocCurve curve_from_json(const ordered_json& j, CurveKind kind) {
  RocCurve c;
  c.kind = kind;
  c.auc = j.at("auc").get<double>();
  const auto& fpr = j.at("fpr");
  const auto& tpr = j.at("tpr");
  if (fpr.size() != tpr.size()) throw Error(ErrorCode::kParseError, "curve fpr/tpr lengths differ");
  for (std::size_t k = 0; k < fpr.size(); ++k) {
    c.points.push_back({fpr[k].get<double>(), tpr[k].get<double>()});
  }
  return c;
}

}  // namespace

std::string report_to_json(const ValidationReport& r) {
  ordered_json bins = ordered_json::array();
  for (const auto& b : r.bins) {
    bins.push_back({{"mean_predicted", b.mean_predicted},
                    {"observed_rate", b.observed_rate},
                    {"count", b.count}});
  }
  ordered_json doc = {
      {"schema", kReportSchema},
      {"schema_version", kReportSchemaVersion},
      {"sample",
       {{"n", r.summary.n},
        {"events", r.summary.events},
        {"mean_predicted_risk", r.summary.mean_predicted_risk}}},
      {"curves",
       {{"empirical", curve_json(r.empirical)}, {"model_based", curve_json(r.model_based)}}},
      {"calibration_test",
       {{"stat_a", r.test.stat_a},
        {"stat_b", r.test.stat_b},
        {"p_a", r.test.p_a},
        {"p_b", r.test.p_b},
        {"stat_u", r.test.stat_u},
        {"brown_c", r.test.brown_c},
        {"brown_k", r.test.brown_k},
        {"p_unified", r.test.p_unified},
        {"n_sims", r.test.n_sims},
        {"seed", r.test.seed}}},
      {"t_test",
       {{"statistic", r.t_test.statistic}, {"df", r.t_test.df}, {"p_value", r.t_test.p_value}}},
      {"calibration_bins", std::move(bins)},
      {"provenance",
       {{"input", r.provenance.input},
        {"input_fnv1a64", r.provenance.input_fnv1a64},
        {"seed", r.provenance.seed},
        {"n_sims", r.provenance.n_sims},
        {"bins", r.provenance.bins},
        {"tool_version", r.provenance.tool_version}}},
  };
  return doc.dump(2) + "\n";
}

ValidationReport report_from_json(std::string_view text) {
  try {
    const auto doc = ordered_json::parse(text);
    if (doc.at("schema").get<std::string>() != kReportSchema ||
        doc.at("schema_version").get<int>() != kReportSchemaVersion) {
      throw Error(ErrorCode::kParseError, "unsupported report schema");
    }
    ValidationReport r;
    const auto& s = doc.at("sample");
    r.summary = {s.at("n").get<std::size_t>(), s.at("events").get<std::size_t>(),
                 s.at("mean_predicted_risk").get<double>()};
    r.empirical = curve_from_json(doc.at("curves").at("empirical"), CurveKind::kEmpirical);
    r.model_based = curve_from_json(doc.at("curves").at("model_based"), CurveKind::kModelBased);
    const auto& t = doc.at("calibration_test");
    r.test.stat_a = t.at("stat_a").get<double>();
    r.test.stat_b = t.at("stat_b").get<double>();
    r.test.p_a = t.at("p_a").get<double>();
    r.test.p_b = t.at("p_b").get<double>();
    r.test.stat_u = t.at("stat_u").get<double>();
    r.test.brown_c = t.at("brown_c").get<double>();
    r.test.brown_k = t.at("brown_k").get<double>();
    r.test.p_unified = t.at("p_unified").get<double>();
    r.test.n_sims = t.at("n_sims").get<std::size_t>();
    r.test.seed = t.at("seed").get<std::uint64_t>();
    const auto& tt = doc.at("t_test");
    r.t_test = {tt.at("statistic").get<double>(), tt.at("df").get<double>(),
                tt.at("p_value").get<double>()};
    for (const auto& b : doc.at("calibration_bins")) {
      r.bins.push_back({b.at("mean_predicted").get<double>(), b.at("observed_rate").get<double>(),
                        b.at("count").get<std::size_t>()});
    }
    const auto& p = doc.at("provenance");
    r.provenance = {p.at("input").get<std::string>(),    p.at("input_fnv1a64").get<std::string>(),
                    p.at("seed").get<std::uint64_t>(),   p.at("n_sims").get<std::size_t>(),
                    p.at("bins").get<std::size_t>(),     p.at("tool_version").get<std::string>()};
    return r;
  } catch (const ordered_json::exception& e) {
    throw Error(ErrorCode::kParseError, std::string("malformed report: ") + e.what());
  }
}

}  // namespace mroc
