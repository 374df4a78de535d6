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

#include "mroc/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <sstream>
#include <tuple>
#include <vector>

namespace mroc {
namespace {

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

std::string param(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%g", v);
  return buf;
}

std::string escape(std::string_view s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '&': out += "&amp;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

// Maps the unit square onto a pixel rectangle (y grows upward in data space).
struct Frame {
  double left, top, width, height;
  double x(double u) const { return left + u * width; }
  double y(double v) const { return top + (1.0 - v) * height; }
};

void open_svg(std::ostringstream& os, double width, double height) {
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
     << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << num(width) << "\" height=\""
     << num(height) << "\" viewBox=\"0 0 " << num(width) << ' ' << num(height) << "\">\n"
     << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
}

void unit_axes(std::ostringstream& os, const Frame& f, std::string_view xlabel,
               std::string_view ylabel, bool ticks) {
  os << "<rect x=\"" << num(f.left) << "\" y=\"" << num(f.top) << "\" width=\"" << num(f.width)
     << "\" height=\"" << num(f.height) << "\" fill=\"none\" stroke=\"#333\"/>\n";
  if (ticks) {
    for (int k = 0; k <= 5; ++k) {
      const double v = k / 5.0;
      os << "<text x=\"" << num(f.x(v)) << "\" y=\"" << num(f.y(0) + 16)
         << "\" font-size=\"11\" text-anchor=\"middle\">" << param(v) << "</text>\n";
      os << "<text x=\"" << num(f.left - 6) << "\" y=\"" << num(f.y(v) + 4)
         << "\" font-size=\"11\" text-anchor=\"end\">" << param(v) << "</text>\n";
    }
  }
  os << "<text x=\"" << num(f.x(0.5)) << "\" y=\"" << num(f.y(0) + 34)
     << "\" font-size=\"13\" text-anchor=\"middle\">" << escape(xlabel) << "</text>\n";
  os << "<text transform=\"translate(" << num(f.left - 36) << ',' << num(f.y(0.5))
     << ") rotate(-90)\" font-size=\"13\" text-anchor=\"middle\">" << escape(ylabel)
     << "</text>\n";
}

void diagonal(std::ostringstream& os, const Frame& f) {
  os << "<line x1=\"" << num(f.x(0)) << "\" y1=\"" << num(f.y(0)) << "\" x2=\"" << num(f.x(1))
     << "\" y2=\"" << num(f.y(1)) << "\" stroke=\"#999\" stroke-dasharray=\"4 3\"/>\n";
}

void polyline(std::ostringstream& os, const Frame& f, std::span<const RocPoint> pts,
              std::string_view colour, double stroke_width) {
  os << "<polyline fill=\"none\" stroke=\"" << colour << "\" stroke-width=\""
     << num(stroke_width) << "\" points=\"";
  for (const auto& p : pts) os << num(f.x(p.fpr)) << ',' << num(f.y(p.tpr)) << ' ';
  os << "\"/>\n";
}

}  // namespace

std::string roc_svg(const RocCurve& empirical, const RocCurve& model_based) {
  std::ostringstream os;
  open_svg(os, 480, 480);
  const Frame f{70, 30, 380, 380};
  unit_axes(os, f, "False positive rate", "True positive rate", true);
  diagonal(os, f);
  polyline(os, f, empirical.points, "black", 2.0);
  polyline(os, f, model_based.points, "red", 2.0);
  os << "<text x=\"" << num(f.x(0.55)) << "\" y=\"" << num(f.y(0.15))
     << "\" font-size=\"12\">Empirical ROC (AUC " << num(empirical.auc) << ")</text>\n";
  os << "<text x=\"" << num(f.x(0.55)) << "\" y=\"" << num(f.y(0.08))
     << "\" font-size=\"12\" fill=\"red\">mROC (AUC " << num(model_based.auc) << ")</text>\n";
  os << "</svg>\n";
  return os.str();
}

std::string calibration_svg(std::span<const CalibrationBin> bins) {
  std::ostringstream os;
  open_svg(os, 480, 480);
  const Frame f{70, 30, 380, 380};
  unit_axes(os, f, "Predicted risk", "Observed risk", true);
  diagonal(os, f);
  std::vector<RocPoint> pts;
  for (const auto& b : bins) pts.push_back({b.mean_predicted, b.observed_rate});
  polyline(os, f, pts, "#1f78b4", 1.5);
  for (const auto& p : pts) {
    os << "<circle cx=\"" << num(f.x(p.fpr)) << "\" cy=\"" << num(f.y(p.tpr))
       << "\" r=\"4\" fill=\"#1f78b4\"/>\n";
  }
  os << "</svg>\n";
  return os.str();
}

namespace {

struct GroupKey {
  ScenarioFamily family;
  std::size_t n;
  double mean, sd;
  CaseMixPanel panel;
  auto tie() const { return std::tie(family, n, mean, sd, panel); }
  bool operator<(const GroupKey& o) const { return tie() < o.tie(); }
};

struct Layout {
  GroupKey key;
  std::vector<double> a_values, b_values;
  std::vector<std::size_t> members;
};

// Groups in order of first appearance, with sorted a (rows) and b (columns).
template <class GetScenario>
std::vector<Layout> layout_groups(std::size_t count, GetScenario get, bool include_n) {
  std::vector<Layout> groups;
  std::map<GroupKey, std::size_t> index;
  for (std::size_t i = 0; i < count; ++i) {
    const Scenario& s = get(i);
    GroupKey key{s.family, include_n ? s.n : 0, s.predictor_mean, s.predictor_sd,
                 s.family == ScenarioFamily::kCaseMixPreset ? s.panel : CaseMixPanel::kA};
    auto [it, inserted] = index.emplace(key, groups.size());
    if (inserted) groups.push_back(Layout{key, {}, {}, {}});
    Layout& g = groups[it->second];
    g.members.push_back(i);
    if (std::find(g.a_values.begin(), g.a_values.end(), s.a) == g.a_values.end()) {
      g.a_values.push_back(s.a);
    }
    if (std::find(g.b_values.begin(), g.b_values.end(), s.b) == g.b_values.end()) {
      g.b_values.push_back(s.b);
    }
  }
  for (auto& g : groups) {
    std::sort(g.a_values.begin(), g.a_values.end());
    std::sort(g.b_values.begin(), g.b_values.end());
  }
  return groups;
}

std::size_t position(const std::vector<double>& values, double v) {
  return static_cast<std::size_t>(std::find(values.begin(), values.end(), v) - values.begin());
}

constexpr double kPanelW = 150, kPanelH = 120, kGap = 26, kMargin = 50, kHeader = 30;

}  // namespace

std::string power_svg(const PowerTable& table) {
  const auto groups = layout_groups(
      table.rows.size(), [&](std::size_t i) -> const Scenario& { return table.rows[i].scenario; },
      true);
  std::size_t max_cols = 1;
  double height = kMargin + 40;
  for (const auto& g : groups) {
    max_cols = std::max(max_cols, g.b_values.size());
    height += kHeader + g.a_values.size() * (kPanelH + kGap);
  }
  const double width = 2 * kMargin + max_cols * (kPanelW + kGap);

  static constexpr const char* kColours[kTestKinds] = {"#e78ac3", "#fc8d62", "#7b3294", "#777777"};
  static constexpr const char* kNames[kTestKinds] = {"Mean calibration", "ROC equality",
                                                     "Unified", "Likelihood ratio"};

  std::ostringstream os;
  open_svg(os, width, height);
  os << "<text x=\"" << num(kMargin) << "\" y=\"24\" font-size=\"14\">"
     << "Probability of rejecting the null at level " << param(table.level) << "</text>\n";
  for (std::size_t t = 0; t < kTestKinds; ++t) {
    const double lx = kMargin + t * 150;
    os << "<rect x=\"" << num(lx) << "\" y=\"34\" width=\"12\" height=\"12\" fill=\""
       << kColours[t] << "\"/><text x=\"" << num(lx + 16) << "\" y=\"45\" font-size=\"12\">"
       << kNames[t] << "</text>\n";
  }

  double y = kMargin + 30;
  for (const auto& g : groups) {
    os << "<text x=\"" << num(kMargin) << "\" y=\"" << num(y + 18) << "\" font-size=\"13\">"
       << escape(to_string(g.key.family)) << ", n=" << g.key.n;
    if (g.key.family == ScenarioFamily::kCaseMixPreset) os << ", panel " << to_string(g.key.panel);
    os << "</text>\n";
    y += kHeader;
    for (std::size_t m : g.members) {
      const PowerRow& row = table.rows[m];
      const std::size_t r = position(g.a_values, row.scenario.a);
      const std::size_t c = position(g.b_values, row.scenario.b);
      const Frame f{kMargin + c * (kPanelW + kGap), y + r * (kPanelH + kGap), kPanelW, kPanelH};
      os << "<rect x=\"" << num(f.left) << "\" y=\"" << num(f.top) << "\" width=\""
         << num(f.width) << "\" height=\"" << num(f.height)
         << "\" fill=\"none\" stroke=\"#333\"/>\n";
      os << "<text x=\"" << num(f.x(0.5)) << "\" y=\"" << num(f.top - 4)
         << "\" font-size=\"11\" text-anchor=\"middle\">a=" << param(row.scenario.a)
         << ", b=" << param(row.scenario.b) << "</text>\n";
      const double bar_w = f.width / (kTestKinds + 1);
      for (std::size_t t = 0; t < kTestKinds; ++t) {
        const double rate = row.tests[t].rate();
        const double x0 = f.left + bar_w * (t + 0.5);
        os << "<rect x=\"" << num(x0) << "\" y=\"" << num(f.y(rate)) << "\" width=\""
           << num(bar_w * 0.9) << "\" height=\"" << num(rate * f.height) << "\" fill=\""
           << kColours[t] << "\"><title>" << kNames[t] << ": " << param(rate)
           << "</title></rect>\n";
      }
      os << "<line x1=\"" << num(f.x(0)) << "\" y1=\"" << num(f.y(table.level)) << "\" x2=\""
         << num(f.x(1)) << "\" y2=\"" << num(f.y(table.level))
         << "\" stroke=\"#333\" stroke-dasharray=\"3 2\"/>\n";
    }
    y += g.a_values.size() * (kPanelH + kGap);
  }
  os << "</svg>\n";
  return os.str();
}

std::string calibration_curves_svg(std::span<const Scenario> scenarios) {
  const auto groups = layout_groups(
      scenarios.size(), [&](std::size_t i) -> const Scenario& { return scenarios[i]; }, false);
  std::size_t max_cols = 1;
  double height = kMargin;
  for (const auto& g : groups) {
    max_cols = std::max(max_cols, g.b_values.size());
    height += kHeader + g.a_values.size() * (kPanelW + kGap);
  }
  const double width = 2 * kMargin + max_cols * (kPanelW + kGap);

  std::ostringstream os;
  open_svg(os, width, height);
  double y = kMargin / 2;
  for (const auto& g : groups) {
    os << "<text x=\"" << num(kMargin) << "\" y=\"" << num(y + 18) << "\" font-size=\"13\">"
       << escape(to_string(g.key.family)) << ": true risk (y) against predicted risk (x)</text>\n";
    y += kHeader;
    std::vector<bool> drawn(g.a_values.size() * g.b_values.size(), false);
    for (std::size_t m : g.members) {
      const Scenario& s = scenarios[m];
      const std::size_t r = position(g.a_values, s.a);
      const std::size_t c = position(g.b_values, s.b);
      if (drawn[r * g.b_values.size() + c]) continue;
      drawn[r * g.b_values.size() + c] = true;
      const Frame f{kMargin + c * (kPanelW + kGap), y + r * (kPanelW + kGap), kPanelW, kPanelW};
      unit_axes(os, f, "", "", false);
      diagonal(os, f);
      os << "<text x=\"" << num(f.x(0.5)) << "\" y=\"" << num(f.top - 4)
         << "\" font-size=\"11\" text-anchor=\"middle\">a=" << param(s.a) << ", b=" << param(s.b)
         << "</text>\n";
      std::vector<RocPoint> pts;
      for (int k = 1; k < 200; ++k) {
        const double z = k / 200.0;
        const double p = s.true_risk_given_predicted(z);
        if (std::isfinite(p)) pts.push_back({z, p});
      }
      polyline(os, f, pts, "#7b3294", 1.5);
    }
    y += g.a_values.size() * (kPanelW + kGap);
  }
  os << "</svg>\n";
  return os.str();
}

}  // namespace mroc
