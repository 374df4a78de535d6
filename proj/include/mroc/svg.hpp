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

#include <span>
#include <string>

#include "mroc/report.hpp"
#include "mroc/roc.hpp"
#include "mroc/simstudy.hpp"

namespace mroc {

// Standalone SVG documents; no external assets.

// Empirical ROC (black), mROC (red) and the chance diagonal.
std::string roc_svg(const RocCurve& empirical, const RocCurve& model_based);
// Binned observed event rate against mean predicted risk.
std::string calibration_svg(std::span<const CalibrationBin> bins);
// One bar panel per scenario: rows by a, columns by b, grouped by family and n.
std::string power_svg(const PowerTable& table);
// Population calibration curves (true risk against predicted risk) per scenario.
std::string calibration_curves_svg(std::span<const Scenario> scenarios);

}  // namespace mroc
