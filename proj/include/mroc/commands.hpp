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
#include <string>

#include "mroc/power_config.hpp"
#include "mroc/report.hpp"
#include "mroc/simstudy.hpp"

namespace mroc {

struct ValidateOptions {
  std::string input;
  std::string y_column = "y";
  std::string p_column = "p";
  std::size_t n_sims = 10000;
  std::uint64_t seed = 0;
  std::size_t bins = 10;
  std::string out_dir = ".";
  unsigned threads = 0;
};

// Loads the CSV, builds the report and writes report.json, roc.svg and
// calibration.svg into out_dir (created if missing).
ValidationReport validate_command(const ValidateOptions& options);

inline constexpr std::uint64_t kSimulateStreamId = 0x53494d554c415445ull;

struct SimulateOptions {
  Scenario scenario;
  std::uint64_t seed = 0;
  std::string out;
  bool include_true_p = false;
};

// Draws one dataset on stream (seed, kSimulateStreamId) and writes it as CSV.
ValidationSample simulate_command(const SimulateOptions& options);

// Runs the configured grid and writes power.json, power.svg and
// calibration_curves.svg into out_dir. `threads` overrides the config when
// non-zero.
PowerTable power_command(const std::string& config_path, const std::string& out_dir,
                         unsigned threads = 0);

}  // namespace mroc
