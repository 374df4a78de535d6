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
#include <string_view>
#include <vector>

#include "mroc/simstudy.hpp"

namespace mroc {

inline constexpr std::string_view kPowerConfigSchema = "mroc.power-config";
inline constexpr std::string_view kPowerTableSchema = "mroc.power-table";
inline constexpr int kPowerSchemaVersion = 1;
inline constexpr std::uint64_t kPowerStreamId = 0x504f574552ull;

struct PowerConfig {
  std::uint64_t seed = 0;
  std::size_t outer_reps = 500;
  std::size_t inner_sims = 5000;
  unsigned threads = 0;
  std::vector<Scenario> scenarios;
};

// JSON document with optional explicit "scenarios" and factorial "grids"
// (see configs/ and README). Errors are kConfigError and name the offending
// location as origin:line:column (syntax) or origin:/json/pointer (content).
PowerConfig parse_power_config(std::string_view text, std::string_view origin = "<config>");
PowerConfig load_power_config(const std::string& path);

std::string power_table_to_json(const PowerTable& table);

}  // namespace mroc
