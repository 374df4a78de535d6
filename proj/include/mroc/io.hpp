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

#include <string>
#include <string_view>
#include <vector>

#include "mroc/core.hpp"

namespace mroc {

inline constexpr std::string_view kVersion = "1.0.0";

// Reads a UTF-8, comma-separated file with a header row. `y_column` must hold
// 0/1 outcomes and `p_column` risks in [0, 1]; rows keep file order. Errors
// carry the 1-based data row number (the header is not counted).
ValidationSample load_csv(const std::string& path, std::string_view y_column = "y",
                          std::string_view p_column = "p");
ValidationSample parse_csv(std::string_view text, std::string_view y_column = "y",
                           std::string_view p_column = "p");

// Writes columns y,p (and true_p when given) with 17 significant digits.
void write_csv(const std::string& path, const ValidationSample& sample,
               const std::vector<double>* true_risks = nullptr);
std::string format_csv(const ValidationSample& sample,
                       const std::vector<double>* true_risks = nullptr);

// %.17g, the round-trip format used for every number this library writes
// as text outside JSON.
std::string format_double(double value);

std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view contents);
// FNV-1a 64-bit digest as 16 lowercase hex digits.
std::string fnv1a64_hex(std::string_view bytes);

}  // namespace mroc
