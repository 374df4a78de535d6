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
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace mroc {

enum class ErrorCode {
  kLengthMismatch,
  kOutOfRangeRisk,
  kNonBinaryOutcome,
  kEmptySample,
  kDegenerateSample,
  kAllZeroRisks,
  kAllOneRisks,
  kInvalidSims,
  kDomainError,
  kInvalidScenario,
  kSeparationDetected,
  kNonConvergence,
  kInfiniteLogit,
  kFileNotFound,
  kMissingColumn,
  kParseError,
  kConfigError,
  kIoError,
  kNumericFailure,
};

std::string_view to_string(ErrorCode code);

// Every failure raised by the library carries one of the codes above.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

// Outcomes and predicted risks for the n individuals of a validation sample.
// Immutable once built; rows keep their input order.
class ValidationSample {
 public:
  std::size_t size() const noexcept { return risks_.size(); }
  std::span<const std::uint8_t> outcomes() const noexcept { return outcomes_; }
  std::span<const double> risks() const noexcept { return risks_; }

  std::size_t cases() const noexcept { return cases_; }
  std::size_t controls() const noexcept { return size() - cases_; }
  bool has_both_classes() const noexcept { return cases_ > 0 && cases_ < size(); }

 private:
  friend ValidationSample make_sample(std::span<const int>, std::span<const double>);
  friend ValidationSample make_sample(std::vector<std::uint8_t>, std::vector<double>);

  ValidationSample(std::vector<std::uint8_t> outcomes, std::vector<double> risks);

  std::vector<std::uint8_t> outcomes_;
  std::vector<double> risks_;
  std::size_t cases_ = 0;
};

// Throws Error with kEmptySample, kLengthMismatch, kNonBinaryOutcome or
// kOutOfRangeRisk. Risks of exactly 0 or 1 are accepted.
ValidationSample make_sample(std::span<const int> outcomes, std::span<const double> risks);
ValidationSample make_sample(std::vector<std::uint8_t> outcomes, std::vector<double> risks);

// Validates that every risk lies in [0, 1] (NaN rejected).
void check_risks(std::span<const double> risks);

}  // namespace mroc
