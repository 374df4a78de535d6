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

#include "mroc/core.hpp"

#include <string>

namespace mroc {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kLengthMismatch: return "LengthMismatch";
    case ErrorCode::kOutOfRangeRisk: return "OutOfRangeRisk";
    case ErrorCode::kNonBinaryOutcome: return "NonBinaryOutcome";
    case ErrorCode::kEmptySample: return "EmptySample";
    case ErrorCode::kDegenerateSample: return "DegenerateSample";
    case ErrorCode::kAllZeroRisks: return "AllZeroRisks";
    case ErrorCode::kAllOneRisks: return "AllOneRisks";
    case ErrorCode::kInvalidSims: return "InvalidSims";
    case ErrorCode::kDomainError: return "DomainError";
    case ErrorCode::kInvalidScenario: return "InvalidScenario";
    case ErrorCode::kSeparationDetected: return "SeparationDetected";
    case ErrorCode::kNonConvergence: return "NonConvergence";
    case ErrorCode::kInfiniteLogit: return "InfiniteLogit";
    case ErrorCode::kFileNotFound: return "FileNotFound";
    case ErrorCode::kMissingColumn: return "MissingColumn";
    case ErrorCode::kParseError: return "ParseError";
    case ErrorCode::kConfigError: return "ConfigError";
    case ErrorCode::kIoError: return "IoError";
    case ErrorCode::kNumericFailure: return "NumericFailure";
  }
  return "Unknown";
}

void check_risks(std::span<const double> risks) {
  for (std::size_t i = 0; i < risks.size(); ++i) {
    const double r = risks[i];
    if (!(r >= 0.0 && r <= 1.0)) {
      throw Error(ErrorCode::kOutOfRangeRisk,
                  "risk at index " + std::to_string(i) + " is outside [0, 1]: " +
                      std::to_string(r));
    }
  }
}

ValidationSample::ValidationSample(std::vector<std::uint8_t> outcomes, std::vector<double> risks)
    : outcomes_(std::move(outcomes)), risks_(std::move(risks)) {
  for (auto y : outcomes_) cases_ += y;
}

ValidationSample make_sample(std::vector<std::uint8_t> outcomes, std::vector<double> risks) {
  if (outcomes.empty() && risks.empty()) {
    throw Error(ErrorCode::kEmptySample, "sample has no rows");
  }
  if (outcomes.size() != risks.size()) {
    throw Error(ErrorCode::kLengthMismatch,
                "outcomes has " + std::to_string(outcomes.size()) + " entries but risks has " +
                    std::to_string(risks.size()));
  }
  for (std::size_t i = 0; i < outcomes.size(); ++i) {
    if (outcomes[i] > 1) {
      throw Error(ErrorCode::kNonBinaryOutcome,
                  "outcome at index " + std::to_string(i) + " is not 0 or 1");
    }
  }
  check_risks(risks);
  return ValidationSample(std::move(outcomes), std::move(risks));
}

ValidationSample make_sample(std::span<const int> outcomes, std::span<const double> risks) {
  if (outcomes.empty() && risks.empty()) {
    throw Error(ErrorCode::kEmptySample, "sample has no rows");
  }
  if (outcomes.size() != risks.size()) {
    throw Error(ErrorCode::kLengthMismatch,
                "outcomes has " + std::to_string(outcomes.size()) + " entries but risks has " +
                    std::to_string(risks.size()));
  }
  std::vector<std::uint8_t> y(outcomes.size());
  for (std::size_t i = 0; i < outcomes.size(); ++i) {
    if (outcomes[i] != 0 && outcomes[i] != 1) {
      throw Error(ErrorCode::kNonBinaryOutcome,
                  "outcome at index " + std::to_string(i) + " is " +
                      std::to_string(outcomes[i]) + ", expected 0 or 1");
    }
    y[i] = static_cast<std::uint8_t>(outcomes[i]);
  }
  return make_sample(std::move(y), std::vector<double>(risks.begin(), risks.end()));
}

}  // namespace mroc
