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

#include "mroc/commands.hpp"

#include <filesystem>

#include "mroc/io.hpp"
#include "mroc/svg.hpp"

namespace mroc {
namespace {

std::filesystem::path prepare_dir(const std::string& dir) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw Error(ErrorCode::kIoError, "cannot create directory " + dir + ": " + ec.message());
  return dir;
}

}  // namespace

ValidationReport validate_command(const ValidateOptions& options) {
  if (options.bins < 2) throw Error(ErrorCode::kDomainError, "--bins must be at least 2");
  const std::string bytes = read_file(options.input);
  ValidationSample sample = [&] {
    try {
      return parse_csv(bytes, options.y_column, options.p_column);
    } catch (const Error& e) {
      throw Error(e.code(), options.input + ": " + e.what());
    }
  }();

  ValidationReport report = build_validation_report(
      sample, ReportOptions{options.n_sims, options.seed, options.bins, options.threads});
  report.provenance.input = options.input;
  report.provenance.input_fnv1a64 = fnv1a64_hex(bytes);

  const auto dir = prepare_dir(options.out_dir);
  write_file((dir / "report.json").string(), report_to_json(report));
  write_file((dir / "roc.svg").string(), roc_svg(report.empirical, report.model_based));
  write_file((dir / "calibration.svg").string(), calibration_svg(report.bins));
  return report;
}

ValidationSample simulate_command(const SimulateOptions& options) {
  options.scenario.validate();
  RngStream rng(options.seed, kSimulateStreamId);
  std::vector<double> true_risks;
  ValidationSample sample = generate_dataset(options.scenario, rng, &true_risks);
  const auto parent = std::filesystem::path(options.out).parent_path();
  if (!parent.empty()) prepare_dir(parent.string());
  write_csv(options.out, sample, options.include_true_p ? &true_risks : nullptr);
  return sample;
}

PowerTable power_command(const std::string& config_path, const std::string& out_dir,
                         unsigned threads) {
  const PowerConfig cfg = load_power_config(config_path);
  const PowerTable table =
      run_power_study(cfg.scenarios, cfg.outer_reps, cfg.inner_sims,
                      RngStream(cfg.seed, kPowerStreamId), threads != 0 ? threads : cfg.threads);
  const auto dir = prepare_dir(out_dir);
  write_file((dir / "power.json").string(), power_table_to_json(table));
  write_file((dir / "power.svg").string(), power_svg(table));
  write_file((dir / "calibration_curves.svg").string(), calibration_curves_svg(cfg.scenarios));
  return table;
}

}  // namespace mroc
