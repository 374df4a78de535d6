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

// Command-line front end. Talks to the library only through the C API.

#include <cstdio>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "mroc/mroc.h"

namespace {

int report_failure(mroc_status status) {
  std::cerr << "mroc: error (" << mroc_status_name(status) << "): " << mroc_last_error() << "\n";
  return mroc_exit_code(status);
}

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Empirical and model-based ROC analysis with a simulation-based calibration test"};
  app.set_version_flag("--version", std::string(mroc_version()));
  app.require_subcommand(1);

  // validate
  std::string input, y_col = "y", p_col = "p", out_dir = ".";
  std::size_t sims = 10000, bins = 10;
  std::uint64_t seed = 0;
  unsigned threads = 0;
  auto* validate = app.add_subcommand("validate", "Validate a model's predicted risks against outcomes");
  validate->add_option("--input", input, "CSV file with outcome and risk columns")->required();
  validate->add_option("--y-col", y_col, "Outcome column name")->capture_default_str();
  validate->add_option("--p-col", p_col, "Predicted risk column name")->capture_default_str();
  validate->add_option("--sims", sims, "Monte Carlo replicates for the null distribution")
      ->capture_default_str();
  validate->add_option("--seed", seed, "Random seed")->capture_default_str();
  validate->add_option("--bins", bins, "Equal-count bins in the calibration plot")
      ->capture_default_str();
  validate->add_option("--out-dir", out_dir, "Directory for report.json and plots")
      ->capture_default_str();
  validate->add_option("--threads", threads, "Worker threads (0 = all cores)");

  // simulate
  std::string family = "logit-linear", out, panel = "A";
  double a = 0.0, b = 1.0;
  std::size_t n = 1000;
  std::uint64_t sim_seed = 0;
  std::optional<double> predictor_mean, predictor_sd;
  bool with_true_p = false;
  auto* simulate = app.add_subcommand("simulate", "Write a simulated validation dataset as CSV");
  simulate->add_option("--family", family,
                       "logit-linear, sign-power, supp-logit-linear or case-mix")
      ->capture_default_str();
  simulate->add_option("--a", a, "Intercept-type miscalibration parameter")->capture_default_str();
  simulate->add_option("--b", b, "Slope-type miscalibration parameter")->capture_default_str();
  simulate->add_option("--n", n, "Sample size")->capture_default_str();
  simulate->add_option("--panel", panel, "Case-mix panel A-D")->capture_default_str();
  simulate->add_option("--predictor-mean", predictor_mean, "Override the predictor mean");
  simulate->add_option("--predictor-sd", predictor_sd, "Override the predictor sd");
  simulate->add_option("--seed", sim_seed, "Random seed")->capture_default_str();
  simulate->add_option("--out", out, "Output CSV path")->required();
  simulate->add_flag("--with-true-p", with_true_p, "Add a true_p column with the true risks");

  // power
  std::string config, power_dir = ".";
  unsigned power_threads = 0;
  auto* power = app.add_subcommand("power", "Run a simulation power study from a config file");
  power->add_option("--config", config, "Power study config (JSON)")->required();
  power->add_option("--out-dir", power_dir, "Directory for power.json and plots")
      ->capture_default_str();
  power->add_option("--threads", power_threads, "Worker threads (0 = config or all cores)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  if (*validate) {
    mroc_validate_options opts;
    mroc_validate_options_init(&opts);
    opts.input = input.c_str();
    opts.y_column = y_col.c_str();
    opts.p_column = p_col.c_str();
    opts.n_sims = sims;
    opts.seed = seed;
    opts.bins = bins;
    opts.out_dir = out_dir.c_str();
    opts.threads = threads;
    mroc_validate_summary s;
    if (auto st = mroc_validate(&opts, &s); st != MROC_OK) return report_failure(st);
    std::cout << "n=" << s.n << " events=" << s.events << "\n"
              << "AUC empirical=" << fmt(s.auc_empirical)
              << " model-based=" << fmt(s.auc_model_based) << "\n"
              << "A_n=" << fmt(s.test.stat_a) << " p=" << fmt(s.test.p_a) << "\n"
              << "B_n=" << fmt(s.test.stat_b) << " p=" << fmt(s.test.p_b) << "\n"
              << "U_n=" << fmt(s.test.stat_u) << " c=" << fmt(s.test.brown_c)
              << " k=" << fmt(s.test.brown_k) << " unified p=" << fmt(s.test.p_unified) << "\n"
              << "t-test p=" << fmt(s.t_test_p) << "\n"
              << "wrote " << out_dir << "/report.json, roc.svg, calibration.svg\n";
    return 0;
  }

  if (*simulate) {
    mroc_family fam;
    if (auto st = mroc_family_from_name(family.c_str(), &fam); st != MROC_OK) {
      return report_failure(st);
    }
    mroc_scenario scenario;
    mroc_scenario_init(&scenario, fam);
    if (fam == MROC_FAMILY_CASE_MIX) {
      scenario.panel = panel.size() == 1 ? panel[0] : '?';
      scenario.predictor_sd = (scenario.panel == 'B' || scenario.panel == 'D') ? 0.5 : 1.0;
    }
    scenario.a = a;
    scenario.b = b;
    scenario.n = n;
    if (predictor_mean) scenario.predictor_mean = *predictor_mean;
    if (predictor_sd) scenario.predictor_sd = *predictor_sd;
    if (auto st = mroc_simulate_csv(&scenario, sim_seed, out.c_str(), with_true_p ? 1 : 0);
        st != MROC_OK) {
      return report_failure(st);
    }
    std::cout << "wrote " << n << " rows to " << out << "\n";
    return 0;
  }

  if (*power) {
    mroc_power_table* table = nullptr;
    if (auto st = mroc_power(config.c_str(), power_dir.c_str(), power_threads, &table);
        st != MROC_OK) {
      return report_failure(st);
    }
    static const char* kNames[] = {"mean_cal", "roc_eq", "unified", "lrt"};
    const std::size_t rows = mroc_power_table_rows(table);
    for (std::size_t r = 0; r < rows; ++r) {
      mroc_scenario s;
      mroc_power_table_scenario(table, r, &s);
      std::cout << "a=" << fmt(s.a) << " b=" << fmt(s.b) << " n=" << s.n;
      for (int t = 0; t < 4; ++t) {
        std::size_t rej = 0, eval = 0, fails = 0;
        mroc_power_table_tally(table, r, static_cast<mroc_test_kind>(t), &rej, &eval, &fails);
        std::cout << "  " << kNames[t] << "=" << fmt(eval ? double(rej) / eval : 0.0);
      }
      std::cout << "\n";
    }
    mroc_power_table_destroy(table);
    std::cout << "wrote " << power_dir << "/power.json, power.svg, calibration_curves.svg\n";
    return 0;
  }
  return 2;
}
