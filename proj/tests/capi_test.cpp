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

// Exercises the shared library through its C interface only.

#include <cmath>
#include <cstdio>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <memory>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "mroc/mroc.h"

namespace {

struct SampleDeleter {
  void operator()(mroc_sample* s) const { mroc_sample_destroy(s); }
};
struct CurveDeleter {
  void operator()(mroc_curve* c) const { mroc_curve_destroy(c); }
};
struct TableDeleter {
  void operator()(mroc_power_table* t) const { mroc_power_table_destroy(t); }
};
using SamplePtr = std::unique_ptr<mroc_sample, SampleDeleter>;
using CurvePtr = std::unique_ptr<mroc_curve, CurveDeleter>;
using TablePtr = std::unique_ptr<mroc_power_table, TableDeleter>;

SamplePtr make(const std::vector<int>& y, const std::vector<double>& p) {
  mroc_sample* s = nullptr;
  EXPECT_EQ(mroc_sample_create(y.data(), p.data(), y.size(), &s), MROC_OK) << mroc_last_error();
  return SamplePtr(s);
}

TEST(CApi, Version) { EXPECT_STREQ(mroc_version(), "1.0.0"); }

TEST(CApi, SampleLifecycle) {
  const std::vector<int> y{1, 0, 1};
  const std::vector<double> p{0.9, 0.2, 0.6};
  auto s = make(y, p);
  EXPECT_EQ(mroc_sample_size(s.get()), 3u);
  EXPECT_EQ(mroc_sample_cases(s.get()), 2u);
  std::vector<int> y2(3);
  std::vector<double> p2(3);
  ASSERT_EQ(mroc_sample_copy(s.get(), y2.data(), p2.data()), MROC_OK);
  EXPECT_EQ(y2, y);
  EXPECT_EQ(p2, p);
}

TEST(CApi, ErrorsReportStatusAndMessage) {
  mroc_sample* s = nullptr;
  const int y[] = {1, 2};
  const double p[] = {0.5, 0.5};
  EXPECT_EQ(mroc_sample_create(y, p, 2, &s), MROC_ERR_NON_BINARY_OUTCOME);
  EXPECT_EQ(s, nullptr);
  EXPECT_GT(std::strlen(mroc_last_error()), 0u);
  EXPECT_EQ(mroc_sample_create(y, p, 0, &s), MROC_ERR_EMPTY_SAMPLE);
  EXPECT_EQ(mroc_sample_create(nullptr, p, 2, &s), MROC_ERR_INVALID_ARGUMENT);
  EXPECT_STREQ(mroc_status_name(MROC_ERR_CONFIG), "ConfigError");
  EXPECT_EQ(mroc_exit_code(MROC_OK), 0);
  EXPECT_EQ(mroc_exit_code(MROC_ERR_OUT_OF_RANGE_RISK), 2);
  EXPECT_EQ(mroc_exit_code(MROC_ERR_FILE_NOT_FOUND), 2);
  EXPECT_EQ(mroc_exit_code(MROC_ERR_CONFIG), 3);
  EXPECT_EQ(mroc_exit_code(MROC_ERR_NUMERIC), 4);
  EXPECT_EQ(mroc_sample_load_csv("/no/such/file.csv", nullptr, nullptr, &s),
            MROC_ERR_FILE_NOT_FOUND);
  mroc_sample_destroy(nullptr);
  mroc_curve_destroy(nullptr);
}

TEST(CApi, CurvesAndStatistics) {
  auto s = make({1, 0, 1, 0, 1}, {0.9, 0.8, 0.7, 0.3, 0.2});
  mroc_curve* raw = nullptr;
  ASSERT_EQ(mroc_curve_empirical(s.get(), &raw), MROC_OK);
  CurvePtr roc(raw);
  ASSERT_EQ(mroc_curve_model_based(s.get(), &raw), MROC_OK);
  CurvePtr mroc(raw);
  double auc = 0;
  ASSERT_EQ(mroc_auc_concordance(s.get(), &auc), MROC_OK);
  EXPECT_DOUBLE_EQ(auc, 0.5);
  EXPECT_NEAR(mroc_curve_auc(roc.get()), auc, 1e-12);

  const std::size_t k = mroc_curve_size(roc.get());
  std::vector<double> fpr(k), tpr(k);
  ASSERT_EQ(mroc_curve_points(roc.get(), fpr.data(), tpr.data()), MROC_OK);
  EXPECT_EQ(fpr.front(), 0.0);
  EXPECT_EQ(tpr.back(), 1.0);
  EXPECT_EQ(mroc_curve_tpr_at(roc.get(), 1.0), 1.0);

  double a = -1, b = -1;
  ASSERT_EQ(mroc_mean_calibration_stat(s.get(), &a), MROC_OK);
  EXPECT_NEAR(a, std::abs(3.0 - 2.9) / 5.0, 1e-15);
  ASSERT_EQ(mroc_roc_equality_stat(s.get(), &b), MROC_OK);
  EXPECT_GE(b, 0.0);
  EXPECT_LE(b, 1.0);

  auto one_class = make({1, 1}, {0.5, 0.6});
  EXPECT_EQ(mroc_curve_empirical(one_class.get(), &raw), MROC_ERR_DEGENERATE_SAMPLE);
}

TEST(CApi, Numerics) {
  const double null[] = {0.1, 0.2, 0.3, 0.4};
  double p = 0;
  ASSERT_EQ(mroc_mc_p_value(0.25, null, 4, &p), MROC_OK);
  EXPECT_DOUBLE_EQ(p, 0.5);
  ASSERT_EQ(mroc_chi_square_cdf(2.0 * std::log(2.0), 2.0, &p), MROC_OK);
  EXPECT_NEAR(p, 0.5, 1e-14);
  EXPECT_EQ(mroc_chi_square_cdf(-1.0, 2.0, &p), MROC_ERR_DOMAIN);
}

TEST(CApi, SimulationAndTests) {
  mroc_scenario sc;
  ASSERT_EQ(mroc_scenario_init(&sc, MROC_FAMILY_LOGIT_LINEAR), MROC_OK);
  sc.n = 500;
  std::vector<double> truth(sc.n);
  mroc_sample* raw = nullptr;
  ASSERT_EQ(mroc_generate_dataset(&sc, 7, 0, &raw, truth.data()), MROC_OK);
  SamplePtr s(raw);
  std::vector<int> y(sc.n);
  std::vector<double> p(sc.n);
  mroc_sample_copy(s.get(), y.data(), p.data());
  for (std::size_t i = 0; i < sc.n; ++i) EXPECT_NEAR(p[i], truth[i], 1e-15);

  mroc_test_result r1, r2;
  ASSERT_EQ(mroc_unified_test(s.get(), 200, 11, 0, 1, &r1), MROC_OK);
  ASSERT_EQ(mroc_unified_test(s.get(), 200, 11, 0, 2, &r2), MROC_OK);
  EXPECT_EQ(std::memcmp(&r1, &r2, sizeof r1), 0);
  EXPECT_NEAR(r1.stat_u, -2.0 * (std::log(r1.p_a) + std::log(r1.p_b)), 1e-10);
  EXPECT_EQ(mroc_unified_test(s.get(), 50, 11, 0, 1, &r1), MROC_ERR_INVALID_SIMS);

  double alpha, beta, loglik, stat, pv;
  ASSERT_EQ(mroc_fit_logistic(s.get(), &alpha, &beta, &loglik), MROC_OK);
  EXPECT_LT(loglik, 0.0);
  ASSERT_EQ(mroc_lrt_calibration(s.get(), &stat, &pv), MROC_OK);
  EXPECT_GE(pv, 0.0);
  EXPECT_LE(pv, 1.0);

  mroc_family fam;
  EXPECT_EQ(mroc_family_from_name("sign-power", &fam), MROC_OK);
  EXPECT_EQ(fam, MROC_FAMILY_SIGN_POWER);
  EXPECT_EQ(mroc_family_from_name("nope", &fam), MROC_ERR_INVALID_SCENARIO);
  ASSERT_EQ(mroc_scenario_init(&sc, MROC_FAMILY_SIGN_POWER), MROC_OK);
  sc.b = 0.0;
  EXPECT_EQ(mroc_generate_dataset(&sc, 7, 0, &raw, nullptr), MROC_ERR_INVALID_SCENARIO);
}

TEST(CApi, Commands) {
  namespace fs = std::filesystem;
  const fs::path dir = fs::temp_directory_path() / "mroc_capi_commands";
  fs::remove_all(dir);
  fs::create_directories(dir);
  const std::string csv = (dir / "d.csv").string();

  mroc_scenario sc;
  mroc_scenario_init(&sc, MROC_FAMILY_CASE_MIX);
  sc.panel = 'D';
  sc.n = 400;
  ASSERT_EQ(mroc_simulate_csv(&sc, 3, csv.c_str(), 1), MROC_OK) << mroc_last_error();

  mroc_validate_options opt;
  mroc_validate_options_init(&opt);
  const std::string out = (dir / "out").string();
  opt.input = csv.c_str();
  opt.n_sims = 200;
  opt.out_dir = out.c_str();
  mroc_validate_summary sum;
  ASSERT_EQ(mroc_validate(&opt, &sum), MROC_OK) << mroc_last_error();
  EXPECT_EQ(sum.n, 400u);
  EXPECT_TRUE(fs::exists(dir / "out" / "report.json"));
  EXPECT_TRUE(fs::exists(dir / "out" / "roc.svg"));
  EXPECT_TRUE(fs::exists(dir / "out" / "calibration.svg"));

  const std::string cfg = (dir / "cfg.json").string();
  std::ofstream(cfg) << R"({"outer_reps": 50, "inner_sims": 100,
    "grids": [{"family": "sign-power", "a": 0, "b": [1, 2], "n": 100}]})";
  mroc_power_table* raw = nullptr;
  ASSERT_EQ(mroc_power(cfg.c_str(), out.c_str(), 0, &raw), MROC_OK) << mroc_last_error();
  TablePtr table(raw);
  ASSERT_EQ(mroc_power_table_rows(table.get()), 2u);
  mroc_scenario row;
  ASSERT_EQ(mroc_power_table_scenario(table.get(), 1, &row), MROC_OK);
  EXPECT_EQ(row.family, MROC_FAMILY_SIGN_POWER);
  EXPECT_EQ(row.b, 2.0);
  std::size_t rej, eval, fail;
  ASSERT_EQ(mroc_power_table_tally(table.get(), 0, MROC_TEST_UNIFIED, &rej, &eval, &fail), MROC_OK);
  EXPECT_EQ(eval + fail, 50u);
  EXPECT_EQ(mroc_power_table_tally(table.get(), 5, MROC_TEST_UNIFIED, &rej, &eval, &fail),
            MROC_ERR_DOMAIN);

  std::ofstream(cfg) << "{\"grids\": []}";
  EXPECT_EQ(mroc_power(cfg.c_str(), out.c_str(), 0, &raw), MROC_ERR_CONFIG);
}

}  // namespace
