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

#include "mroc/power_config.hpp"

#include <set>

#include <json.hpp>

#include "mroc/io.hpp"

namespace mroc {
namespace {

using nlohmann::json;
using nlohmann::ordered_json;

class ConfigReader {
 public:
  explicit ConfigReader(std::string_view origin) : origin_(origin) {}

  [[noreturn]] void fail(const std::string& where, const std::string& what) const {
    throw Error(ErrorCode::kConfigError, origin_ + ":" + (where.empty() ? "/" : where) + ": " + what);
  }

  void only_keys(const json& obj, const std::string& where,
                 std::initializer_list<std::string_view> allowed) const {
    if (!obj.is_object()) fail(where, "expected an object");
    for (const auto& [key, value] : obj.items()) {
      bool ok = false;
      for (auto a : allowed) ok = ok || key == a;
      if (!ok) fail(where + "/" + key, "unknown key");
    }
  }

  double number(const json& v, const std::string& where) const {
    if (!v.is_number()) fail(where, "expected a number");
    return v.get<double>();
  }

  std::uint64_t count(const json& v, const std::string& where) const {
    if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<std::int64_t>() >= 0)) {
      fail(where, "expected a non-negative integer");
    }
    return v.get<std::uint64_t>();
  }

  std::string text(const json& v, const std::string& where) const {
    if (!v.is_string()) fail(where, "expected a string");
    return v.get<std::string>();
  }

  std::vector<double> numbers(const json& v, const std::string& where) const {
    if (v.is_number()) return {v.get<double>()};
    if (!v.is_array() || v.empty()) fail(where, "expected a number or a non-empty array");
    std::vector<double> out;
    for (std::size_t k = 0; k < v.size(); ++k) out.push_back(number(v[k], where + "/" + std::to_string(k)));
    return out;
  }

  std::vector<std::uint64_t> counts(const json& v, const std::string& where) const {
    if (v.is_number()) return {count(v, where)};
    if (!v.is_array() || v.empty()) fail(where, "expected an integer or a non-empty array");
    std::vector<std::uint64_t> out;
    for (std::size_t k = 0; k < v.size(); ++k) out.push_back(count(v[k], where + "/" + std::to_string(k)));
    return out;
  }

  ScenarioFamily family(const json& v, const std::string& where) const {
    try {
      return parse_family(text(v, where));
    } catch (const Error& e) {
      if (e.code() == ErrorCode::kConfigError) throw;
      fail(where, e.what());
    }
  }

  CaseMixPanel panel(const json& v, const std::string& where) const {
    try {
      return parse_panel(text(v, where));
    } catch (const Error& e) {
      if (e.code() == ErrorCode::kConfigError) throw;
      fail(where, e.what());
    }
  }

  Scenario base_scenario(ScenarioFamily family) const {
    switch (family) {
      case ScenarioFamily::kSuppLogitLinear: return Scenario::supp_logit_linear(0.0, 1.0, 1000);
      case ScenarioFamily::kSignPower: return Scenario::sign_power(0.0, 1.0, 1000);
      case ScenarioFamily::kCaseMixPreset: return Scenario::case_mix(CaseMixPanel::kA, 1000);
      case ScenarioFamily::kLogitLinear: break;
    }
    return Scenario::logit_linear(0.0, 1.0, 1000);
  }

  void check(const Scenario& s, const std::string& where) const {
    try {
      s.validate();
    } catch (const Error& e) {
      fail(where, e.what());
    }
  }

  std::string origin_;
};

}  // namespace

PowerConfig parse_power_config(std::string_view text, std::string_view origin) {
  const ConfigReader rd(origin);
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    // Translate the byte offset into line:column.
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw Error(ErrorCode::kConfigError, std::string(origin) + ":" + std::to_string(line) + ":" +
                                             std::to_string(col) + ": syntax error: " + e.what());
  }

  rd.only_keys(doc, "", {"schema", "schema_version", "seed", "outer_reps", "inner_sims",
                         "threads", "scenarios", "grids"});
  if (doc.contains("schema") && rd.text(doc["schema"], "/schema") != kPowerConfigSchema) {
    rd.fail("/schema", "expected \"" + std::string(kPowerConfigSchema) + "\"");
  }
  if (doc.contains("schema_version") &&
      rd.count(doc["schema_version"], "/schema_version") != kPowerSchemaVersion) {
    rd.fail("/schema_version", "unsupported version");
  }

  PowerConfig cfg;
  if (doc.contains("seed")) cfg.seed = rd.count(doc["seed"], "/seed");
  if (doc.contains("outer_reps")) cfg.outer_reps = rd.count(doc["outer_reps"], "/outer_reps");
  if (doc.contains("inner_sims")) cfg.inner_sims = rd.count(doc["inner_sims"], "/inner_sims");
  if (doc.contains("threads")) cfg.threads = static_cast<unsigned>(rd.count(doc["threads"], "/threads"));
  if (cfg.outer_reps < kMinOuterReps) {
    rd.fail("/outer_reps", "must be at least " + std::to_string(kMinOuterReps));
  }
  if (cfg.inner_sims < kMinUnifiedSims) {
    rd.fail("/inner_sims", "must be at least " + std::to_string(kMinUnifiedSims));
  }

  if (doc.contains("scenarios")) {
    const auto& list = doc["scenarios"];
    if (!list.is_array()) rd.fail("/scenarios", "expected an array");
    for (std::size_t k = 0; k < list.size(); ++k) {
      const std::string at = "/scenarios/" + std::to_string(k);
      const auto& e = list[k];
      rd.only_keys(e, at, {"family", "a", "b", "n", "predictor_mean", "predictor_sd", "panel"});
      if (!e.contains("family")) rd.fail(at, "missing \"family\"");
      Scenario s = rd.base_scenario(rd.family(e["family"], at + "/family"));
      if (e.contains("panel")) s = Scenario::case_mix(rd.panel(e["panel"], at + "/panel"), s.n);
      if (e.contains("a")) s.a = rd.number(e["a"], at + "/a");
      if (e.contains("b")) s.b = rd.number(e["b"], at + "/b");
      if (e.contains("n")) s.n = rd.count(e["n"], at + "/n");
      if (e.contains("predictor_mean")) s.predictor_mean = rd.number(e["predictor_mean"], at + "/predictor_mean");
      if (e.contains("predictor_sd")) s.predictor_sd = rd.number(e["predictor_sd"], at + "/predictor_sd");
      rd.check(s, at);
      cfg.scenarios.push_back(s);
    }
  }

  if (doc.contains("grids")) {
    const auto& list = doc["grids"];
    if (!list.is_array()) rd.fail("/grids", "expected an array");
    for (std::size_t k = 0; k < list.size(); ++k) {
      const std::string at = "/grids/" + std::to_string(k);
      const auto& e = list[k];
      rd.only_keys(e, at, {"family", "a", "b", "n", "predictor_mean", "predictor_sd", "panels"});
      if (!e.contains("family")) rd.fail(at, "missing \"family\"");
      const ScenarioFamily family = rd.family(e["family"], at + "/family");
      const Scenario base = rd.base_scenario(family);
      const auto ns = e.contains("n") ? rd.counts(e["n"], at + "/n") : std::vector<std::uint64_t>{base.n};
      if (family == ScenarioFamily::kCaseMixPreset) {
        if (!e.contains("panels") || !e["panels"].is_array() || e["panels"].empty()) {
          rd.fail(at + "/panels", "case-mix grid needs a non-empty \"panels\" array");
        }
        for (auto n : ns) {
          for (std::size_t p = 0; p < e["panels"].size(); ++p) {
            Scenario s = Scenario::case_mix(
                rd.panel(e["panels"][p], at + "/panels/" + std::to_string(p)), n);
            rd.check(s, at);
            cfg.scenarios.push_back(s);
          }
        }
        continue;
      }
      if (e.contains("panels")) rd.fail(at + "/panels", "only case-mix grids take panels");
      const auto as = e.contains("a") ? rd.numbers(e["a"], at + "/a") : std::vector<double>{base.a};
      const auto bs = e.contains("b") ? rd.numbers(e["b"], at + "/b") : std::vector<double>{base.b};
      for (auto n : ns) {
        for (double a : as) {
          for (double b : bs) {
            Scenario s = base;
            s.a = a;
            s.b = b;
            s.n = n;
            if (e.contains("predictor_mean")) s.predictor_mean = rd.number(e["predictor_mean"], at + "/predictor_mean");
            if (e.contains("predictor_sd")) s.predictor_sd = rd.number(e["predictor_sd"], at + "/predictor_sd");
            rd.check(s, at);
            cfg.scenarios.push_back(s);
          }
        }
      }
    }
  }

  if (cfg.scenarios.empty()) rd.fail("", "the scenario grid is empty");
  return cfg;
}

PowerConfig load_power_config(const std::string& path) {
  std::string text;
  try {
    text = read_file(path);
  } catch (const Error& e) {
    throw Error(ErrorCode::kConfigError, e.what());
  }
  return parse_power_config(text, path);
}

std::string power_table_to_json(const PowerTable& table) {
  ordered_json rows = ordered_json::array();
  for (const auto& row : table.rows) {
    const Scenario& s = row.scenario;
    ordered_json tests = ordered_json::object();
    for (std::size_t t = 0; t < kTestKinds; ++t) {
      const auto& tally = row.tests[t];
      tests[std::string(to_string(static_cast<TestKind>(t)))] = {
          {"rate", tally.rate()},
          {"rejections", tally.rejections},
          {"evaluated", tally.evaluated},
          {"failures", tally.failures}};
    }
    ordered_json r = {{"family", to_string(s.family)},
                      {"a", s.a},
                      {"b", s.b},
                      {"n", s.n},
                      {"predictor_mean", s.predictor_mean},
                      {"predictor_sd", s.predictor_sd}};
    if (s.family == ScenarioFamily::kCaseMixPreset) r["panel"] = to_string(s.panel);
    r["calibrated"] = s.is_calibrated();
    r["outer_reps"] = row.outer_reps;
    r["inner_sims"] = row.inner_sims;
    r["tests"] = std::move(tests);
    rows.push_back(std::move(r));
  }
  ordered_json doc = {{"schema", kPowerTableSchema},
                      {"schema_version", kPowerSchemaVersion},
                      {"tool_version", kVersion},
                      {"seed", table.seed},
                      {"level", table.level},
                      {"rows", std::move(rows)}};
  return doc.dump(2) + "\n";
}

}  // namespace mroc
