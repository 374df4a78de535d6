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

#include "mroc/io.hpp"

#include <charconv>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace mroc {
namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) {
    s.remove_suffix(1);
  }
  if (s.size() >= 2 && s.front() == '"' && s.back() == '"') s = s.substr(1, s.size() - 2);
  return s;
}

std::vector<std::string_view> split_fields(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t start = 0;
  for (;;) {
    const auto comma = line.find(',', start);
    fields.push_back(trim(line.substr(start, comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return fields;
}

bool parse_number(std::string_view text, double& value) {
  if (!text.empty() && text.front() == '+') text.remove_prefix(1);
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  return ec == std::errc() && ptr == text.data() + text.size() && !text.empty();
}

[[noreturn]] void row_error(ErrorCode code, std::size_t row, const std::string& what) {
  throw Error(code, "row " + std::to_string(row) + ": " + what);
}

}  // namespace

std::string format_double(double value) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", value);
  return buf;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    if (!std::filesystem::exists(path)) {
      throw Error(ErrorCode::kFileNotFound, "file not found: " + path);
    }
    throw Error(ErrorCode::kIoError, "cannot open " + path);
  }
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, std::string_view contents) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorCode::kIoError, "cannot write " + path);
  out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
  if (!out) throw Error(ErrorCode::kIoError, "write failed: " + path);
}

std::string fnv1a64_hex(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

ValidationSample parse_csv(std::string_view text, std::string_view y_column,
                           std::string_view p_column) {
  if (text.starts_with("\xEF\xBB\xBF")) text.remove_prefix(3);

  std::vector<std::string_view> lines;
  std::size_t start = 0;
  while (start <= text.size()) {
    const auto nl = text.find('\n', start);
    lines.push_back(text.substr(start, nl - start));
    if (nl == std::string_view::npos) break;
    start = nl + 1;
  }
  while (!lines.empty() && trim(lines.back()).empty()) lines.pop_back();
  if (lines.empty()) throw Error(ErrorCode::kParseError, "file has no header row");

  const auto header = split_fields(lines.front());
  std::size_t y_idx = header.size(), p_idx = header.size();
  for (std::size_t k = 0; k < header.size(); ++k) {
    if (header[k] == y_column && y_idx == header.size()) y_idx = k;
    if (header[k] == p_column && p_idx == header.size()) p_idx = k;
  }
  if (y_idx == header.size()) {
    throw Error(ErrorCode::kMissingColumn, "column '" + std::string(y_column) + "' not in header");
  }
  if (p_idx == header.size()) {
    throw Error(ErrorCode::kMissingColumn, "column '" + std::string(p_column) + "' not in header");
  }

  std::vector<std::uint8_t> outcomes;
  std::vector<double> risks;
  outcomes.reserve(lines.size() - 1);
  risks.reserve(lines.size() - 1);
  for (std::size_t li = 1; li < lines.size(); ++li) {
    const std::size_t row = li;
    const auto fields = split_fields(lines[li]);
    if (fields.size() != header.size()) {
      row_error(ErrorCode::kParseError, row,
                "expected " + std::to_string(header.size()) + " fields, found " +
                    std::to_string(fields.size()));
    }
    double y = 0.0, p = 0.0;
    if (!parse_number(fields[y_idx], y)) {
      row_error(ErrorCode::kParseError, row,
                "cannot parse outcome '" + std::string(fields[y_idx]) + "'");
    }
    if (!parse_number(fields[p_idx], p)) {
      row_error(ErrorCode::kParseError, row,
                "cannot parse risk '" + std::string(fields[p_idx]) + "'");
    }
    if (y != 0.0 && y != 1.0) {
      row_error(ErrorCode::kNonBinaryOutcome, row,
                "outcome " + std::string(fields[y_idx]) + " is not 0 or 1");
    }
    if (!(p >= 0.0 && p <= 1.0)) {
      row_error(ErrorCode::kOutOfRangeRisk, row,
                "risk " + std::string(fields[p_idx]) + " is outside [0, 1]");
    }
    outcomes.push_back(y == 1.0 ? 1 : 0);
    risks.push_back(p);
  }
  return make_sample(std::move(outcomes), std::move(risks));
}

ValidationSample load_csv(const std::string& path, std::string_view y_column,
                          std::string_view p_column) {
  const std::string text = read_file(path);
  try {
    return parse_csv(text, y_column, p_column);
  } catch (const Error& e) {
    throw Error(e.code(), path + ": " + e.what());
  }
}

std::string format_csv(const ValidationSample& sample, const std::vector<double>* true_risks) {
  std::string out = true_risks ? "y,p,true_p\n" : "y,p\n";
  const auto y = sample.outcomes();
  const auto p = sample.risks();
  for (std::size_t i = 0; i < sample.size(); ++i) {
    out += y[i] ? '1' : '0';
    out += ',';
    out += format_double(p[i]);
    if (true_risks) {
      out += ',';
      out += format_double((*true_risks)[i]);
    }
    out += '\n';
  }
  return out;
}

void write_csv(const std::string& path, const ValidationSample& sample,
               const std::vector<double>* true_risks) {
  write_file(path, format_csv(sample, true_risks));
}

}  // namespace mroc
