// Copyright 2026 The tranclone Authors
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

#include "tranclone/report.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

#include "json.hpp"

namespace tranclone {

namespace {

std::string format_double(double v) {
  char buffer[32];
  std::snprintf(buffer, sizeof(buffer), "%.17g", v);
  return buffer;
}

std::string join(const std::vector<double>& values, char sep) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i > 0) out += sep;
    out += format_double(values[i]);
  }
  return out;
}

nlohmann::ordered_json values_json(const std::vector<double>& values) {
  if (values.size() == 1) return values.front();
  return nlohmann::ordered_json(values);
}

template <class T>
nlohmann::ordered_json optional_json(const std::optional<T>& v) {
  return v ? nlohmann::ordered_json(*v) : nlohmann::ordered_json(nullptr);
}

template <class T>
std::string optional_csv(const std::optional<T>& v) {
  if (!v) return "";
  if constexpr (std::is_floating_point_v<T>) {
    return format_double(*v);
  } else {
    return std::to_string(*v);
  }
}

}  // namespace

bool within_tolerance(const std::vector<double>& computed, const std::vector<double>& expected,
                      double tolerance) {
  if (computed.size() != expected.size()) return false;
  for (std::size_t i = 0; i < computed.size(); ++i) {
    // Written so that NaN never passes.
    if (!(std::abs(computed[i] - expected[i]) <= tolerance)) return false;
  }
  return true;
}

VerificationReport VerificationReport::make(std::string claim_id, ReportParams params,
                                            std::vector<double> computed,
                                            std::vector<double> expected, double tolerance) {
  VerificationReport r;
  r.claim_id = std::move(claim_id);
  r.params = params;
  r.passed = within_tolerance(computed, expected, tolerance);
  r.computed = std::move(computed);
  r.expected = std::move(expected);
  r.tolerance = tolerance;
  return r;
}

VerificationReport VerificationReport::make(std::string claim_id, ReportParams params,
                                            double computed, double expected, double tolerance) {
  return make(std::move(claim_id), params, std::vector<double>{computed},
              std::vector<double>{expected}, tolerance);
}

VerificationReport VerificationReport::skip(std::string claim_id, ReportParams params,
                                            std::string note) {
  VerificationReport r;
  r.claim_id = std::move(claim_id);
  r.params = params;
  r.skipped = true;
  r.note = std::move(note);
  return r;
}

std::string to_json_line(const VerificationReport& report) {
  nlohmann::ordered_json j;
  j["claim_id"] = report.claim_id;
  j["status"] = report.status();
  j["d"] = optional_json(report.params.d);
  j["n"] = optional_json(report.params.n);
  j["k"] = optional_json(report.params.k);
  j["eta"] = optional_json(report.params.eta);
  j["samples"] = report.params.samples;
  j["computed"] = values_json(report.computed);
  j["expected"] = values_json(report.expected);
  j["tolerance"] = report.tolerance;
  j["passed"] = report.passed;
  j["seed"] = report.params.seed;
  j["runtime_ms"] = report.runtime_ms;
  j["note"] = report.note;
  return j.dump();
}

std::string csv_header() {
  return "claim_id,d,n,k,eta,computed,expected,tolerance,passed,seed,runtime_ms";
}

std::string to_csv_row(const VerificationReport& report) {
  std::ostringstream out;
  out << report.claim_id << ',' << optional_csv(report.params.d) << ','
      << optional_csv(report.params.n) << ',' << optional_csv(report.params.k) << ','
      << optional_csv(report.params.eta) << ',' << join(report.computed, ';') << ','
      << join(report.expected, ';') << ',' << format_double(report.tolerance) << ','
      << (report.skipped ? "skipped" : (report.passed ? "true" : "false")) << ','
      << report.params.seed << ',' << report.runtime_ms;
  return out.str();
}

std::string to_text_line(const VerificationReport& report) {
  std::ostringstream out;
  out << (report.skipped ? "SKIP" : (report.passed ? "PASS" : "FAIL")) << "  "
      << report.claim_id;
  if (report.params.d) out << "  d=" << *report.params.d;
  if (report.params.n) out << " n=" << *report.params.n;
  if (report.params.k) out << " k=" << *report.params.k;
  if (report.params.eta) out << " eta=" << format_double(*report.params.eta);
  if (report.skipped) {
    out << "  (" << report.note << ")";
    return out.str();
  }
  out << "  computed=" << join(report.computed, ' ') << "  expected="
      << join(report.expected, ' ') << "  tol=" << format_double(report.tolerance);
  if (!report.note.empty()) out << "  [" << report.note << "]";
  return out.str();
}

}  // namespace tranclone
