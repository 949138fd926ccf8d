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

#pragma once

// Structured pass/fail records shared by the verification routines and the CLI.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace tranclone {

/// Echo of the parameters a record was produced with.
struct ReportParams {
  std::optional<std::size_t> d;
  std::optional<std::size_t> n;
  std::optional<std::size_t> k;
  std::optional<double> eta;
  std::uint64_t samples = 0;
  std::uint64_t seed = 0;
};

struct VerificationReport {
  std::string claim_id;
  ReportParams params;
  std::vector<double> computed;
  std::vector<double> expected;
  double tolerance = 0.0;
  bool passed = false;
  bool skipped = false;
  std::string note;
  std::int64_t runtime_ms = 0;

  /// Record whose `passed` flag is |computed - expected| <= tolerance,
  /// element-wise (vectors of different length never pass).
  static VerificationReport make(std::string claim_id, ReportParams params,
                                 std::vector<double> computed, std::vector<double> expected,
                                 double tolerance);
  static VerificationReport make(std::string claim_id, ReportParams params, double computed,
                                 double expected, double tolerance);
  /// Record for a claim that could not be evaluated (resource budget).
  static VerificationReport skip(std::string claim_id, ReportParams params, std::string note);

  std::string status() const { return skipped ? "skipped" : (passed ? "passed" : "failed"); }
};

bool within_tolerance(const std::vector<double>& computed, const std::vector<double>& expected,
                      double tolerance);

/// One flat JSON object on a single line (no trailing newline).
std::string to_json_line(const VerificationReport& report);
/// Fixed column order:
/// claim_id,d,n,k,eta,computed,expected,tolerance,passed,seed,runtime_ms
std::string csv_header();
std::string to_csv_row(const VerificationReport& report);
std::string to_text_line(const VerificationReport& report);

}  // namespace tranclone
