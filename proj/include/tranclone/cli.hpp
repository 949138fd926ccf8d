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

// Verification suites behind the command-line front end. Kept in the library
// so that tests can drive them without spawning a process.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "tranclone/report.hpp"

namespace tranclone {

enum class Suite {
  kFidelity,
  kDuality,
  kComplementarity,
  kVisibility,
  kSpectrum,
  kEtaRange,
  kRepTheory,
  kAll,
};

enum class OutputFormat { kJson, kCsv, kText };

std::optional<Suite> parse_suite(std::string_view name);
std::string_view suite_name(Suite suite);
std::optional<OutputFormat> parse_format(std::string_view name);

struct RunConfig {
  std::optional<std::size_t> d;
  std::optional<std::size_t> n;
  std::optional<std::size_t> k;
  std::optional<double> eta;
  std::uint64_t samples = 1000;
  std::uint64_t seed = 0;
  double tol = 1e-9;
  OutputFormat format = OutputFormat::kJson;
  Suite suite = Suite::kAll;
  bool timing = false;  ///< measure runtime_ms; otherwise it is written as 0
};

/// Throws ContractViolation for d < 2, n < 1, k < 1, samples < 1, tol <= 0
/// or a non-finite eta.
void validate(const RunConfig& config);

/// One evaluation point. k is absent for suites that do not use it.
struct GridPoint {
  Suite suite;
  std::size_t d;
  std::size_t n;
  std::optional<std::size_t> k;
};

/// Points in deterministic order: suite, then d, then n, then k. Omitted
/// parameters expand to d in {2,3} and every N, K >= 1 with d^(N+K) <= 1024;
/// in that mode points whose dense matrices exceed the current budget are
/// left out.
std::vector<GridPoint> expand_grid(const RunConfig& config);

/// Records for one point. Resource-budget failures become skipped records.
std::vector<VerificationReport> evaluate(const GridPoint& point, const RunConfig& config);

inline constexpr int kExitPassed = 0;
inline constexpr int kExitFailed = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitBudget = 3;

/// Runs the configured suites and writes records to `out` in grid order.
/// Returns kExitPassed if every record passed, kExitFailed if any failed,
/// otherwise kExitBudget when some were skipped.
int run(const RunConfig& config, std::ostream& out);

}  // namespace tranclone
