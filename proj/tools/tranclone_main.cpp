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

// Command-line front end: runs verification suites and streams records to
// stdout. Diagnostics go to stderr.

#include <cstdint>
#include <iostream>
#include <map>
#include <string>

#include "CLI11.hpp"
#include "tranclone/cli.hpp"
#include "tranclone/errors.hpp"

int main(int argc, char** argv) {
  using tranclone::OutputFormat;
  using tranclone::Suite;

  CLI::App app{"Numerical verification of optimal transposition and cloning channels"};
  tranclone::RunConfig config;

  std::size_t d = 0, n = 0, k = 0;
  double eta = 0.0;
  auto* d_opt = app.add_option("--d", d, "local dimension (omit for the default grid)");
  auto* n_opt = app.add_option("--n", n, "number of input copies N");
  auto* k_opt = app.add_option("--k", k, "number of output copies K");
  auto* eta_opt = app.add_option("--eta", eta, "visibility to test in the eta-range suite");
  app.add_option("--samples", config.samples, "Monte Carlo samples")->capture_default_str();
  app.add_option("--seed", config.seed, "base seed")->capture_default_str();
  app.add_option("--tol", config.tol, "tolerance for exact checks")->capture_default_str();

  const std::map<std::string, Suite> suites = {
      {"fidelity", Suite::kFidelity},     {"duality", Suite::kDuality},
      {"complementarity", Suite::kComplementarity},
      {"visibility", Suite::kVisibility}, {"spectrum", Suite::kSpectrum},
      {"eta-range", Suite::kEtaRange},    {"rep-theory", Suite::kRepTheory},
      {"all", Suite::kAll}};
  const std::map<std::string, OutputFormat> formats = {
      {"json", OutputFormat::kJson}, {"csv", OutputFormat::kCsv}, {"text", OutputFormat::kText}};
  app.add_option("--suite", config.suite, "suite to run")
      ->transform(CLI::CheckedTransformer(suites, CLI::ignore_case))
      ->default_str("all");
  app.add_option("--format", config.format, "output format")
      ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case))
      ->default_str("json");
  app.add_flag("--timing", config.timing, "record wall time per point (breaks byte identity)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : tranclone::kExitUsage;
  }
  if (*d_opt) config.d = d;
  if (*n_opt) config.n = n;
  if (*k_opt) config.k = k;
  if (*eta_opt) config.eta = eta;

  try {
    tranclone::validate(config);
    return tranclone::run(config, std::cout);
  } catch (const tranclone::ContractViolation& e) {
    std::cerr << "tranclone: " << e.what() << '\n';
    return tranclone::kExitUsage;
  } catch (const tranclone::ResourceError& e) {
    std::cerr << "tranclone: " << e.what() << '\n';
    return tranclone::kExitBudget;
  } catch (const std::exception& e) {
    std::cerr << "tranclone: " << e.what() << '\n';
    return tranclone::kExitFailed;
  }
}
