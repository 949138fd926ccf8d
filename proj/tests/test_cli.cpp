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

#include <cmath>
#include <set>
#include <sstream>
#include <string>

#include "doctest.h"
#include "json.hpp"
#include "tranclone/cli.hpp"
#include "tranclone/errors.hpp"
#include "tranclone/report.hpp"
#include "tranclone/tensor.hpp"

using namespace tranclone;

namespace {

std::vector<nlohmann::ordered_json> records(const std::string& text) {
  std::vector<nlohmann::ordered_json> out;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) out.push_back(nlohmann::ordered_json::parse(line));
  return out;
}

RunConfig point(Suite suite, std::size_t d, std::size_t n, std::optional<std::size_t> k) {
  RunConfig c;
  c.suite = suite;
  c.d = d;
  c.n = n;
  c.k = k;
  c.samples = 200;
  c.seed = 42;
  return c;
}

}  // namespace

TEST_CASE("report records") {
  const ReportParams p{2, 1, 1, std::nullopt, 10, 7};
  CHECK(VerificationReport::make("x", p, 1.0, 1.0 + 1e-12, 1e-10).passed);
  CHECK_FALSE(VerificationReport::make("x", p, 1.0, 1.1, 1e-10).passed);
  CHECK_FALSE(VerificationReport::make("x", p, NAN, 0.0, 1.0).passed);
  CHECK_FALSE(within_tolerance({1.0, 2.0}, {1.0}, 1.0));
  CHECK(within_tolerance({1.0, 2.0}, {1.0, 2.5}, 0.5));
  CHECK_FALSE(within_tolerance({1.0, 2.0}, {1.0, 2.6}, 0.5));
  const auto skipped = VerificationReport::skip("x", p, "budget");
  CHECK(skipped.status() == "skipped");

  const auto j = nlohmann::json::parse(to_json_line(VerificationReport::make("thm1.fidelity", p, 2.0 / 3, 2.0 / 3, 1e-10)));
  CHECK(j["claim_id"] == "thm1.fidelity");
  CHECK(j["computed"].get<double>() == 2.0 / 3);
  CHECK(j["eta"].is_null());
  CHECK(j["seed"] == 7);
  const auto v = nlohmann::json::parse(to_json_line(VerificationReport::make("v", p, std::vector<double>{1, 2}, std::vector<double>{1, 2}, 0.0)));
  CHECK(v["computed"].is_array());

  CHECK(csv_header() == "claim_id,d,n,k,eta,computed,expected,tolerance,passed,seed,runtime_ms");
  const std::string row = to_csv_row(VerificationReport::make("v", p, std::vector<double>{1, 2}, std::vector<double>{1, 2}, 0.0));
  CHECK(row == "v,2,1,1,,1;2,1;2,0,true,7,0");
  CHECK(to_text_line(skipped).rfind("SKIP", 0) == 0);
}

TEST_CASE("config parsing and validation") {
  CHECK(parse_suite("eta-range") == Suite::kEtaRange);
  CHECK(parse_suite("rep-theory") == Suite::kRepTheory);
  CHECK_FALSE(parse_suite("nope").has_value());
  CHECK(suite_name(Suite::kComplementarity) == "complementarity");
  CHECK(parse_format("csv") == OutputFormat::kCsv);
  CHECK_FALSE(parse_format("xml").has_value());

  RunConfig c;
  CHECK_NOTHROW(validate(c));
  c.d = 1;
  CHECK_THROWS_AS(validate(c), ContractViolation);
  c = RunConfig{};
  c.samples = 0;
  CHECK_THROWS_AS(validate(c), ContractViolation);
  c = RunConfig{};
  c.tol = 0.0;
  CHECK_THROWS_AS(validate(c), ContractViolation);
  c = RunConfig{};
  c.n = 0;
  CHECK_THROWS_AS(validate(c), ContractViolation);
}

TEST_CASE("grid expansion") {
  RunConfig c;
  c.suite = Suite::kFidelity;
  const auto pts = expand_grid(c);
  std::set<std::tuple<std::size_t, std::size_t, std::size_t>> seen;
  for (const auto& p : pts) {
    REQUIRE(p.k.has_value());
    CHECK((p.d == 2 || p.d == 3));
    CHECK(std::pow(p.d, p.n + *p.k) <= 1024);
    seen.insert({p.d, p.n, *p.k});
  }
  CHECK(seen.size() == pts.size());
  CHECK(seen.count({2, 1, 1}) == 1);
  CHECK(seen.count({2, 5, 5}) == 1);
  CHECK(seen.count({3, 3, 3}) == 1);
  CHECK(seen.count({3, 4, 3}) == 0);

  c.suite = Suite::kSpectrum;
  for (const auto& p : expand_grid(c)) CHECK_FALSE(p.k.has_value());

  // Explicit points are kept whatever their size; k is ignored where unused.
  RunConfig e = point(Suite::kEtaRange, 3, 1, std::nullopt);
  const auto one = expand_grid(e);
  REQUIRE(one.size() == 1);
  CHECK(one[0].d == 3);
}

TEST_CASE("fidelity record") {
  std::ostringstream out;
  CHECK(run(point(Suite::kFidelity, 2, 1, 1), out) == kExitPassed);
  const auto recs = records(out.str());
  REQUIRE(!recs.empty());
  CHECK(recs[0]["claim_id"] == "thm1.fidelity");
  CHECK(recs[0]["computed"].get<double>() == doctest::Approx(2.0 / 3));
  CHECK(recs[0]["expected"].get<double>() == doctest::Approx(2.0 / 3));
  CHECK(recs[0]["passed"] == true);
}

TEST_CASE("eta outside the feasible range fails") {
  RunConfig c = point(Suite::kEtaRange, 3, 1, std::nullopt);
  c.eta = 0.26;
  std::ostringstream out;
  CHECK(run(c, out) == kExitFailed);
  bool found = false;
  for (const auto& r : records(out.str())) {
    if (r["claim_id"] == "thm3.eta_feasible") {
      found = true;
      CHECK(r["passed"] == false);
      CHECK(r["eta"].get<double>() == 0.26);
    } else {
      CHECK(r["passed"] == true);
    }
  }
  CHECK(found);
  c.eta = 0.2;
  std::ostringstream ok;
  CHECK(run(c, ok) == kExitPassed);
}

TEST_CASE("every suite passes at the smallest point") {
  for (Suite s : {Suite::kFidelity, Suite::kDuality, Suite::kComplementarity, Suite::kVisibility,
                  Suite::kSpectrum, Suite::kEtaRange, Suite::kRepTheory}) {
    std::ostringstream out;
    CAPTURE(suite_name(s));
    CHECK(run(point(s, 2, 2, 1), out) == kExitPassed);
    std::set<std::string> keys;
    for (const auto& r : records(out.str())) {
      std::vector<std::string> names;
      for (const auto& [key, value] : r.items()) names.push_back(key);
      CHECK(names == std::vector<std::string>{"claim_id", "status", "d", "n", "k", "eta", "samples",
                                              "computed", "expected", "tolerance", "passed", "seed",
                                              "runtime_ms", "note"});
    }
  }
}

TEST_CASE("budget overrun is reported as skipped") {
  ScopedDimLimit limit(64);
  std::ostringstream out;
  CHECK(run(point(Suite::kDuality, 2, 4, 3), out) == kExitBudget);
  const auto recs = records(out.str());
  REQUIRE(!recs.empty());
  for (const auto& r : recs) CHECK(r["status"] == "skipped");
}

TEST_CASE("output is deterministic") {
  RunConfig c = point(Suite::kAll, 2, 1, 1);
  std::ostringstream a, b;
  CHECK(run(c, a) == kExitPassed);
  CHECK(run(c, b) == kExitPassed);
  CHECK(a.str() == b.str());
  c.format = OutputFormat::kCsv;
  std::ostringstream csv;
  run(c, csv);
  CHECK(csv.str().rfind(csv_header() + "\n", 0) == 0);
  c.seed = 43;
  std::ostringstream other;
  run(c, other);
  CHECK(other.str() != csv.str());
}
