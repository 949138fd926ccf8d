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

#include "tranclone/cli.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <map>

#include "tranclone/channels.hpp"
#include "tranclone/errors.hpp"
#include "tranclone/haar.hpp"
#include "tranclone/mixed.hpp"
#include "tranclone/parallel.hpp"
#include "tranclone/sdp_cert.hpp"
#include "tranclone/symgroup.hpp"

namespace tranclone {

namespace {

constexpr std::size_t kGridMaxDim = 1024;
constexpr std::size_t kComplementarityInputs = 20;
constexpr std::size_t kChannelActionInputs = 10;
constexpr std::size_t kRepTheoryMaxBoxes = 7;
constexpr double kSharpnessStep = 1e-3;

const std::map<std::string_view, Suite>& suite_table() {
  static const std::map<std::string_view, Suite> table = {
      {"fidelity", Suite::kFidelity},
      {"duality", Suite::kDuality},
      {"complementarity", Suite::kComplementarity},
      {"visibility", Suite::kVisibility},
      {"spectrum", Suite::kSpectrum},
      {"eta-range", Suite::kEtaRange},
      {"rep-theory", Suite::kRepTheory},
      {"all", Suite::kAll},
  };
  return table;
}

constexpr Suite kConcreteSuites[] = {Suite::kFidelity,   Suite::kDuality,  Suite::kComplementarity,
                                     Suite::kVisibility, Suite::kSpectrum, Suite::kEtaRange,
                                     Suite::kRepTheory};

bool uses_k(Suite suite) {
  return suite == Suite::kFidelity || suite == Suite::kDuality ||
         suite == Suite::kComplementarity || suite == Suite::kVisibility;
}

std::size_t ipow(std::size_t base, std::size_t exp) {
  std::size_t out = 1;
  for (std::size_t i = 0; i < exp; ++i) {
    if (out > (std::size_t{1} << 40)) return out;  // saturate; only compared against budgets
    out *= base;
  }
  return out;
}

// Largest dense dimension a point needs.
std::size_t point_dim(const GridPoint& p) {
  switch (p.suite) {
    case Suite::kComplementarity:
      return ipow(p.d, p.n + 2 * *p.k);
    case Suite::kSpectrum:
    case Suite::kEtaRange:
      return ipow(p.d, p.n + 1);
    case Suite::kRepTheory:
      return ipow(p.d, p.n);
    default:
      return ipow(p.d, p.n + *p.k);
  }
}

std::vector<std::string> claim_ids(const GridPoint& p, const RunConfig& config) {
  switch (p.suite) {
    case Suite::kFidelity:
      return {"thm1.fidelity", "thm1.mc_fidelity", "thm1.worst_case", "thm1.constancy"};
    case Suite::kDuality:
      return {"lemB1.primal_feasibility", "lemB1.dual_feasibility", "thm1.duality_gap",
              "appB.pieri", "thmB2.covariance"};
    case Suite::kComplementarity:
      return {"thm2.isometry", "thm2.complementarity.clone", "thm2.complementarity.transpose",
              "eq9.clone_fidelity"};
    case Suite::kVisibility:
      return {"eq6.visibility", "eq6.affine_residual"};
    case Suite::kSpectrum:
      return {"lemD1.spectrum", "lemD1.lambda_max", "lemD1.lambda_min"};
    case Suite::kEtaRange: {
      std::vector<std::string> ids = {"thm3.eta_max",      "thm3.eta_max_sharp",
                                      "thm3.eta_min",      "thm3.eta_min_sharp",
                                      "thm3.channel_action", "thm3.pure_vs_mixed"};
      if (config.eta) ids.push_back("thm3.eta_feasible");
      return ids;
    }
    case Suite::kRepTheory:
      return {"appE.coxeter", "appE.jm_diagonal", "appE.schur_weyl", "appA.haar_moment"};
    case Suite::kAll:
      break;
  }
  return {};
}

ReportParams params_of(const GridPoint& p, const RunConfig& config) {
  ReportParams params;
  params.d = p.d;
  params.n = p.n;
  params.k = p.k;
  if (p.suite == Suite::kEtaRange) params.eta = config.eta;
  params.samples = config.samples;
  params.seed = config.seed;
  return params;
}

// Substream per point, so that a record does not depend on which other
// points share the run.
SeededSampler sampler_of(const GridPoint& p, const RunConfig& config) {
  const std::uint64_t stream = (static_cast<std::uint64_t>(p.suite) << 48) |
                               (static_cast<std::uint64_t>(p.d) << 32) |
                               (static_cast<std::uint64_t>(p.n) << 16) |
                               static_cast<std::uint64_t>(p.k.value_or(0));
  return SeededSampler(config.seed, stream);
}

double clamp_violation(double min_eig) { return std::max(0.0, -min_eig); }

std::uint64_t factorial(std::size_t n) {
  std::uint64_t f = 1;
  for (std::size_t i = 2; i <= n; ++i) f *= i;
  return f;
}

// ---------------------------------------------------------------------------
// Suites
// ---------------------------------------------------------------------------

std::vector<VerificationReport> fidelity_suite(const GridPoint& p, const RunConfig& config) {
  const ChannelSpec spec{p.d, p.n, *p.k};
  const ReportParams params = params_of(p, config);
  const ChoiOperator j = optimal_transpose_choi(spec);
  const double expected = optimal_fidelity(spec);
  const double value = hs_inner(performance_operator(spec), j.op()).real();

  const SeededSampler sampler = sampler_of(p, config);
  const auto values = sampled_fidelities(j, spec, config.samples, sampler);
  const FidelityEstimate est = summarize(values);
  return {
      VerificationReport::make("thm1.fidelity", params, value, expected, kObjectiveTolerance),
      VerificationReport::make("thm1.mc_fidelity", params, est.estimate, expected,
                               mc_tolerance(est)),
      VerificationReport::make("thm1.worst_case", params, est.min, expected, config.tol),
      VerificationReport::make("thm1.constancy", params, est.max - est.min, 0.0, config.tol),
  };
}

std::vector<VerificationReport> duality_suite(const GridPoint& p, const RunConfig& config) {
  const ChannelSpec spec{p.d, p.n, *p.k};
  const ReportParams params = params_of(p, config);
  std::vector<VerificationReport> out;
  for (auto& r : certify_optimality(spec).reports(params)) {
    if (r.claim_id != "thm1.fidelity") out.push_back(std::move(r));
  }
  out.push_back(VerificationReport::make("appB.pieri", params,
                                         clamp_violation(pieri_slack(spec)), 0.0,
                                         kFeasibilityTolerance));
  if (factorial(spec.n + spec.k) <= 720) {
    const ChoiOperator j = optimal_transpose_choi(spec);
    out.push_back(VerificationReport::make("thmB2.covariance", params,
                                           max_abs_diff(unitary_twirl(j, spec).op(), j.op()),
                                           0.0, config.tol));
  } else {
    out.push_back(VerificationReport::skip("thmB2.covariance", params,
                                           "more than 720 permutations"));
  }
  return out;
}

std::vector<VerificationReport> complementarity_suite(const GridPoint& p,
                                                      const RunConfig& config) {
  const ChannelSpec spec{p.d, p.n, *p.k};
  const ReportParams params = params_of(p, config);
  const Operator v = stinespring_isometry(spec);
  const Matrix gram = v.matrix().adjoint() * v.matrix();
  const double isometry_defect =
      (gram - Matrix::Identity(gram.rows(), gram.cols())).cwiseAbs().maxCoeff();

  const SeededSampler sampler = sampler_of(p, config);
  const std::size_t inputs = std::min<std::size_t>(config.samples, kComplementarityInputs);
  std::vector<double> clone_err(inputs);
  std::vector<double> transpose_err(inputs);
  std::vector<double> clone_fid(inputs);
  const double expected_fid = optimal_fidelity(spec);
  parallel_for(inputs, [&](std::size_t i) {
    auto rng = sampler.engine(i);
    const Operator rho = random_symmetric_state(spec.d, spec.n, rng);
    const Operator dilated = dilate(v, spec, rho);
    clone_err[i] = trace_distance(clone_branch(dilated, spec), werner_clone(spec, rho));
    transpose_err[i] = trace_distance(transpose_branch(dilated, spec), t_cp(spec, rho));
    const Operator psi = haar_state(spec.d, rng);
    const Operator clones = werner_clone(spec, product_state(psi, spec.n));
    clone_fid[i] = hs_inner(product_state(psi, spec.n + spec.k), clones).real();
  });
  const auto worst = [](const std::vector<double>& v) {
    return v.empty() ? 0.0 : *std::max_element(v.begin(), v.end());
  };
  std::vector<double> expected_fids(inputs, expected_fid);
  return {
      VerificationReport::make("thm2.isometry", params, isometry_defect, 0.0, 1e-12),
      VerificationReport::make("thm2.complementarity.clone", params, worst(clone_err), 0.0,
                               1e-10),
      VerificationReport::make("thm2.complementarity.transpose", params, worst(transpose_err),
                               0.0, 1e-10),
      VerificationReport::make("eq9.clone_fidelity", params, clone_fid, expected_fids,
                               config.tol),
  };
}

std::vector<VerificationReport> visibility_suite(const GridPoint& p, const RunConfig& config) {
  const ChannelSpec spec{p.d, p.n, *p.k};
  const ReportParams params = params_of(p, config);
  auto rng = sampler_of(p, config).engine(0);
  const Operator psi = haar_state(spec.d, rng);
  std::vector<double> computed;
  double residual = 0.0;
  for (std::size_t site = 0; site < spec.k; ++site) {
    const VisibilityFit fit = fit_single_site_visibility(spec, psi, site);
    computed.push_back(fit.eta);
    residual = std::max(residual, fit.residual);
  }
  const double expected =
      static_cast<double>(spec.n) / static_cast<double>(spec.n + spec.d);
  return {
      VerificationReport::make("eq6.visibility", params, computed,
                               std::vector<double>(spec.k, expected), config.tol),
      VerificationReport::make("eq6.affine_residual", params, residual, 0.0, config.tol),
  };
}

std::vector<VerificationReport> spectrum_suite(const GridPoint& p, const RunConfig& config) {
  const ReportParams params = params_of(p, config);
  const std::set<int> numeric = swap_sum_spectrum_numeric(p.d, p.n);
  const std::set<int> analytic = swap_sum_spectrum_analytic(p.d, p.n);
  const std::vector<double> computed(numeric.begin(), numeric.end());
  const std::vector<double> expected(analytic.begin(), analytic.end());
  const auto n = static_cast<double>(p.n);
  const auto low = -static_cast<double>(std::min(p.d - 1, p.n));
  return {
      VerificationReport::make("lemD1.spectrum", params, computed, expected, 0.0),
      VerificationReport::make("lemD1.lambda_max", params,
                               computed.empty() ? NAN : computed.back(), n, 0.0),
      VerificationReport::make("lemD1.lambda_min", params,
                               computed.empty() ? NAN : computed.front(), low, 0.0),
  };
}

// Smallest eigenvalue of the N-copy Choi operator predicted from the swap-sum
// extremes.
double predicted_min_eigenvalue(std::size_t d, std::size_t n_copies, double eta) {
  const double n = static_cast<double>(n_copies);
  const double noise = n / static_cast<double>(d);
  const double hi = n;
  const double lo = -static_cast<double>(std::min(d - 1, n_copies));
  return std::min(eta * hi + (1.0 - eta) * noise, eta * lo + (1.0 - eta) * noise) / n;
}

std::vector<VerificationReport> eta_range_suite(const GridPoint& p, const RunConfig& config) {
  const ReportParams params = params_of(p, config);
  const double top = eta_max(p.d, p.n);
  const double bottom = eta_min(p.d);
  const auto lam = [&](double eta) {
    return ncopy_min_eigenvalue(NoisyTransposeParams{p.d, p.n, eta});
  };
  std::vector<VerificationReport> out;
  out.push_back(VerificationReport::make("thm3.eta_max", params, clamp_violation(lam(top)), 0.0,
                                         config.tol));
  const double over = top + kSharpnessStep;
  out.push_back(VerificationReport::make("thm3.eta_max_sharp", params, lam(over),
                                         predicted_min_eigenvalue(p.d, p.n, over),
                                         config.tol));
  out.push_back(VerificationReport::make("thm3.eta_min", params, clamp_violation(lam(bottom)),
                                         0.0, config.tol));
  const double under = bottom - kSharpnessStep;
  out.push_back(VerificationReport::make("thm3.eta_min_sharp", params, lam(under),
                                         predicted_min_eigenvalue(p.d, p.n, under),
                                         config.tol));

  const double eta = config.eta.value_or(top);
  const ChoiOperator j = ncopy_choi(NoisyTransposeParams{p.d, p.n, eta});
  const SeededSampler sampler = sampler_of(p, config);
  std::vector<double> err(kChannelActionInputs);
  for (std::size_t i = 0; i < kChannelActionInputs; ++i) {
    auto rng = sampler.engine(i);
    const Operator rho = random_density(p.d, 1, rng);
    const Operator target = transpose_in_computational_basis(rho) * Complex(eta, 0.0) +
                            maximally_mixed(rho.row_shape()) * Complex(1.0 - eta, 0.0);
    err[i] = trace_distance(apply_channel(j, tensor_power(rho, p.n)), target);
  }
  out.push_back(VerificationReport::make("thm3.channel_action", params,
                                         *std::max_element(err.begin(), err.end()), 0.0,
                                         config.tol));

  // Mixed inputs can never beat pure ones; the thresholds agree for qubits
  // and for a single copy.
  const double pure = eta_pure_max(p.d, p.n);
  const bool equal_expected = p.d == 2 || p.n <= 1;
  if (equal_expected) {
    out.push_back(VerificationReport::make("thm3.pure_vs_mixed", params, pure, top, 1e-15));
  } else {
    // Strict ordering, recorded as an indicator.
    auto order = VerificationReport::make("thm3.pure_vs_mixed", params, pure > top ? 1.0 : 0.0,
                                          1.0, 0.0);
    order.note = "eta_pure_max > eta_max";
    out.push_back(order);
  }

  if (config.eta) {
    out.push_back(VerificationReport::make("thm3.eta_feasible", params,
                                           clamp_violation(lam(*config.eta)), 0.0, config.tol));
  }
  return out;
}

std::vector<VerificationReport> rep_theory_suite(const GridPoint& p, const RunConfig& config) {
  const ReportParams params = params_of(p, config);
  std::vector<VerificationReport> out;
  if (p.n <= kRepTheoryMaxBoxes) {
    double coxeter = 0.0;
    double jm = 0.0;
    for (const YoungDiagram& shape : enumerate_diagrams(p.n, p.n)) {
      const IrrepMatrices irrep = yy_irrep(shape);
      coxeter = std::max(coxeter, coxeter_defect(irrep));
      jm = std::max(jm, jm_diagonal_defect(irrep));
    }
    out.push_back(VerificationReport::make("appE.coxeter", params, coxeter, 0.0, 1e-10));
    out.push_back(VerificationReport::make("appE.jm_diagonal", params, jm, 0.0, 1e-10));
  } else {
    out.push_back(VerificationReport::skip("appE.coxeter", params, "more than 7 boxes"));
    out.push_back(VerificationReport::skip("appE.jm_diagonal", params, "more than 7 boxes"));
  }
  out.push_back(VerificationReport::make(
      "appE.schur_weyl", params, static_cast<double>(schur_weyl_dimension_sum(p.d, p.n)),
      static_cast<double>(ipow(p.d, p.n)), 0.0));
  out.push_back(moment_identity_check(p.d, p.n, config.samples, sampler_of(p, config)));
  out.back().params = params;
  return out;
}

}  // namespace

std::optional<Suite> parse_suite(std::string_view name) {
  const auto& table = suite_table();
  const auto it = table.find(name);
  if (it == table.end()) return std::nullopt;
  return it->second;
}

std::string_view suite_name(Suite suite) {
  for (const auto& [name, value] : suite_table()) {
    if (value == suite) return name;
  }
  return "unknown";
}

std::optional<OutputFormat> parse_format(std::string_view name) {
  if (name == "json") return OutputFormat::kJson;
  if (name == "csv") return OutputFormat::kCsv;
  if (name == "text") return OutputFormat::kText;
  return std::nullopt;
}

void validate(const RunConfig& config) {
  if (config.d && *config.d < 2) throw ContractViolation("--d must be at least 2");
  if (config.n && *config.n < 1) throw ContractViolation("--n must be at least 1");
  if (config.k && *config.k < 1) throw ContractViolation("--k must be at least 1");
  if (config.samples < 1) throw ContractViolation("--samples must be at least 1");
  if (!(config.tol > 0.0) || !std::isfinite(config.tol)) {
    throw ContractViolation("--tol must be positive");
  }
  if (config.eta && !std::isfinite(*config.eta)) throw ContractViolation("--eta must be finite");
}

std::vector<GridPoint> expand_grid(const RunConfig& config) {
  validate(config);
  std::vector<Suite> suites;
  if (config.suite == Suite::kAll) {
    suites.assign(std::begin(kConcreteSuites), std::end(kConcreteSuites));
  } else {
    suites.push_back(config.suite);
  }
  const bool grid_mode = !config.d || !config.n || (!config.k);
  const std::vector<std::size_t> ds =
      config.d ? std::vector<std::size_t>{*config.d} : std::vector<std::size_t>{2, 3};

  std::vector<GridPoint> points;
  for (Suite suite : suites) {
    const bool with_k = uses_k(suite);
    for (std::size_t d : ds) {
      // Largest N (and K) with d^(N+1) <= kGridMaxDim.
      std::size_t top = 1;
      while (ipow(d, top + 2) <= kGridMaxDim) ++top;
      const std::vector<std::size_t> ns = [&] {
        if (config.n) return std::vector<std::size_t>{*config.n};
        std::vector<std::size_t> v;
        for (std::size_t n = 1; n <= top; ++n) v.push_back(n);
        return v;
      }();
      for (std::size_t n : ns) {
        std::vector<std::optional<std::size_t>> ks;
        if (!with_k) {
          ks.emplace_back(std::nullopt);
        } else if (config.k) {
          ks.emplace_back(*config.k);
        } else {
          for (std::size_t k = 1; k <= top; ++k) ks.emplace_back(k);
        }
        for (const auto& k : ks) {
          GridPoint point{suite, d, n, k};
          const bool explicit_point = config.d && config.n && (config.k || !with_k);
          if (!explicit_point && grid_mode) {
            const std::size_t reach = ipow(d, n + k.value_or(1));
            if (reach > kGridMaxDim) continue;
            if (point_dim(point) > dense_dim_limit()) continue;
            if (suite == Suite::kRepTheory && n > kRepTheoryMaxBoxes) continue;
          }
          points.push_back(point);
        }
      }
    }
  }
  return points;
}

std::vector<VerificationReport> evaluate(const GridPoint& point, const RunConfig& config) {
  const auto started = std::chrono::steady_clock::now();
  std::vector<VerificationReport> out;
  try {
    if (point_dim(point) > dense_dim_limit()) {
      throw ResourceError("dense dimension " + std::to_string(point_dim(point)) +
                          " exceeds the budget of " + std::to_string(dense_dim_limit()));
    }
    switch (point.suite) {
      case Suite::kFidelity:
        out = fidelity_suite(point, config);
        break;
      case Suite::kDuality:
        out = duality_suite(point, config);
        break;
      case Suite::kComplementarity:
        out = complementarity_suite(point, config);
        break;
      case Suite::kVisibility:
        out = visibility_suite(point, config);
        break;
      case Suite::kSpectrum:
        out = spectrum_suite(point, config);
        break;
      case Suite::kEtaRange:
        out = eta_range_suite(point, config);
        break;
      case Suite::kRepTheory:
        out = rep_theory_suite(point, config);
        break;
      case Suite::kAll:
        throw ContractViolation("evaluate: expand the grid first");
    }
  } catch (const ResourceError& e) {
    out.clear();
    for (const auto& id : claim_ids(point, config)) {
      out.push_back(VerificationReport::skip(id, params_of(point, config), e.what()));
    }
  } catch (const Error& e) {
    out.clear();
    for (const auto& id : claim_ids(point, config)) {
      auto r = VerificationReport::make(id, params_of(point, config), NAN, 0.0, config.tol);
      r.note = e.what();
      out.push_back(std::move(r));
    }
  }
  if (config.timing && !out.empty()) {
    const auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
        std::chrono::steady_clock::now() - started);
    // The point's wall time is charged to each of its records.
    for (auto& r : out) r.runtime_ms = elapsed.count();
  }
  return out;
}

int run(const RunConfig& config, std::ostream& out) {
  const std::vector<GridPoint> points = expand_grid(config);
  std::vector<std::vector<VerificationReport>> results(points.size());
  parallel_for(points.size(), [&](std::size_t i) { results[i] = evaluate(points[i], config); });

  if (config.format == OutputFormat::kCsv) out << csv_header() << '\n';
  bool failed = false;
  bool skipped = false;
  for (const auto& batch : results) {
    for (const auto& r : batch) {
      switch (config.format) {
        case OutputFormat::kJson:
          out << to_json_line(r) << '\n';
          break;
        case OutputFormat::kCsv:
          out << to_csv_row(r) << '\n';
          break;
        case OutputFormat::kText:
          out << to_text_line(r) << '\n';
          break;
      }
      if (r.skipped) {
        skipped = true;
      } else if (!r.passed) {
        failed = true;
      }
    }
  }
  out.flush();
  if (failed) return kExitFailed;
  if (skipped) return kExitBudget;
  return kExitPassed;
}

}  // namespace tranclone
