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

// Acceptance suite: one PASS/FAIL line per criterion. Exit status is the
// number of failed criteria.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "tranclone/channels.hpp"
#include "tranclone/haar.hpp"
#include "tranclone/mixed.hpp"
#include "tranclone/sdp_cert.hpp"
#include "tranclone/symgroup.hpp"
#include "tranclone/tensor.hpp"

using namespace tranclone;

namespace {

struct Outcome {
  bool passed = true;
  std::string detail;
};

// Collects the first few failures of a criterion.
class Tally {
 public:
  void expect(bool ok, const std::string& what) {
    ++checks_;
    if (ok) return;
    ++failures_;
    if (failures_ <= 3) notes_ << (failures_ > 1 ? "; " : "") << what;
  }
  Outcome outcome(const std::string& summary) const {
    Outcome o;
    o.passed = failures_ == 0;
    std::ostringstream s;
    s << checks_ << " checks";
    if (failures_ > 0) s << ", " << failures_ << " failed: " << notes_.str();
    if (!summary.empty()) s << "; " << summary;
    o.detail = s.str();
    return o;
  }

 private:
  std::size_t checks_ = 0;
  std::size_t failures_ = 0;
  std::ostringstream notes_;
};

std::string spec_str(const ChannelSpec& s) {
  return "(" + std::to_string(s.d) + "," + std::to_string(s.n) + "," + std::to_string(s.k) + ")";
}

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.3g", v);
  return buf;
}

double ipow(std::size_t b, std::size_t e) { return std::pow(static_cast<double>(b), static_cast<double>(e)); }

// Exact binomial by the multiplicative formula.
double binomial(std::size_t n, std::size_t k) {
  unsigned long long r = 1;
  for (std::size_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return static_cast<double>(r);
}

std::vector<ChannelSpec> fidelity_grid() {
  std::vector<ChannelSpec> out;
  for (std::size_t d = 2; d <= 4; ++d)
    for (std::size_t n = 1; ipow(d, n + 1) <= 1024; ++n)
      for (std::size_t k = 1; ipow(d, n + k) <= 1024; ++k) out.push_back({d, n, k});
  return out;
}

Outcome criterion_optimal_fidelity() {
  Tally t;
  std::size_t count = 0;
  for (const ChannelSpec& spec : fidelity_grid()) {
    const double closed = binomial(spec.n + spec.d - 1, spec.d - 1) /
                          binomial(spec.n + spec.k + spec.d - 1, spec.d - 1);
    const OptimalityCertificate cert = certify_optimality(spec);
    t.expect(cert.passed, spec_str(spec) + " certificate");
    t.expect(cert.gap <= 1e-10, spec_str(spec) + " gap " + num(cert.gap));
    t.expect(std::abs(cert.primal.value - closed) <= 1e-10, spec_str(spec) + " primal value");
    t.expect(std::abs(cert.dual_value - closed) <= 1e-10, spec_str(spec) + " dual value");
    ++count;
  }
  const std::pair<ChannelSpec, double> spots[] = {
      {{2, 1, 1}, 2.0 / 3}, {{2, 2, 1}, 3.0 / 4}, {{3, 1, 1}, 1.0 / 2}};
  for (const auto& [spec, value] : spots) {
    t.expect(std::abs(certify_optimality(spec).primal.value - value) <= 1e-10,
             spec_str(spec) + " spot value");
  }
  return t.outcome(std::to_string(count) + " specs");
}

Outcome criterion_monte_carlo() {
  Tally t;
  const ChannelSpec specs[] = {{2, 1, 1}, {2, 2, 1}, {3, 1, 1}, {2, 1, 2}};
  double worst_spread = 0.0;
  for (const ChannelSpec& spec : specs) {
    const ChoiOperator j = optimal_transpose_choi(spec);
    for (std::uint64_t seed : {1u, 2u, 3u}) {
      const FidelityEstimate est = mc_average_fidelity(j, spec, 10000, SeededSampler(seed));
      const std::string tag = spec_str(spec) + " seed " + std::to_string(seed);
      t.expect(std::abs(est.estimate - optimal_fidelity(spec)) <= 3.0 * est.standard_error ||
                   std::abs(est.estimate - optimal_fidelity(spec)) <= 1e-9,
               tag + " estimate");
      t.expect(est.max - est.min <= 1e-9, tag + " spread " + num(est.max - est.min));
      worst_spread = std::max(worst_spread, est.max - est.min);
    }
  }
  return t.outcome("max spread " + num(worst_spread));
}

Outcome criterion_complementarity() {
  Tally t;
  const ChannelSpec specs[] = {{2, 1, 1}, {2, 2, 1}, {2, 1, 2}, {3, 1, 1}, {2, 2, 2}};
  double worst = 0.0;
  for (const ChannelSpec& spec : specs) {
    const Operator v = stinespring_isometry(spec);
    const Matrix gram = v.matrix().adjoint() * v.matrix();
    t.expect((gram - Matrix::Identity(gram.rows(), gram.cols())).cwiseAbs().maxCoeff() <= 1e-12,
             spec_str(spec) + " isometry");
    const SeededSampler sampler(2026, spec.d * 100 + spec.n * 10 + spec.k);
    for (std::size_t i = 0; i < 20; ++i) {
      auto rng = sampler.engine(i);
      const Operator rho = random_symmetric_state(spec.d, spec.n, rng);
      const Operator out = dilate(v, spec, rho);
      const double clone = trace_distance(clone_branch(out, spec), werner_clone(spec, rho));
      const double transpose = trace_distance(transpose_branch(out, spec), t_cp(spec, rho));
      t.expect(clone <= 1e-10, spec_str(spec) + " clone branch " + num(clone));
      t.expect(transpose <= 1e-10, spec_str(spec) + " transpose branch " + num(transpose));
      worst = std::max({worst, clone, transpose});
    }
  }
  return t.outcome("max trace distance " + num(worst));
}

Outcome criterion_visibility() {
  Tally t;
  double worst = 0.0;
  const SeededSampler sampler(6);
  std::uint64_t stream = 0;
  for (std::size_t d = 2; d <= 3; ++d) {
    for (std::size_t n = 1; n <= 2; ++n) {
      const double expected = static_cast<double>(n) / static_cast<double>(n + d);
      auto rng = sampler.engine(stream++);
      const Operator psi = haar_state(d, rng);
      for (std::size_t k = 1; k <= 3; ++k) {
        for (std::size_t site = 0; site < k; ++site) {
          const ChannelSpec spec{d, n, k};
          const double eta = single_site_visibility(spec, psi, site);
          t.expect(std::abs(eta - expected) <= 1e-9,
                   spec_str(spec) + " site " + std::to_string(site));
          worst = std::max(worst, std::abs(eta - expected));
        }
      }
    }
  }
  return t.outcome("max deviation " + num(worst));
}

Outcome criterion_clone_marginal() {
  Tally t;
  const ChannelSpec spec{2, 1, 1};
  Vector zero = Vector::Zero(2);
  zero(0) = 1.0;
  const Operator psi0 = Operator::ket(zero, SubsystemShape{2});
  const SeededSampler sampler(5);
  std::vector<Operator> states = {psi0};
  for (std::size_t i = 0; i < 5; ++i) {
    auto rng = sampler.engine(i);
    states.push_back(haar_state(2, rng));
  }
  double worst = 0.0;
  for (const Operator& psi : states) {
    const Operator clones = werner_clone(spec, Operator::projector(psi));
    for (std::size_t site = 0; site < 2; ++site) {
      const Operator marginal = partial_trace(clones, {site});
      const double f = hs_inner(Operator::projector(psi), marginal).real();
      t.expect(std::abs(f - 5.0 / 6) <= 1e-10, "marginal fidelity " + num(f));
      worst = std::max(worst, std::abs(f - 5.0 / 6));
    }
  }
  return t.outcome("max deviation from 5/6 " + num(worst));
}

Outcome criterion_sdp_structure() {
  Tally t;
  std::size_t count = 0;
  for (const ChannelSpec& spec : fidelity_grid()) {
    t.expect(pieri_inequality_check(spec), spec_str(spec) + " Pieri");
    DualCertificate scaled = dual_certificate(spec);
    t.expect(dual_check(scaled, spec), spec_str(spec) + " dual feasible");
    scaled.x *= Complex(0.99, 0.0);
    t.expect(!dual_check(scaled, spec), spec_str(spec) + " scaled dual accepted");
    ++count;
  }
  return t.outcome(std::to_string(count) + " specs");
}

Outcome criterion_mixed_spectrum() {
  Tally t;
  ScopedDimLimit limit(4096);
  std::size_t count = 0;
  for (std::size_t d = 2; d <= 4; ++d) {
    for (std::size_t n = 1; n <= 5 && ipow(d, n + 1) <= 4096; ++n) {
      const std::string tag = "(d=" + std::to_string(d) + ",N=" + std::to_string(n) + ")";
      const std::set<int> numeric = swap_sum_spectrum_numeric(d, n, 1e-6);
      const std::set<int> analytic = swap_sum_spectrum_analytic(d, n);
      t.expect(numeric == analytic, tag + " spectrum");
      t.expect(!numeric.empty() && *numeric.rbegin() == static_cast<int>(n), tag + " lambda_max");
      t.expect(!numeric.empty() &&
                   *numeric.begin() == -static_cast<int>(std::min(d - 1, n)),
               tag + " lambda_min");
      ++count;
    }
  }
  return t.outcome(std::to_string(count) + " (d,N) points");
}

Outcome criterion_eta_boundary() {
  Tally t;
  std::size_t count = 0;
  const SeededSampler sampler(8);
  double worst_action = 0.0;
  for (std::size_t d = 2; d <= 4; ++d) {
    for (std::size_t n = 1; n <= 4; ++n) {
      const std::string tag = "(d=" + std::to_string(d) + ",N=" + std::to_string(n) + ")";
      const double top = eta_max(d, n);
      const double bottom = -1.0 / (static_cast<double>(d) - 1.0);
      t.expect(ncopy_min_eigenvalue({d, n, top}) >= -1e-9, tag + " at eta_max");
      t.expect(ncopy_min_eigenvalue({d, n, bottom}) >= -1e-9, tag + " at lower bound");
      t.expect(ncopy_min_eigenvalue({d, n, top + 1e-3}) < -1e-5, tag + " above eta_max");
      t.expect(ncopy_min_eigenvalue({d, n, bottom - 1e-3}) < -1e-5, tag + " below lower bound");
      const double eta = top;
      const ChoiOperator j = ncopy_choi({d, n, eta});
      for (std::size_t i = 0; i < 10; ++i) {
        auto rng = sampler.engine(d * 1000 + n * 100 + i);
        const Operator rho = random_density(d, 1, rng);
        const Operator target = transpose_in_computational_basis(rho) * Complex(eta, 0.0) +
                                maximally_mixed(rho.row_shape()) * Complex(1.0 - eta, 0.0);
        const double dist = trace_distance(apply_channel(j, tensor_power(rho, n)), target);
        t.expect(dist <= 1e-9, tag + " channel action " + num(dist));
        worst_action = std::max(worst_action, dist);
      }
      ++count;
    }
  }
  return t.outcome(std::to_string(count) + " (d,N) points, max action error " + num(worst_action));
}

Outcome criterion_rep_theory() {
  Tally t;
  double cox = 0.0, jm = 0.0;
  for (std::size_t n = 1; n <= 6; ++n) {
    for (const YoungDiagram& shape : enumerate_diagrams(n, n)) {
      const IrrepMatrices irrep = yy_irrep(shape);
      const double c = coxeter_defect(irrep);
      const double j = jm_diagonal_defect(irrep);
      t.expect(c <= 1e-10, "Coxeter n=" + std::to_string(n));
      t.expect(j <= 1e-10, "JM n=" + std::to_string(n));
      cox = std::max(cox, c);
      jm = std::max(jm, j);
    }
  }
  for (std::size_t d = 2; d <= 3; ++d) {
    for (std::size_t n = 1; n <= 5; ++n) {
      std::uint64_t total = 0;
      for (const YoungDiagram& shape : enumerate_diagrams(n, d)) {
        total += weyl_dimension(shape, d) * syt_count(shape);
      }
      t.expect(static_cast<double>(total) == ipow(d, n),
               "Schur-Weyl d=" + std::to_string(d) + " n=" + std::to_string(n));
    }
  }
  return t.outcome("max Coxeter defect " + num(cox) + ", max JM defect " + num(jm));
}

Outcome criterion_pure_vs_mixed() {
  Tally t;
  for (std::size_t n = 1; n <= 5; ++n) {
    t.expect(eta_pure_max(2, n) == eta_max(2, n), "d=2 N=" + std::to_string(n));
  }
  for (std::size_t n = 2; n <= 3; ++n) {
    t.expect(eta_pure_max(3, n) > eta_max(3, n), "d=3 N=" + std::to_string(n));
  }
  return t.outcome("");
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"optimal fidelity certified on the grid", criterion_optimal_fidelity},
      {"Monte Carlo agreement and constancy", criterion_monte_carlo},
      {"complementarity of cloning and transposition", criterion_complementarity},
      {"single-site visibility N/(N+d)", criterion_visibility},
      {"1->2 qubit clone marginal fidelity 5/6", criterion_clone_marginal},
      {"Pieri inequality and dual sensitivity", criterion_sdp_structure},
      {"swap-sum spectrum from Jucys-Murphy contents", criterion_mixed_spectrum},
      {"visibility interval boundaries and channel action", criterion_eta_boundary},
      {"Young-Yamanouchi relations and Schur-Weyl dimensions", criterion_rep_theory},
      {"pure versus mixed thresholds", criterion_pure_vs_mixed},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto started = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.passed = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                        std::chrono::steady_clock::now() - started)
                        .count();
    std::printf("[%s] criterion %zu: %s (%s; %lld ms)\n", o.passed ? "PASS" : "FAIL", i + 1,
                criteria[i].first.c_str(), o.detail.c_str(), static_cast<long long>(ms));
    std::fflush(stdout);
    if (!o.passed) ++failed;
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed,
              criteria.size());
  return failed;
}
