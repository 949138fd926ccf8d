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
#include <random>

#include "doctest.h"
#include "tranclone/haar.hpp"
#include "tranclone/sdp_cert.hpp"
#include "tranclone/symgroup.hpp"

using namespace tranclone;

namespace {

std::size_t rank_of(const Operator& a, double cutoff) {
  std::size_t r = 0;
  for (double x : eigenvalues(a)) r += x > cutoff ? 1 : 0;
  return r;
}

// Average of R(tau) J R(tau)^dagger over all tau in S_{N+K}.
ChoiOperator joint_symmetrise(const ChoiOperator& j, std::size_t d, std::size_t m) {
  Operator acc = Operator::zero(j.op().row_shape());
  const auto perms = Permutation::all(m);
  for (const Permutation& tau : perms) {
    const Operator r = tensor_rep(tau, d);
    acc += r * j.op() * r.adjoint();
  }
  acc *= Complex(1.0 / static_cast<double>(perms.size()), 0.0);
  return ChoiOperator(acc, j.in_shape(), j.out_shape());
}

const ChannelSpec kSmallSpecs[] = {{2, 1, 1}, {2, 2, 1}, {2, 1, 2}, {3, 1, 1}, {2, 2, 2}};

}  // namespace

TEST_CASE("performance operator") {
  CHECK(max_abs_diff(performance_operator({2, 1, 1}), sym_projector(2, 2) * Complex(1.0 / 3, 0.0)) <
        1e-15);
  for (const ChannelSpec& spec : kSmallSpecs) {
    const Operator omega = performance_operator(spec);
    CHECK(omega.trace().real() == doctest::Approx(1.0));
    CHECK(is_psd(omega));
    CHECK(rank_of(omega, 0.5 / static_cast<double>(sym_dim(spec.d, spec.n + spec.k))) ==
          sym_dim(spec.d, spec.n + spec.k));
    CHECK(make_primal_problem(spec).omega.rows() == omega.rows());
  }
}

TEST_CASE("primal points") {
  const PrimalCheck qubit = primal_check(optimal_transpose_choi({2, 1, 1}), {2, 1, 1});
  CHECK(qubit.feasible);
  CHECK(qubit.value == doctest::Approx(2.0 / 3));
  const PrimalCheck qutrit = primal_check(optimal_transpose_choi({3, 2, 2}), {3, 2, 2});
  CHECK(qutrit.feasible);
  CHECK(qutrit.value == doctest::Approx(6.0 / 15));

  // Measure-and-discard: Tr(Omega 1/d^K) = 1/d^K by direct contraction.
  for (const ChannelSpec& spec : kSmallSpecs) {
    const ChoiOperator discard = discard_choi(spec);
    const PrimalCheck c = primal_check(discard, spec);
    CHECK(c.feasible);
    CHECK(c.value == doctest::Approx(1.0 / std::pow(spec.d, spec.k)));
    CHECK(c.value < optimal_fidelity(spec) - 1e-3);
  }

  // Scaling breaks trace preservation, a negative direction breaks positivity.
  const ChannelSpec spec{2, 1, 1};
  const ChoiOperator j = optimal_transpose_choi(spec);
  CHECK_FALSE(primal_check(ChoiOperator(j.op() * Complex(1.01, 0.0), j.in_shape(), j.out_shape()), spec)
                  .feasible);
  const Operator p = sym_projector(2, 2);
  const Operator bent = j.op() - p * Complex(0.7, 0.0) +
                        (Operator::identity(p.row_shape()) - p) * Complex(0.7 * 3, 0.0);
  CHECK_FALSE(primal_check(ChoiOperator(bent, j.in_shape(), j.out_shape()), spec).feasible);
  CHECK_THROWS_AS(primal_check(j, {2, 1, 2}), ShapeError);
}

TEST_CASE("dual certificate") {
  const DualCertificate qubit = dual_certificate({2, 1, 1});
  CHECK(max_abs_diff(qubit.x, Operator::identity(SubsystemShape{2}) * Complex(1.0 / 3, 0.0)) < 1e-15);
  CHECK(qubit.x.trace().real() == doctest::Approx(2.0 / 3));
  CHECK(dual_certificate({2, 2, 1}).x.trace().real() == doctest::Approx(3.0 / 4));
  CHECK(dual_certificate({3, 1, 2}).x.trace().real() == doctest::Approx(3.0 / 10));

  CHECK(dual_check(qubit, {2, 1, 1}));
  CHECK(dual_check(dual_certificate({3, 2, 1}), {3, 2, 1}));
  for (const ChannelSpec& spec : kSmallSpecs) {
    DualCertificate scaled = dual_certificate(spec);
    scaled.x *= Complex(0.99, 0.0);
    CHECK_FALSE(dual_check(scaled, spec));
    // The symmetric sector sits exactly at zero slack and drops by 1%.
    CHECK(dual_slack(scaled, spec) ==
          doctest::Approx(-0.01 / static_cast<double>(sym_dim(spec.d, spec.n + spec.k))));
  }
}

TEST_CASE("optimality certificates") {
  const auto check = [](const ChannelSpec& spec, double value) {
    const OptimalityCertificate cert = certify_optimality(spec);
    CHECK(cert.passed);
    CHECK(cert.primal.value == doctest::Approx(value));
    CHECK(cert.dual_value == doctest::Approx(value));
    CHECK(cert.gap <= kObjectiveTolerance);
    const auto reports = cert.reports(ReportParams{spec.d, spec.n, spec.k, std::nullopt, 0, 0});
    REQUIRE(reports.size() == 4);
    for (const auto& r : reports) CHECK(r.passed);
  };
  check({2, 1, 1}, 2.0 / 3);
  check({2, 3, 2}, 4.0 / 6);
  check({4, 1, 1}, 4.0 / 10);
  check({3, 2, 2}, 6.0 / 15);
}

TEST_CASE("weak duality on random feasible points") {
  std::mt19937_64 rng(67);
  for (const ChannelSpec& spec : kSmallSpecs) {
    const double bound = dual_certificate(spec).x.trace().real();
    const std::size_t min_rank = (spec.input_shape().total() + spec.output_shape().total() - 1) /
                                 spec.output_shape().total();
    for (std::size_t rank : {min_rank, min_rank + 1, std::size_t{0}}) {
      const ChoiOperator j = random_feasible_choi(spec, rng, rank);
      const PrimalCheck c = primal_check(j, spec);
      CHECK(c.feasible);
      CHECK(c.tp_defect < 1e-10);
      CHECK(c.value <= bound + kFeasibilityTolerance);
    }
  }
}

TEST_CASE("random feasible points need enough Kraus operators") {
  std::mt19937_64 rng(68);
  CHECK_THROWS_AS(random_feasible_choi({2, 2, 1}, rng, 1), ContractViolation);
  CHECK(primal_check(random_feasible_choi({2, 1, 2}, rng, 1), {2, 1, 2}).feasible);
}

TEST_CASE("Pieri inequality") {
  CHECK(pieri_inequality_check({2, 1, 1}));
  CHECK(pieri_inequality_check({3, 2, 1}));
  CHECK(pieri_inequality_check({2, 2, 2}));
  // Pi_1 (x) 1 - Pi_sym^(2) is the singlet projector.
  const Operator diff = Operator::identity(SubsystemShape{2, 2}) - sym_projector(2, 2);
  const auto ev = eigenvalues(diff);
  CHECK(ev[0] == doctest::Approx(0.0));
  CHECK(ev[2] == doctest::Approx(0.0));
  CHECK(ev[3] == doctest::Approx(1.0));
  CHECK(std::abs(pieri_slack({2, 1, 1})) < 1e-12);
}

TEST_CASE("permutation twirl") {
  std::mt19937_64 rng(71);
  for (const ChannelSpec& spec : kSmallSpecs) {
    const ChoiOperator canonical = optimal_transpose_choi(spec);
    CHECK(max_abs_diff(permutation_twirl(canonical, spec).op(), canonical.op()) < 1e-12);
    const ChoiOperator j = random_feasible_choi(spec, rng);
    const ChoiOperator once = permutation_twirl(j, spec);
    const ChoiOperator twice = permutation_twirl(once, spec);
    CHECK(max_abs_diff(once.op(), twice.op()) < 1e-12);
    const PrimalCheck before = primal_check(j, spec);
    const PrimalCheck after = primal_check(once, spec);
    CHECK(after.feasible);
    CHECK(after.value == doctest::Approx(before.value).epsilon(1e-12));
  }
}

TEST_CASE("unitary twirl") {
  std::mt19937_64 rng(73);
  for (const ChannelSpec& spec : kSmallSpecs) {
    const std::size_t m = spec.n + spec.k;
    const ChoiOperator canonical = optimal_transpose_choi(spec);
    CHECK(max_abs_diff(unitary_twirl(canonical, spec).op(), canonical.op()) < 1e-10);

    const ChoiOperator j = random_feasible_choi(spec, rng);
    const ChoiOperator tw = unitary_twirl(j, spec);
    for (int trial = 0; trial < 5; ++trial) {
      const Operator u = tensor_power(haar_unitary(spec.d, rng), m);
      CHECK(frobenius_norm(u * tw.op() - tw.op() * u) < 1e-9);
    }
    CHECK(primal_check(tw, spec).value == doctest::Approx(primal_check(j, spec).value).epsilon(1e-10));
    CHECK(primal_check(tw, spec).feasible);
    // Hilbert-Schmidt projection: the residual is orthogonal to every R(tau).
    const Operator residual = j.op() - tw.op();
    double worst = 0.0;
    for (const Permutation& tau : Permutation::all(m)) {
      worst = std::max(worst, std::abs(hs_inner(tensor_rep(tau, spec.d), residual)));
    }
    CHECK(worst < 1e-10);

    // After a joint permutation average the twirl stays permutation invariant.
    const ChoiOperator sym = unitary_twirl(joint_symmetrise(j, spec.d, m), spec);
    for (const Permutation& tau : Permutation::all(m)) {
      const Operator r = tensor_rep(tau, spec.d);
      CHECK(max_abs_diff(r * sym.op() * r.adjoint(), sym.op()) < 1e-10);
    }
  }
  CHECK_THROWS_AS(unitary_twirl(discard_choi({2, 4, 3}), {2, 4, 3}), ResourceError);
}
