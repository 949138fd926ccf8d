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

// Optimality certificates for the transposition SDP
//
//   max Tr(J Omega)  s.t.  J >= 0, Tr_O J = 1_I,      Omega = Pi_sym^{(N+K)} / d_S^{N+K},
//   min Tr(X)        s.t.  X (x) 1_O >= Omega,
//
// checked through a pair of closed-form feasible points and weak duality,
// plus the permutation and unitary twirls that project onto covariant Choi
// operators.

#include <cstddef>
#include <vector>

#include "tranclone/channels.hpp"
#include "tranclone/haar.hpp"
#include "tranclone/report.hpp"
#include "tranclone/tensor.hpp"

namespace tranclone {

inline constexpr double kFeasibilityTolerance = 1e-9;
inline constexpr double kObjectiveTolerance = 1e-10;

struct PrimalProblem {
  ChannelSpec spec;
  Operator omega;
};

/// Omega = Pi_sym^{(N+K)} / d_S^{N+K}.
Operator performance_operator(const ChannelSpec& spec);
PrimalProblem make_primal_problem(const ChannelSpec& spec);

struct PrimalCheck {
  bool feasible = false;
  double value = 0.0;           ///< Tr(J Omega)
  double min_eigenvalue = 0.0;  ///< of J
  double tp_defect = 0.0;       ///< max |Tr_O J - 1|
};

PrimalCheck primal_check(const ChoiOperator& j, const ChannelSpec& spec,
                         double tol = kFeasibilityTolerance);

struct DualCertificate {
  Operator x;  ///< Hermitian operator on the input register
};

/// X = Pi_sym^{(N)} / d_S^{N+K}.
DualCertificate dual_certificate(const ChannelSpec& spec);

/// min eig(X (x) 1_O - Omega).
double dual_slack(const DualCertificate& x, const ChannelSpec& spec);
bool dual_check(const DualCertificate& x, const ChannelSpec& spec,
                double tol = kFeasibilityTolerance);

struct OptimalityCertificate {
  ChannelSpec spec;
  PrimalCheck primal;
  double dual_value = 0.0;  ///< Tr(X)
  double dual_slack = 0.0;  ///< min eig(X (x) 1 - Omega)
  bool dual_feasible = false;
  double gap = 0.0;         ///< |Tr(J Omega) - Tr(X)|
  bool passed = false;

  /// Records: primal feasibility, dual feasibility, primal/dual gap and the
  /// closed-form value d_S^N / d_S^{N+K}.
  std::vector<VerificationReport> reports(const ReportParams& params) const;
};

/// Builds the canonical primal and dual points and checks feasibility of
/// both and |Tr(J Omega) - Tr(X)| <= kObjectiveTolerance. Sub-check failures
/// are reported, not thrown.
OptimalityCertificate certify_optimality(const ChannelSpec& spec);

/// Average of (R(pi) (x) R(sigma)) J (R(pi) (x) R(sigma))^dagger over
/// pi in S_N, sigma in S_K.
ChoiOperator permutation_twirl(const ChoiOperator& j, const ChannelSpec& spec);

/// Hilbert-Schmidt projection of J onto span{R(tau) : tau in S_{N+K}}, the
/// commutant of U^{\otimes(N+K)}. Solves G c = v with
/// G_{tau,tau'} = d^{cycles(tau^-1 tau')} and v_tau = Tr(R(tau)^dagger J)
/// by pseudo-inverse (cutoff 1e-10 sigma_max).
ChoiOperator unitary_twirl(const ChoiOperator& j, const ChannelSpec& spec);

/// min eig(Pi_sym^{(N)} (x) 1^{\otimes K} - Pi_sym^{(N+K)}) >= -tol.
bool pieri_inequality_check(const ChannelSpec& spec, double tol = kFeasibilityTolerance);
double pieri_slack(const ChannelSpec& spec);

/// Random CPTP Choi operator: J = A A^dagger for a Ginibre A with `rank`
/// columns, renormalised as (M^{-1/2} (x) 1) J (M^{-1/2} (x) 1), M = Tr_O J.
/// rank = 0 means full rank; rank * d^K < d^N throws ContractViolation.
ChoiOperator random_feasible_choi(const ChannelSpec& spec, std::mt19937_64& rng,
                                  std::size_t rank = 0);

/// Measure-and-discard channel rho -> Tr(rho) 1/d^K.
ChoiOperator discard_choi(const ChannelSpec& spec);

}  // namespace tranclone
