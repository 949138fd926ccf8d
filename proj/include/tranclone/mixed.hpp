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

// Mixed-state N -> 1 transposition with white noise,
//
//   C_N(rho^{\otimes N}) = eta rho^T + (1 - eta) 1/d,
//
// through the swap-sum operator T_N. The output system (often labelled 0) is stored
// last here: T_N = sum_{i<N} F_{i,N} on (C^d)^{\otimes(N+1)}, so the input
// register comes first as everywhere else in the library.

#include <cstddef>
#include <set>

#include "tranclone/channels.hpp"
#include "tranclone/tensor.hpp"

namespace tranclone {

struct NoisyTransposeParams {
  std::size_t d = 2;
  std::size_t n_copies = 1;
  double eta = 0.0;

  /// Throws ContractViolation unless d >= 2 and n_copies >= 1.
  void validate() const;
};

/// sum of the swaps between the output system and each input copy.
Operator swap_sum(std::size_t d, std::size_t n_copies);

/// Contents of the box holding N+1 over all standard tableaux of shapes
/// mu |- N+1 with at most d rows.
std::set<int> swap_sum_spectrum_analytic(std::size_t d, std::size_t n_copies);

/// Eigenvalues of swap_sum rounded to integers. Throws StructureError if an
/// eigenvalue is further than `window` from an integer.
std::set<int> swap_sum_spectrum_numeric(std::size_t d, std::size_t n_copies,
                                        double window = 1e-6);

/// (1/N)(eta T_N + (1 - eta)(N/d) 1), input register (C^d)^{\otimes N}
/// followed by one output.
ChoiOperator ncopy_choi(const NoisyTransposeParams& params);

/// 1/(d+1) for N <= d-1, N/(d(d-1)+N) otherwise.
double eta_max(std::size_t d, std::size_t n_copies);
/// -1/(d-1).
double eta_min(std::size_t d);
/// N/(N+d), the threshold when inputs are restricted to pure states.
double eta_pure_max(std::size_t d, std::size_t n_copies);

/// min eig(ncopy_choi(params)).
double ncopy_min_eigenvalue(const NoisyTransposeParams& params);
/// ncopy_min_eigenvalue(params) >= -tol.
bool eta_feasible(const NoisyTransposeParams& params, double tol = 1e-9);
/// eta_min(d) <= eta <= eta_max(d, N).
bool eta_in_closed_form_range(const NoisyTransposeParams& params);

}  // namespace tranclone
