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

#include "tranclone/mixed.hpp"

#include <algorithm>
#include <cmath>

#include "tranclone/errors.hpp"
#include "tranclone/symgroup.hpp"

namespace tranclone {

void NoisyTransposeParams::validate() const {
  if (d < 2) throw ContractViolation("NoisyTransposeParams: d must be at least 2");
  if (n_copies < 1) throw ContractViolation("NoisyTransposeParams: need at least one copy");
  if (!std::isfinite(eta)) throw ContractViolation("NoisyTransposeParams: eta is not finite");
}

Operator swap_sum(std::size_t d, std::size_t n_copies) {
  NoisyTransposeParams{d, n_copies, 0.0}.validate();
  return jm_tensor(n_copies + 1, d, n_copies + 1);
}

std::set<int> swap_sum_spectrum_analytic(std::size_t d, std::size_t n_copies) {
  NoisyTransposeParams{d, n_copies, 0.0}.validate();
  const auto contents = jm_spectrum_analytic(n_copies + 1, n_copies + 1, d);
  return {contents.begin(), contents.end()};
}

std::set<int> swap_sum_spectrum_numeric(std::size_t d, std::size_t n_copies, double window) {
  std::set<int> out;
  for (double lambda : eigenvalues(swap_sum(d, n_copies))) {
    const double rounded = std::round(lambda);
    if (std::abs(lambda - rounded) > window) {
      throw StructureError("swap_sum: eigenvalue " + std::to_string(lambda) +
                           " is not an integer");
    }
    out.insert(static_cast<int>(rounded));
  }
  return out;
}

ChoiOperator ncopy_choi(const NoisyTransposeParams& params) {
  params.validate();
  const double n = static_cast<double>(params.n_copies);
  const double d = static_cast<double>(params.d);
  Operator j = swap_sum(params.d, params.n_copies) * Complex(params.eta / n, 0.0);
  j += Operator::identity(j.row_shape()) * Complex((1.0 - params.eta) / d, 0.0);
  return ChoiOperator(std::move(j), SubsystemShape::uniform(params.d, params.n_copies),
                      SubsystemShape::uniform(params.d, 1));
}

double eta_max(std::size_t d, std::size_t n_copies) {
  NoisyTransposeParams{d, n_copies, 0.0}.validate();
  const double dd = static_cast<double>(d);
  const double n = static_cast<double>(n_copies);
  if (n_copies + 1 <= d) return 1.0 / (dd + 1.0);
  return n / (dd * (dd - 1.0) + n);
}

double eta_min(std::size_t d) {
  if (d < 2) throw ContractViolation("eta_min: d must be at least 2");
  return -1.0 / (static_cast<double>(d) - 1.0);
}

double eta_pure_max(std::size_t d, std::size_t n_copies) {
  NoisyTransposeParams{d, n_copies, 0.0}.validate();
  return static_cast<double>(n_copies) / static_cast<double>(n_copies + d);
}

double ncopy_min_eigenvalue(const NoisyTransposeParams& params) {
  return min_eigenvalue(ncopy_choi(params).op());
}

bool eta_feasible(const NoisyTransposeParams& params, double tol) {
  return ncopy_min_eigenvalue(params) >= -tol;
}

bool eta_in_closed_form_range(const NoisyTransposeParams& params) {
  params.validate();
  return params.eta >= eta_min(params.d) && params.eta <= eta_max(params.d, params.n_copies);
}

}  // namespace tranclone
