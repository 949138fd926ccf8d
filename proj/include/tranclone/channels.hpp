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

// Optimal N -> K transposition, N -> N+K universal symmetric cloning and the
// isometry that realises both.
//
// Choi convention: J = sum_ij |i><j|_I (x) C(|i><j|)_O with the input
// register first, and C(rho) = Tr_I[(rho^T (x) 1_O) J].

#include <cstddef>
#include <memory>
#include <optional>

#include "tranclone/tensor.hpp"

namespace tranclone {

/// d-dimensional qudits, N input copies, K output copies.
struct ChannelSpec {
  std::size_t d = 2;
  std::size_t n = 1;
  std::size_t k = 1;

  /// Throws ContractViolation unless d >= 2, n >= 1, k >= 1.
  void validate() const;
  SubsystemShape input_shape() const { return SubsystemShape::uniform(d, n); }
  SubsystemShape output_shape() const { return SubsystemShape::uniform(d, k); }
  /// d^(N+K).
  std::size_t choi_dim() const;

  friend bool operator==(const ChannelSpec&, const ChannelSpec&) = default;
};

/// d_S^N / d_S^{N+K}.
double optimal_fidelity(const ChannelSpec& spec);

/// Choi operator on input (x) output. CP and TP are checkable properties,
/// not construction invariants.
class ChoiOperator {
 public:
  ChoiOperator(Operator op, SubsystemShape in_shape, SubsystemShape out_shape);

  const Operator& op() const { return op_; }
  const SubsystemShape& in_shape() const { return in_shape_; }
  const SubsystemShape& out_shape() const { return out_shape_; }

 private:
  Operator op_;
  SubsystemShape in_shape_;
  SubsystemShape out_shape_;
};

/// Tr_I[(rho^T (x) 1_O) J]. Throws ShapeError if rho does not live on the
/// input register.
Operator apply_channel(const ChoiOperator& j, const Operator& rho);

/// Tr_O(J); equals the identity for trace-preserving maps.
Operator output_trace(const ChoiOperator& j);
/// max |Tr_O(J) - 1|.
double tp_defect(const ChoiOperator& j);

/// Projector onto sym^M(C^d) from a process-wide cache. Concurrent lookups
/// take a shared lock; insertion takes an exclusive one.
std::shared_ptr<const Operator> shared_sym_projector(std::size_t d, std::size_t copies);

/// 1 / dim for the given register.
Operator maximally_mixed(const SubsystemShape& shape);

/// |psi><psi|^{\otimes copies} for a unit column vector psi.
Operator product_state(const Operator& psi, std::size_t copies);

/// || (1 - P) rho (1 - P) ||_F with P the symmetric projector on rho's register.
double symmetric_support_defect(std::size_t d, const Operator& rho);

/// How channels on sym^N treat inputs outside the symmetric subspace.
enum class Domain {
  kStrictSymmetric,  ///< reject them with ContractViolation
  kExtended,         ///< apply the CPTP extension
};

/// J = (d_S^N / d_S^{N+K}) Pi_sym^{(N+K)} + (1 - Pi_sym^{(N)}) (x) sigma.
/// sigma defaults to the maximally mixed state on the output register;
/// a sigma that is not a density operator throws ContractViolation.
ChoiOperator optimal_transpose_choi(const ChannelSpec& spec,
                                    const std::optional<Operator>& sigma = std::nullopt);

/// Optimal N -> K transposition, evaluated by applying the canonical Choi
/// operator. In strict mode rho must be supported on sym^N.
Operator t_cp(const ChannelSpec& spec, const Operator& rho,
              Domain domain = Domain::kStrictSymmetric);

/// (d_S^N / d_S^{N+K}) Tr_{1..N}[Pi_sym^{(N+K)} (rho^T (x) 1)] + Tr[(1 - Pi_sym^{(N)}) rho] sigma,
/// evaluated term by term.
Operator t_cp_ext(const ChannelSpec& spec, const Operator& rho,
                  const std::optional<Operator>& sigma = std::nullopt);

/// (d_S^N / d_S^{N+K}) Pi_sym (rho (x) 1^{\otimes K}) Pi_sym for rho on sym^N.
Operator werner_clone(const ChannelSpec& spec, const Operator& rho);

/// Isometry V : sym^N -> I' (x) O' (x) O, columns indexed by the occupation
/// basis of sym_isometry(d, N). Rows are ordered I' (N factors), O' (K
/// factors), O (K factors):
///   V|s> = sqrt(d_S^N / d_S^{N+K}) sum_k [Pi_sym^{(N+K)} (|s> (x) |k>)]_{I'O'} (x) |k>_O.
/// Tracing O gives the cloner; tracing I'O' gives the transposition.
Operator stinespring_isometry(const ChannelSpec& spec);

/// V (S^dagger rho S) V^dagger for rho on (C^d)^{\otimes N} supported on sym^N,
/// where S = sym_isometry(d, N).
Operator dilate(const Operator& v, const ChannelSpec& spec, const Operator& rho);
/// Tr_O of a dilated state: the N+K clone register.
Operator clone_branch(const Operator& dilated, const ChannelSpec& spec);
/// Tr_{I'O'} of a dilated state: the K transposed copies.
Operator transpose_branch(const Operator& dilated, const ChannelSpec& spec);

struct VisibilityFit {
  double eta = 0.0;
  double fidelity = 0.0;  ///< Tr(marginal psi^T)
  double residual = 0.0;  ///< max-entry error of the affine model
};

/// Single-output marginal of t_cp(psi^N) at `site`, fitted to
/// eta psi^T + (1 - eta) 1/d with eta = (d F - 1)/(d - 1).
VisibilityFit fit_single_site_visibility(const ChannelSpec& spec, const Operator& psi,
                                         std::size_t site = 0);
/// eta of the fit; throws StructureError when the residual exceeds 1e-9.
double single_site_visibility(const ChannelSpec& spec, const Operator& psi,
                              std::size_t site = 0);

/// Transposition in the basis {u|i>}: A rho^T A^dagger with A = u u^T.
/// Throws ContractViolation if u is not unitary to 1e-10.
Operator basis_changed_transpose(const Operator& u, const Operator& rho);
/// The defining form u (u^dagger rho u)^T u^dagger.
Operator basis_changed_transpose_direct(const Operator& u, const Operator& rho);

}  // namespace tranclone
