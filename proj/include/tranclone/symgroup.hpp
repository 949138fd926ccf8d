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

// Symmetric-group combinatorics and representations.
//
// Permutations act on tensor positions and are stored 0-based. Tableau
// entries and Jucys-Murphy indices are 1-based (the letters 1..n), matching
// the usual combinatorial notation.

#include <cstddef>
#include <cstdint>
#include <map>
#include <vector>

#include <Eigen/Dense>

#include "tranclone/tensor.hpp"

namespace tranclone {

class Permutation {
 public:
  Permutation() = default;
  /// One-line notation: images[k] = pi(k), 0-based. Throws ContractViolation
  /// if `images` is not a bijection on {0..n-1}.
  explicit Permutation(std::vector<std::size_t> images);

  static Permutation identity(std::size_t n);
  /// The transposition exchanging positions i and j (0-based).
  static Permutation transposition(std::size_t n, std::size_t i, std::size_t j);
  /// All n! permutations in lexicographic order of their one-line notation.
  static std::vector<Permutation> all(std::size_t n);

  std::size_t size() const { return images_.size(); }
  std::size_t operator()(std::size_t k) const { return images_.at(k); }
  const std::vector<std::size_t>& images() const { return images_; }

  Permutation inverse() const;
  std::size_t cycle_count() const;
  bool is_identity() const;

  /// Composition (p * q)(k) = p(q(k)).
  friend Permutation operator*(const Permutation& p, const Permutation& q);
  friend bool operator==(const Permutation&, const Permutation&) = default;

  /// Word (i_1, ..., i_m) of 0-based adjacent transposition indices with
  /// this = s_{i_1} * ... * s_{i_m}, where s_i exchanges i and i+1.
  std::vector<std::size_t> adjacent_word() const;

 private:
  std::vector<std::size_t> images_;
};

/// R(pi) on (C^d)^{\otimes n}: moves tensor factor i to position pi(i), so
/// R(pi) |x_1 .. x_n> = |x_{pi^-1(1)} .. x_{pi^-1(n)}>. Homomorphic:
/// R(p * q) = R(p) R(q).
Operator tensor_rep(const Permutation& pi, std::size_t d);

/// Index map of R(pi): R(pi)|x> = |map[x]>.
std::vector<std::size_t> tensor_rep_index_map(const Permutation& pi, std::size_t d);

// ---------------------------------------------------------------------------
// Symmetric subspace
// ---------------------------------------------------------------------------

/// binomial(M + d - 1, d - 1).
std::uint64_t sym_dim(std::size_t d, std::size_t copies);

/// Projector onto sym^M(C^d) computed as (1/M!) sum_pi R(pi).
Operator sym_projector_by_average(std::size_t d, std::size_t copies);
/// Projector onto sym^M(C^d) computed as S S^dagger with S = sym_isometry.
Operator sym_projector_by_isometry(std::size_t d, std::size_t copies);
/// Permutation average for M! <= 5040, occupation isometry above.
Operator sym_projector(std::size_t d, std::size_t copies);

/// Isometry C^{sym_dim} -> (C^d)^{\otimes M}. Column c is the normalised
/// symmetrisation of the c-th weakly increasing M-tuple over {0..d-1}
/// (tuples in lexicographic order).
Operator sym_isometry(std::size_t d, std::size_t copies);

/// Weakly increasing tuples labelling the columns of sym_isometry.
std::vector<std::vector<std::size_t>> occupation_tuples(std::size_t d, std::size_t copies);

// ---------------------------------------------------------------------------
// Young diagrams and tableaux
// ---------------------------------------------------------------------------

class YoungDiagram {
 public:
  YoungDiagram() = default;
  /// Weakly decreasing positive row lengths.
  explicit YoungDiagram(std::vector<std::size_t> rows);

  const std::vector<std::size_t>& rows() const { return rows_; }
  std::size_t boxes() const { return boxes_; }
  std::size_t length() const { return rows_.size(); }
  std::size_t row(std::size_t r) const { return rows_.at(r); }
  /// Number of boxes in column c.
  std::size_t column_height(std::size_t c) const;
  /// Hook length of box (r, c), 0-based.
  std::size_t hook(std::size_t r, std::size_t c) const;

  friend bool operator==(const YoungDiagram&, const YoungDiagram&) = default;
  friend auto operator<=>(const YoungDiagram&, const YoungDiagram&) = default;

 private:
  std::vector<std::size_t> rows_;
  std::size_t boxes_ = 0;
};

/// Partitions of n with at most max_rows parts, in decreasing lexicographic
/// order: (n), (n-1,1), (n-2,2), (n-2,1,1), ...
std::vector<YoungDiagram> enumerate_diagrams(std::size_t n, std::size_t max_rows);

class StandardTableau {
 public:
  /// rows[r][c] is the entry in box (r, c). Throws ContractViolation unless
  /// the filling is standard.
  explicit StandardTableau(std::vector<std::vector<std::size_t>> rows);

  const YoungDiagram& shape() const { return shape_; }
  const std::vector<std::vector<std::size_t>>& rows() const { return rows_; }
  std::size_t boxes() const { return shape_.boxes(); }
  /// 0-based row and column of entry k (1-based letter).
  std::size_t row_of(std::size_t k) const;
  std::size_t col_of(std::size_t k) const;
  /// Tableau with letters k and k+1 exchanged, if it is still standard.
  bool swap_is_standard(std::size_t k) const;
  StandardTableau swapped(std::size_t k) const;

  friend bool operator==(const StandardTableau& a, const StandardTableau& b) {
    return a.rows_ == b.rows_;
  }

 private:
  void check_letter(std::size_t k) const;

  YoungDiagram shape_;
  std::vector<std::vector<std::size_t>> rows_;
  std::vector<std::size_t> row_of_;
  std::vector<std::size_t> col_of_;
};

/// All standard tableaux of the shape in last-letter order: grouped by the
/// box holding n (lowest removable corner first), then recursively by n-1.
std::vector<StandardTableau> enumerate_syt(const YoungDiagram& shape);
std::size_t syt_count(const YoungDiagram& shape);

/// Column minus row of the box holding k.
int content(const StandardTableau& t, std::size_t k);
/// content(k+1) - content(k).
int axial_distance(const StandardTableau& t, std::size_t k);

/// dim W_lambda of the U(d) irrep: number of semistandard tableaux with
/// entries in {1..d}, evaluated with the hook-content formula (0 when the
/// diagram has more than d rows).
std::uint64_t weyl_dimension(const YoungDiagram& shape, std::size_t d);

// ---------------------------------------------------------------------------
// Young-Yamanouchi irreps and Jucys-Murphy elements
// ---------------------------------------------------------------------------

struct IrrepMatrices {
  YoungDiagram shape;
  std::vector<StandardTableau> basis;
  /// generators[i] represents s_{i+1} = (i+1, i+2), i = 0..n-2.
  std::vector<Eigen::MatrixXd> generators;

  std::size_t dim() const { return basis.size(); }
};

/// Young-Yamanouchi orthogonal form in the last-letter basis.
IrrepMatrices yy_irrep(const YoungDiagram& shape);

/// Image of an arbitrary permutation, as a product of generators.
Eigen::MatrixXd irrep_matrix(const IrrepMatrices& irrep, const Permutation& pi);

/// J_k = sum_{r<k} (r, k) inside the irrep, from products of generators.
Eigen::MatrixXd jm_irrep(const IrrepMatrices& irrep, std::size_t k);

/// Largest entry violation of s_i^2 = 1, (s_i s_{i+1})^3 = 1 and
/// (s_i s_j)^2 = 1 for |i - j| >= 2, plus the orthogonality s_i^T s_i = 1.
double coxeter_defect(const IrrepMatrices& irrep);
/// Largest entry deviation of jm_irrep(irrep, k), k = 1..n, from
/// diag(cont_T(k)) over the basis tableaux T.
double jm_diagonal_defect(const IrrepMatrices& irrep);

/// J_k = sum_{r<k} R((r, k)) on (C^d)^{\otimes n}; J_1 = 0.
Operator jm_tensor(std::size_t k, std::size_t d, std::size_t n);

/// Multiset {cont_T(k)} over all SYT T of all diagrams of n boxes with at
/// most max_rows rows, sorted ascending.
std::vector<int> jm_spectrum_analytic(std::size_t k, std::size_t n, std::size_t max_rows);

/// Eigenvalue multiplicities of jm_tensor(k, d, n) predicted by Schur-Weyl
/// duality: content c appears sum_lambda dim W_lambda * #{T : cont_T(k) = c}
/// times.
std::map<int, std::uint64_t> jm_tensor_spectrum_analytic(std::size_t k, std::size_t d,
                                                         std::size_t n);

/// sum_{lambda |- n, l(lambda) <= d} dim W_lambda * dim V_lambda.
std::uint64_t schur_weyl_dimension_sum(std::size_t d, std::size_t n);
/// schur_weyl_dimension_sum(d, n) == d^n.
bool schur_weyl_dim_check(std::size_t d, std::size_t n);

}  // namespace tranclone
