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

// Dense complex operators on multi-qudit registers.
//
// Index convention: the leftmost tensor factor is the most significant digit
// of a row/column index (big-endian), so for a register with dims (d0, d1, d2)
// the basis vector |x0 x1 x2> sits at index (x0 * d1 + x1) * d2 + x2.

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

#include "tranclone/errors.hpp"

namespace tranclone {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

/// Ordered list of local dimensions of a register.
class SubsystemShape {
 public:
  SubsystemShape() = default;
  SubsystemShape(std::initializer_list<std::size_t> dims);
  explicit SubsystemShape(std::vector<std::size_t> dims);

  /// `copies` factors of dimension `d`.
  static SubsystemShape uniform(std::size_t d, std::size_t copies);

  const std::vector<std::size_t>& dims() const { return dims_; }
  std::size_t size() const { return dims_.size(); }
  std::size_t operator[](std::size_t i) const { return dims_.at(i); }
  /// Product of the local dimensions (1 for the empty shape).
  std::size_t total() const { return total_; }

  SubsystemShape concat(const SubsystemShape& other) const;
  /// Sub-shape made of the listed positions, in the order given.
  SubsystemShape select(std::span<const std::size_t> positions) const;

  friend bool operator==(const SubsystemShape&, const SubsystemShape&) = default;

 private:
  std::vector<std::size_t> dims_;
  std::size_t total_ = 1;
};

/// Dense complex matrix with row and column register structure.
///
/// Hermiticity and positivity are not invariants of the type; they are
/// checked by the operations that need them.
class Operator {
 public:
  Operator() = default;
  Operator(Matrix entries, SubsystemShape row_shape, SubsystemShape col_shape);
  /// Square operator with identical row and column shape.
  Operator(Matrix entries, SubsystemShape shape);

  static Operator identity(const SubsystemShape& shape);
  static Operator zero(const SubsystemShape& row_shape,
                       const SubsystemShape& col_shape);
  static Operator zero(const SubsystemShape& shape) { return zero(shape, shape); }
  /// Column vector with the given register structure.
  static Operator ket(Vector v, SubsystemShape shape);
  /// |v><v| for a column-vector operator.
  static Operator projector(const Operator& ket);

  const Matrix& matrix() const { return entries_; }
  const SubsystemShape& row_shape() const { return row_shape_; }
  const SubsystemShape& col_shape() const { return col_shape_; }
  Eigen::Index rows() const { return entries_.rows(); }
  Eigen::Index cols() const { return entries_.cols(); }
  bool is_square() const { return entries_.rows() == entries_.cols(); }
  Complex operator()(Eigen::Index i, Eigen::Index j) const { return entries_(i, j); }

  Complex trace() const;
  Operator adjoint() const;
  /// Largest absolute entry.
  double max_abs() const;

  Operator& operator+=(const Operator& other);
  Operator& operator-=(const Operator& other);
  Operator& operator*=(Complex s);

  friend Operator operator+(Operator a, const Operator& b) { return a += b; }
  friend Operator operator-(Operator a, const Operator& b) { return a -= b; }
  friend Operator operator*(Operator a, Complex s) { return a *= s; }
  friend Operator operator*(Complex s, Operator a) { return a *= s; }
  friend Operator operator*(const Operator& a, const Operator& b);

 private:
  Matrix entries_;
  SubsystemShape row_shape_;
  SubsystemShape col_shape_;
};

// ---------------------------------------------------------------------------
// Dense-dimension budget
// ---------------------------------------------------------------------------

/// Largest matrix dimension the library will materialise. Initialised from
/// the TRANCLONE_MAX_DIM environment variable (default 2048).
std::size_t dense_dim_limit();
void set_dense_dim_limit(std::size_t limit);

/// Throws ResourceError when `dim` exceeds dense_dim_limit().
void check_dense_dim(std::size_t dim, std::string_view what);

/// Restores the previous limit on destruction.
class ScopedDimLimit {
 public:
  explicit ScopedDimLimit(std::size_t limit);
  ~ScopedDimLimit();
  ScopedDimLimit(const ScopedDimLimit&) = delete;
  ScopedDimLimit& operator=(const ScopedDimLimit&) = delete;

 private:
  std::size_t previous_;
};

// ---------------------------------------------------------------------------
// Tolerances
// ---------------------------------------------------------------------------

/// 1e-10 * (1 + max|a_ij|).
double hermiticity_tolerance(const Operator& a);
/// 1e-9 * (1 + max|a_ij|).
double psd_tolerance(const Operator& a);

// ---------------------------------------------------------------------------
// Algebra
// ---------------------------------------------------------------------------

/// Tensor product; shapes are concatenated.
Operator kron(const Operator& a, const Operator& b);
Operator kron(std::initializer_list<Operator> factors);
/// a^{\otimes copies}; copies == 0 gives the 1x1 identity.
Operator tensor_power(const Operator& a, std::size_t copies);

/// Traces out every subsystem not listed in `keep`. The result keeps the
/// surviving subsystems in their original order. Requires a square operator
/// whose row and column shapes agree.
Operator partial_trace(const Operator& a, std::span<const std::size_t> keep);
Operator partial_trace(const Operator& a, std::initializer_list<std::size_t> keep);

/// Entry-wise transpose; row and column shapes are swapped.
Operator transpose_in_computational_basis(const Operator& a);
Operator conjugate(const Operator& a);
/// (a + a^dagger) / 2.
Operator hermitian_part(const Operator& a);

/// Largest |a_ij - conj(a_ji)|.
double hermiticity_defect(const Operator& a);
bool is_hermitian(const Operator& a);
double frobenius_norm(const Operator& a);
/// max |a_ij - b_ij|; shapes must agree.
double max_abs_diff(const Operator& a, const Operator& b);
/// Tr(a^dagger b).
Complex hs_inner(const Operator& a, const Operator& b);

/// Ascending eigenvalues of the Hermitian part. Throws ContractViolation when
/// the input is non-Hermitian beyond hermiticity_tolerance().
///
/// The solver first splits the index set into the connected components of
/// the non-zero pattern and diagonalises each block separately; operators
/// that conserve a quantum number (permutation-invariant ones do) are
/// therefore handled block by block.
std::vector<double> eigenvalues(const Operator& a);
double min_eigenvalue(const Operator& a);
double max_eigenvalue(const Operator& a);
/// lambda_min >= -psd_tolerance(a).
bool is_psd(const Operator& a);

/// (1/2) * sum |eig(a - b)|.
double trace_distance(const Operator& a, const Operator& b);

/// Hermitian square root of a PSD operator and its pseudo-inverse, via
/// eigendecomposition (negative eigenvalue noise is clipped).
Operator psd_sqrt(const Operator& a);
Operator psd_inverse_sqrt(const Operator& a, double cutoff = 1e-12);

/// Big-endian digits of `index` for the given shape.
std::vector<std::size_t> unravel(std::size_t index, const SubsystemShape& shape);
std::size_t ravel(std::span<const std::size_t> digits, const SubsystemShape& shape);

}  // namespace tranclone
