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

#include "tranclone/tensor.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <numeric>
#include <string>

namespace tranclone {

namespace {

std::size_t limit_from_env() {
  if (const char* raw = std::getenv("TRANCLONE_MAX_DIM")) {
    char* end = nullptr;
    const unsigned long long value = std::strtoull(raw, &end, 10);
    if (end != raw && *end == '\0' && value > 0) {
      return static_cast<std::size_t>(value);
    }
  }
  return 2048;
}

std::atomic<std::size_t>& limit_storage() {
  static std::atomic<std::size_t> limit{limit_from_env()};
  return limit;
}

void require_square_registers(const Operator& a, std::string_view what) {
  if (!a.is_square() || a.row_shape() != a.col_shape()) {
    throw ShapeError(std::string(what) +
                     ": operator must be square with equal row/column shapes");
  }
}

void require_same_shape(const Operator& a, const Operator& b,
                        std::string_view what) {
  if (a.row_shape() != b.row_shape() || a.col_shape() != b.col_shape()) {
    throw ShapeError(std::string(what) + ": shape mismatch");
  }
}

// Union-find over the index set, used to split a matrix into the connected
// components of its non-zero pattern.
class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n) {
    std::iota(parent_.begin(), parent_.end(), std::size_t{0});
  }
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent_[std::max(a, b)] = std::min(a, b);
  }

 private:
  std::vector<std::size_t> parent_;
};

std::vector<std::vector<Eigen::Index>> nonzero_components(const Matrix& m) {
  const auto n = static_cast<std::size_t>(m.rows());
  DisjointSets sets(n);
  for (Eigen::Index j = 0; j < m.cols(); ++j) {
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
      if (i != j && m(i, j) != Complex(0.0, 0.0)) {
        sets.unite(static_cast<std::size_t>(i), static_cast<std::size_t>(j));
      }
    }
  }
  std::vector<std::vector<Eigen::Index>> groups(n);
  for (std::size_t i = 0; i < n; ++i) {
    groups[sets.find(i)].push_back(static_cast<Eigen::Index>(i));
  }
  std::erase_if(groups, [](const auto& g) { return g.empty(); });
  return groups;
}

struct Eigensystem {
  Eigen::VectorXd values;
  Matrix vectors;
};

Eigensystem hermitian_eigensystem(const Operator& a) {
  require_square_registers(a, "eigendecomposition");
  if (hermiticity_defect(a) > hermiticity_tolerance(a)) {
    throw ContractViolation("eigendecomposition: operator is not Hermitian");
  }
  const Matrix h = (a.matrix() + a.matrix().adjoint()) * 0.5;
  Eigen::SelfAdjointEigenSolver<Matrix> solver(h);
  return {solver.eigenvalues(), solver.eigenvectors()};
}

}  // namespace

// ---------------------------------------------------------------------------
// SubsystemShape
// ---------------------------------------------------------------------------

SubsystemShape::SubsystemShape(std::initializer_list<std::size_t> dims)
    : SubsystemShape(std::vector<std::size_t>(dims)) {}

SubsystemShape::SubsystemShape(std::vector<std::size_t> dims)
    : dims_(std::move(dims)) {
  for (std::size_t d : dims_) {
    if (d == 0) throw ShapeError("SubsystemShape: local dimension must be >= 1");
    total_ *= d;
  }
}

SubsystemShape SubsystemShape::uniform(std::size_t d, std::size_t copies) {
  return SubsystemShape(std::vector<std::size_t>(copies, d));
}

SubsystemShape SubsystemShape::concat(const SubsystemShape& other) const {
  std::vector<std::size_t> dims = dims_;
  dims.insert(dims.end(), other.dims_.begin(), other.dims_.end());
  return SubsystemShape(std::move(dims));
}

SubsystemShape SubsystemShape::select(std::span<const std::size_t> positions) const {
  std::vector<std::size_t> dims;
  dims.reserve(positions.size());
  for (std::size_t p : positions) {
    if (p >= dims_.size()) throw ShapeError("SubsystemShape: position out of range");
    dims.push_back(dims_[p]);
  }
  return SubsystemShape(std::move(dims));
}

std::vector<std::size_t> unravel(std::size_t index, const SubsystemShape& shape) {
  std::vector<std::size_t> digits(shape.size());
  for (std::size_t p = shape.size(); p-- > 0;) {
    digits[p] = index % shape[p];
    index /= shape[p];
  }
  return digits;
}

std::size_t ravel(std::span<const std::size_t> digits, const SubsystemShape& shape) {
  std::size_t index = 0;
  for (std::size_t p = 0; p < shape.size(); ++p) index = index * shape[p] + digits[p];
  return index;
}

// ---------------------------------------------------------------------------
// Operator
// ---------------------------------------------------------------------------

Operator::Operator(Matrix entries, SubsystemShape row_shape, SubsystemShape col_shape)
    : entries_(std::move(entries)),
      row_shape_(std::move(row_shape)),
      col_shape_(std::move(col_shape)) {
  if (static_cast<std::size_t>(entries_.rows()) != row_shape_.total() ||
      static_cast<std::size_t>(entries_.cols()) != col_shape_.total()) {
    throw ShapeError("Operator: matrix size does not match subsystem shapes");
  }
}

Operator::Operator(Matrix entries, SubsystemShape shape)
    : Operator(std::move(entries), shape, shape) {}

Operator Operator::identity(const SubsystemShape& shape) {
  const auto n = static_cast<Eigen::Index>(shape.total());
  return Operator(Matrix::Identity(n, n), shape);
}

Operator Operator::zero(const SubsystemShape& row_shape, const SubsystemShape& col_shape) {
  return Operator(Matrix::Zero(static_cast<Eigen::Index>(row_shape.total()),
                               static_cast<Eigen::Index>(col_shape.total())),
                  row_shape, col_shape);
}

Operator Operator::ket(Vector v, SubsystemShape shape) {
  return Operator(Matrix(std::move(v)), std::move(shape), SubsystemShape{});
}

Operator Operator::projector(const Operator& ket) {
  if (ket.cols() != 1) throw ShapeError("projector: argument must be a column vector");
  return Operator(ket.matrix() * ket.matrix().adjoint(), ket.row_shape());
}

Complex Operator::trace() const {
  if (!is_square()) throw ShapeError("trace: operator must be square");
  return entries_.trace();
}

Operator Operator::adjoint() const {
  return Operator(entries_.adjoint(), col_shape_, row_shape_);
}

double Operator::max_abs() const {
  return entries_.size() == 0 ? 0.0 : entries_.cwiseAbs().maxCoeff();
}

Operator& Operator::operator+=(const Operator& other) {
  require_same_shape(*this, other, "operator+");
  entries_ += other.entries_;
  return *this;
}

Operator& Operator::operator-=(const Operator& other) {
  require_same_shape(*this, other, "operator-");
  entries_ -= other.entries_;
  return *this;
}

Operator& Operator::operator*=(Complex s) {
  entries_ *= s;
  return *this;
}

Operator operator*(const Operator& a, const Operator& b) {
  if (a.col_shape().total() != b.row_shape().total()) {
    throw ShapeError("operator*: inner dimensions differ");
  }
  return Operator(a.matrix() * b.matrix(), a.row_shape(), b.col_shape());
}

// ---------------------------------------------------------------------------
// Budget and tolerances
// ---------------------------------------------------------------------------

std::size_t dense_dim_limit() { return limit_storage().load(); }

void set_dense_dim_limit(std::size_t limit) { limit_storage().store(limit); }

void check_dense_dim(std::size_t dim, std::string_view what) {
  const std::size_t limit = dense_dim_limit();
  if (dim > limit) {
    throw ResourceError(std::string(what) + ": dimension " + std::to_string(dim) +
                        " exceeds dense limit " + std::to_string(limit));
  }
}

ScopedDimLimit::ScopedDimLimit(std::size_t limit) : previous_(dense_dim_limit()) {
  set_dense_dim_limit(limit);
}

ScopedDimLimit::~ScopedDimLimit() { set_dense_dim_limit(previous_); }

double hermiticity_tolerance(const Operator& a) { return 1e-10 * (1.0 + a.max_abs()); }

double psd_tolerance(const Operator& a) { return 1e-9 * (1.0 + a.max_abs()); }

// ---------------------------------------------------------------------------
// Algebra
// ---------------------------------------------------------------------------

Operator kron(const Operator& a, const Operator& b) {
  const Matrix& x = a.matrix();
  const Matrix& y = b.matrix();
  check_dense_dim(static_cast<std::size_t>(std::max(x.rows() * y.rows(), x.cols() * y.cols())),
                  "kron");
  Matrix out(x.rows() * y.rows(), x.cols() * y.cols());
  for (Eigen::Index j = 0; j < x.cols(); ++j) {
    for (Eigen::Index i = 0; i < x.rows(); ++i) {
      out.block(i * y.rows(), j * y.cols(), y.rows(), y.cols()) = x(i, j) * y;
    }
  }
  return Operator(std::move(out), a.row_shape().concat(b.row_shape()),
                  a.col_shape().concat(b.col_shape()));
}

Operator kron(std::initializer_list<Operator> factors) {
  Operator out(Matrix::Identity(1, 1), SubsystemShape{});
  for (const Operator& f : factors) out = kron(out, f);
  return out;
}

Operator tensor_power(const Operator& a, std::size_t copies) {
  Operator out(Matrix::Identity(1, 1), SubsystemShape{}, SubsystemShape{});
  for (std::size_t c = 0; c < copies; ++c) out = kron(out, a);
  return out;
}

Operator partial_trace(const Operator& a, std::span<const std::size_t> keep) {
  require_square_registers(a, "partial_trace");
  const SubsystemShape& shape = a.row_shape();
  std::vector<bool> kept(shape.size(), false);
  for (std::size_t p : keep) {
    if (p >= shape.size()) throw ShapeError("partial_trace: subsystem index out of range");
    if (kept[p]) throw ShapeError("partial_trace: duplicate subsystem index");
    kept[p] = true;
  }
  std::vector<std::size_t> keep_sorted(keep.begin(), keep.end());
  std::sort(keep_sorted.begin(), keep_sorted.end());
  std::vector<std::size_t> traced;
  for (std::size_t p = 0; p < shape.size(); ++p) {
    if (!kept[p]) traced.push_back(p);
  }
  const SubsystemShape kept_shape = shape.select(keep_sorted);
  const SubsystemShape traced_shape = shape.select(traced);

  // full_index[k][t]: position of (kept digits k, traced digits t).
  const std::size_t nk = kept_shape.total();
  const std::size_t nt = traced_shape.total();
  std::vector<Eigen::Index> full_index(nk * nt);
  std::vector<std::size_t> digits(shape.size());
  for (std::size_t k = 0; k < nk; ++k) {
    const auto kd = unravel(k, kept_shape);
    for (std::size_t t = 0; t < nt; ++t) {
      const auto td = unravel(t, traced_shape);
      for (std::size_t q = 0; q < keep_sorted.size(); ++q) digits[keep_sorted[q]] = kd[q];
      for (std::size_t q = 0; q < traced.size(); ++q) digits[traced[q]] = td[q];
      full_index[k * nt + t] = static_cast<Eigen::Index>(ravel(digits, shape));
    }
  }
  const Matrix& m = a.matrix();
  Matrix out = Matrix::Zero(static_cast<Eigen::Index>(nk), static_cast<Eigen::Index>(nk));
  for (std::size_t c = 0; c < nk; ++c) {
    for (std::size_t r = 0; r < nk; ++r) {
      Complex acc(0.0, 0.0);
      for (std::size_t t = 0; t < nt; ++t) {
        acc += m(full_index[r * nt + t], full_index[c * nt + t]);
      }
      out(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = acc;
    }
  }

  // Restore the caller's ordering of the kept subsystems.
  if (std::equal(keep.begin(), keep.end(), keep_sorted.begin())) {
    return Operator(std::move(out), kept_shape);
  }
  const SubsystemShape target_shape = shape.select(keep);
  std::vector<Eigen::Index> perm(nk);
  std::vector<std::size_t> sorted_digits(keep.size());
  for (std::size_t k = 0; k < nk; ++k) {
    const auto td = unravel(k, target_shape);
    for (std::size_t q = 0; q < keep.size(); ++q) {
      const auto pos = static_cast<std::size_t>(
          std::find(keep_sorted.begin(), keep_sorted.end(), keep[q]) - keep_sorted.begin());
      sorted_digits[pos] = td[q];
    }
    perm[k] = static_cast<Eigen::Index>(ravel(sorted_digits, kept_shape));
  }
  Matrix reordered(out.rows(), out.cols());
  for (std::size_t c = 0; c < nk; ++c) {
    for (std::size_t r = 0; r < nk; ++r) {
      reordered(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) =
          out(perm[r], perm[c]);
    }
  }
  return Operator(std::move(reordered), target_shape);
}

Operator partial_trace(const Operator& a, std::initializer_list<std::size_t> keep) {
  return partial_trace(a, std::span<const std::size_t>(keep.begin(), keep.size()));
}

Operator transpose_in_computational_basis(const Operator& a) {
  return Operator(a.matrix().transpose(), a.col_shape(), a.row_shape());
}

Operator conjugate(const Operator& a) {
  return Operator(a.matrix().conjugate(), a.row_shape(), a.col_shape());
}

Operator hermitian_part(const Operator& a) {
  require_square_registers(a, "hermitian_part");
  return Operator((a.matrix() + a.matrix().adjoint()) * 0.5, a.row_shape());
}

double hermiticity_defect(const Operator& a) {
  if (!a.is_square()) throw ShapeError("hermiticity_defect: operator must be square");
  const Matrix& m = a.matrix();
  double worst = 0.0;
  for (Eigen::Index j = 0; j < m.cols(); ++j) {
    for (Eigen::Index i = 0; i <= j; ++i) {
      worst = std::max(worst, std::abs(m(i, j) - std::conj(m(j, i))));
    }
  }
  return worst;
}

bool is_hermitian(const Operator& a) {
  return a.is_square() && hermiticity_defect(a) <= hermiticity_tolerance(a);
}

double frobenius_norm(const Operator& a) { return a.matrix().norm(); }

double max_abs_diff(const Operator& a, const Operator& b) {
  require_same_shape(a, b, "max_abs_diff");
  return (a - b).max_abs();
}

Complex hs_inner(const Operator& a, const Operator& b) {
  require_same_shape(a, b, "hs_inner");
  return (a.matrix().conjugate().cwiseProduct(b.matrix())).sum();
}

std::vector<double> eigenvalues(const Operator& a) {
  require_square_registers(a, "eigenvalues");
  if (hermiticity_defect(a) > hermiticity_tolerance(a)) {
    throw ContractViolation("eigenvalues: operator is not Hermitian within tolerance");
  }
  const Matrix& m = a.matrix();
  std::vector<double> values;
  values.reserve(static_cast<std::size_t>(m.rows()));
  for (const auto& group : nonzero_components(m)) {
    const auto n = static_cast<Eigen::Index>(group.size());
    Matrix block(n, n);
    for (Eigen::Index c = 0; c < n; ++c) {
      for (Eigen::Index r = 0; r < n; ++r) {
        block(r, c) = 0.5 * (m(group[r], group[c]) + std::conj(m(group[c], group[r])));
      }
    }
    if (n == 1) {
      values.push_back(block(0, 0).real());
      continue;
    }
    Eigen::SelfAdjointEigenSolver<Matrix> solver(block, Eigen::EigenvaluesOnly);
    for (Eigen::Index i = 0; i < n; ++i) values.push_back(solver.eigenvalues()(i));
  }
  std::sort(values.begin(), values.end());
  return values;
}

double min_eigenvalue(const Operator& a) {
  const auto values = eigenvalues(a);
  if (values.empty()) throw ShapeError("min_eigenvalue: empty operator");
  return values.front();
}

double max_eigenvalue(const Operator& a) {
  const auto values = eigenvalues(a);
  if (values.empty()) throw ShapeError("max_eigenvalue: empty operator");
  return values.back();
}

bool is_psd(const Operator& a) { return min_eigenvalue(a) >= -psd_tolerance(a); }

double trace_distance(const Operator& a, const Operator& b) {
  require_same_shape(a, b, "trace_distance");
  double sum = 0.0;
  for (double v : eigenvalues(a - b)) sum += std::abs(v);
  return 0.5 * sum;
}

Operator psd_sqrt(const Operator& a) {
  const auto es = hermitian_eigensystem(a);
  const Eigen::VectorXd roots = es.values.cwiseMax(0.0).cwiseSqrt();
  return Operator(es.vectors * roots.cast<Complex>().asDiagonal() * es.vectors.adjoint(),
                  a.row_shape());
}

Operator psd_inverse_sqrt(const Operator& a, double cutoff) {
  const auto es = hermitian_eigensystem(a);
  const double scale = es.values.cwiseAbs().maxCoeff();
  Eigen::VectorXd inv(es.values.size());
  for (Eigen::Index i = 0; i < es.values.size(); ++i) {
    inv(i) = es.values(i) > cutoff * scale ? 1.0 / std::sqrt(es.values(i)) : 0.0;
  }
  return Operator(es.vectors * inv.cast<Complex>().asDiagonal() * es.vectors.adjoint(),
                  a.row_shape());
}

}  // namespace tranclone
