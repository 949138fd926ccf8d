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

#include "tranclone/symgroup.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>
#include <utility>

namespace tranclone {

namespace {

std::uint64_t factorial(std::size_t n) {
  std::uint64_t f = 1;
  for (std::size_t i = 2; i <= n; ++i) f *= i;
  return f;
}

std::size_t integer_power(std::size_t base, std::size_t exponent) {
  std::size_t out = 1;
  for (std::size_t i = 0; i < exponent; ++i) out *= base;
  return out;
}

void partitions_into(std::size_t remaining, std::size_t max_part, std::size_t max_rows,
                     std::vector<std::size_t>& prefix, std::vector<YoungDiagram>& out) {
  if (remaining == 0) {
    out.emplace_back(prefix);
    return;
  }
  if (prefix.size() == max_rows) return;
  for (std::size_t part = std::min(remaining, max_part); part >= 1; --part) {
    prefix.push_back(part);
    partitions_into(remaining - part, part, max_rows, prefix, out);
    prefix.pop_back();
  }
}

using Filling = std::vector<std::vector<std::size_t>>;

void syt_fillings(std::vector<std::size_t> rows, std::size_t n, std::vector<Filling>& out) {
  if (n == 0) {
    out.emplace_back();
    return;
  }
  // Removable corners, lowest row first.
  for (std::size_t r = rows.size(); r-- > 0;) {
    const bool corner = rows[r] > 0 && (r + 1 == rows.size() || rows[r] > rows[r + 1]);
    if (!corner) continue;
    std::vector<std::size_t> smaller = rows;
    --smaller[r];
    std::vector<Filling> sub;
    syt_fillings(smaller, n - 1, sub);
    for (Filling& f : sub) {
      f.resize(rows.size());
      f[r].push_back(n);
      out.push_back(std::move(f));
    }
  }
}

}  // namespace

// ---------------------------------------------------------------------------
// Permutation
// ---------------------------------------------------------------------------

Permutation::Permutation(std::vector<std::size_t> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (std::size_t v : images_) {
    if (v >= images_.size() || seen[v]) {
      throw ContractViolation("Permutation: images are not a bijection");
    }
    seen[v] = true;
  }
}

Permutation Permutation::identity(std::size_t n) {
  std::vector<std::size_t> images(n);
  std::iota(images.begin(), images.end(), std::size_t{0});
  return Permutation(std::move(images));
}

Permutation Permutation::transposition(std::size_t n, std::size_t i, std::size_t j) {
  if (i >= n || j >= n) throw ContractViolation("transposition: index out of range");
  std::vector<std::size_t> images(n);
  std::iota(images.begin(), images.end(), std::size_t{0});
  std::swap(images[i], images[j]);
  return Permutation(std::move(images));
}

std::vector<Permutation> Permutation::all(std::size_t n) {
  std::vector<std::size_t> images(n);
  std::iota(images.begin(), images.end(), std::size_t{0});
  std::vector<Permutation> out;
  out.reserve(factorial(n));
  do {
    out.emplace_back(images);
  } while (std::next_permutation(images.begin(), images.end()));
  return out;
}

Permutation Permutation::inverse() const {
  std::vector<std::size_t> inv(images_.size());
  for (std::size_t k = 0; k < images_.size(); ++k) inv[images_[k]] = k;
  return Permutation(std::move(inv));
}

std::size_t Permutation::cycle_count() const {
  std::vector<bool> visited(images_.size(), false);
  std::size_t cycles = 0;
  for (std::size_t start = 0; start < images_.size(); ++start) {
    if (visited[start]) continue;
    ++cycles;
    for (std::size_t k = start; !visited[k]; k = images_[k]) visited[k] = true;
  }
  return cycles;
}

bool Permutation::is_identity() const {
  for (std::size_t k = 0; k < images_.size(); ++k) {
    if (images_[k] != k) return false;
  }
  return true;
}

Permutation operator*(const Permutation& p, const Permutation& q) {
  if (p.size() != q.size()) throw ContractViolation("Permutation: size mismatch");
  std::vector<std::size_t> images(p.size());
  for (std::size_t k = 0; k < p.size(); ++k) images[k] = p(q(k));
  return Permutation(std::move(images));
}

std::vector<std::size_t> Permutation::adjacent_word() const {
  std::vector<std::size_t> line = images_;
  std::vector<std::size_t> word;
  // Right-multiplying by s_i swaps one-line entries i and i+1; each step
  // removes one inversion, and the letters found later sit further left.
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t i = 0; i + 1 < line.size(); ++i) {
      if (line[i] > line[i + 1]) {
        std::swap(line[i], line[i + 1]);
        word.insert(word.begin(), i);
        changed = true;
      }
    }
  }
  return word;
}

std::vector<std::size_t> tensor_rep_index_map(const Permutation& pi, std::size_t d) {
  if (d == 0) throw ContractViolation("tensor_rep: local dimension must be >= 1");
  const std::size_t n = pi.size();
  const SubsystemShape shape = SubsystemShape::uniform(d, n);
  const std::size_t total = shape.total();
  std::vector<std::size_t> map(total);
  std::vector<std::size_t> moved(n);
  for (std::size_t x = 0; x < total; ++x) {
    const auto digits = unravel(x, shape);
    for (std::size_t i = 0; i < n; ++i) moved[pi(i)] = digits[i];
    map[x] = ravel(moved, shape);
  }
  return map;
}

Operator tensor_rep(const Permutation& pi, std::size_t d) {
  const SubsystemShape shape = SubsystemShape::uniform(d, pi.size());
  check_dense_dim(shape.total(), "tensor_rep");
  const auto map = tensor_rep_index_map(pi, d);
  Matrix m = Matrix::Zero(static_cast<Eigen::Index>(shape.total()),
                          static_cast<Eigen::Index>(shape.total()));
  for (std::size_t x = 0; x < map.size(); ++x) {
    m(static_cast<Eigen::Index>(map[x]), static_cast<Eigen::Index>(x)) = 1.0;
  }
  return Operator(std::move(m), shape);
}

// ---------------------------------------------------------------------------
// Symmetric subspace
// ---------------------------------------------------------------------------

std::uint64_t sym_dim(std::size_t d, std::size_t copies) {
  if (d == 0) throw ContractViolation("sym_dim: local dimension must be >= 1");
  // binomial(copies + d - 1, d - 1), built incrementally to stay exact.
  std::uint64_t value = 1;
  for (std::size_t i = 1; i < d; ++i) {
    value = value * (copies + i) / i;
  }
  return value;
}

Operator sym_projector_by_average(std::size_t d, std::size_t copies) {
  const SubsystemShape shape = SubsystemShape::uniform(d, copies);
  check_dense_dim(shape.total(), "sym_projector");
  if (factorial(copies) > 40320) {
    throw ResourceError("sym_projector_by_average: too many permutations");
  }
  const auto n = static_cast<Eigen::Index>(shape.total());
  Matrix m = Matrix::Zero(n, n);
  const auto perms = Permutation::all(copies);
  const double weight = 1.0 / static_cast<double>(perms.size());
  for (const Permutation& pi : perms) {
    const auto map = tensor_rep_index_map(pi, d);
    for (std::size_t x = 0; x < map.size(); ++x) {
      m(static_cast<Eigen::Index>(map[x]), static_cast<Eigen::Index>(x)) += weight;
    }
  }
  return Operator(std::move(m), shape);
}

std::vector<std::vector<std::size_t>> occupation_tuples(std::size_t d, std::size_t copies) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> tuple(copies, 0);
  while (true) {
    out.push_back(tuple);
    // Next weakly increasing tuple in lexicographic order.
    std::size_t pos = copies;
    while (pos > 0 && tuple[pos - 1] + 1 == d) --pos;
    if (pos == 0) break;
    const std::size_t value = tuple[pos - 1] + 1;
    for (std::size_t q = pos - 1; q < copies; ++q) tuple[q] = value;
  }
  return out;
}

Operator sym_isometry(std::size_t d, std::size_t copies) {
  const SubsystemShape shape = SubsystemShape::uniform(d, copies);
  check_dense_dim(shape.total(), "sym_isometry");
  const auto tuples = occupation_tuples(d, copies);
  std::map<std::vector<std::size_t>, std::size_t> column_of;
  for (std::size_t c = 0; c < tuples.size(); ++c) column_of.emplace(tuples[c], c);

  std::vector<std::size_t> column(shape.total());
  std::vector<std::size_t> orbit_size(tuples.size(), 0);
  for (std::size_t x = 0; x < shape.total(); ++x) {
    auto digits = unravel(x, shape);
    std::sort(digits.begin(), digits.end());
    column[x] = column_of.at(digits);
    ++orbit_size[column[x]];
  }
  Matrix m = Matrix::Zero(static_cast<Eigen::Index>(shape.total()),
                          static_cast<Eigen::Index>(tuples.size()));
  for (std::size_t x = 0; x < shape.total(); ++x) {
    m(static_cast<Eigen::Index>(x), static_cast<Eigen::Index>(column[x])) =
        1.0 / std::sqrt(static_cast<double>(orbit_size[column[x]]));
  }
  return Operator(std::move(m), shape,
                  SubsystemShape{static_cast<std::size_t>(tuples.size())});
}

Operator sym_projector_by_isometry(std::size_t d, std::size_t copies) {
  const Operator s = sym_isometry(d, copies);
  const SubsystemShape shape = s.row_shape();
  return Operator(s.matrix() * s.matrix().adjoint(), shape);
}

Operator sym_projector(std::size_t d, std::size_t copies) {
  if (factorial(copies) <= 5040) return sym_projector_by_average(d, copies);
  return sym_projector_by_isometry(d, copies);
}

// ---------------------------------------------------------------------------
// Young diagrams and tableaux
// ---------------------------------------------------------------------------

YoungDiagram::YoungDiagram(std::vector<std::size_t> rows) : rows_(std::move(rows)) {
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    if (rows_[r] == 0) throw ContractViolation("YoungDiagram: rows must be positive");
    if (r > 0 && rows_[r] > rows_[r - 1]) {
      throw ContractViolation("YoungDiagram: rows must be weakly decreasing");
    }
    boxes_ += rows_[r];
  }
}

std::size_t YoungDiagram::column_height(std::size_t c) const {
  std::size_t h = 0;
  while (h < rows_.size() && rows_[h] > c) ++h;
  return h;
}

std::size_t YoungDiagram::hook(std::size_t r, std::size_t c) const {
  if (r >= rows_.size() || c >= rows_[r]) throw ContractViolation("hook: box outside diagram");
  return (rows_[r] - c - 1) + (column_height(c) - r - 1) + 1;
}

std::vector<YoungDiagram> enumerate_diagrams(std::size_t n, std::size_t max_rows) {
  if (n == 0) throw ContractViolation("enumerate_diagrams: n must be >= 1");
  std::vector<YoungDiagram> out;
  std::vector<std::size_t> prefix;
  partitions_into(n, n, max_rows, prefix, out);
  return out;
}

StandardTableau::StandardTableau(std::vector<std::vector<std::size_t>> rows)
    : rows_(std::move(rows)) {
  std::vector<std::size_t> lengths;
  for (const auto& row : rows_) lengths.push_back(row.size());
  shape_ = YoungDiagram(lengths);
  const std::size_t n = shape_.boxes();
  row_of_.assign(n + 1, 0);
  col_of_.assign(n + 1, 0);
  std::vector<bool> seen(n + 1, false);
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    for (std::size_t c = 0; c < rows_[r].size(); ++c) {
      const std::size_t v = rows_[r][c];
      if (v < 1 || v > n || seen[v]) {
        throw ContractViolation("StandardTableau: entries must be 1..n, each once");
      }
      seen[v] = true;
      row_of_[v] = r;
      col_of_[v] = c;
      if (c > 0 && rows_[r][c - 1] >= v) {
        throw ContractViolation("StandardTableau: rows must increase");
      }
      if (r > 0 && rows_[r - 1][c] >= v) {
        throw ContractViolation("StandardTableau: columns must increase");
      }
    }
  }
}

void StandardTableau::check_letter(std::size_t k) const {
  if (k < 1 || k > boxes()) {
    throw ContractViolation("StandardTableau: entry " + std::to_string(k) + " absent");
  }
}

std::size_t StandardTableau::row_of(std::size_t k) const {
  check_letter(k);
  return row_of_[k];
}

std::size_t StandardTableau::col_of(std::size_t k) const {
  check_letter(k);
  return col_of_[k];
}

bool StandardTableau::swap_is_standard(std::size_t k) const {
  check_letter(k);
  check_letter(k + 1);
  return row_of_[k] != row_of_[k + 1] && col_of_[k] != col_of_[k + 1];
}

StandardTableau StandardTableau::swapped(std::size_t k) const {
  check_letter(k);
  check_letter(k + 1);
  auto rows = rows_;
  std::swap(rows[row_of_[k]][col_of_[k]], rows[row_of_[k + 1]][col_of_[k + 1]]);
  return StandardTableau(std::move(rows));
}

std::vector<StandardTableau> enumerate_syt(const YoungDiagram& shape) {
  std::vector<Filling> fillings;
  syt_fillings(shape.rows(), shape.boxes(), fillings);
  std::vector<StandardTableau> out;
  out.reserve(fillings.size());
  for (auto& f : fillings) out.emplace_back(std::move(f));
  return out;
}

std::size_t syt_count(const YoungDiagram& shape) { return enumerate_syt(shape).size(); }

int content(const StandardTableau& t, std::size_t k) {
  return static_cast<int>(t.col_of(k)) - static_cast<int>(t.row_of(k));
}

int axial_distance(const StandardTableau& t, std::size_t k) {
  return content(t, k + 1) - content(t, k);
}

std::uint64_t weyl_dimension(const YoungDiagram& shape, std::size_t d) {
  if (shape.length() > d) return 0;
  // Hook-content formula: prod (d + c - r) / prod hook(r, c).
  __extension__ typedef unsigned __int128 Wide;
  const auto gcd = [](Wide a, Wide b) {
    while (b != 0) a = std::exchange(b, a % b);
    return a;
  };
  Wide num = 1;
  Wide den = 1;
  for (std::size_t r = 0; r < shape.length(); ++r) {
    for (std::size_t c = 0; c < shape.row(r); ++c) {
      num *= static_cast<Wide>(d + c - r);
      den *= static_cast<Wide>(shape.hook(r, c));
      const Wide g = gcd(num, den);
      num /= g;
      den /= g;
    }
  }
  return static_cast<std::uint64_t>(num / den);
}

// ---------------------------------------------------------------------------
// Young-Yamanouchi irreps and Jucys-Murphy elements
// ---------------------------------------------------------------------------

IrrepMatrices yy_irrep(const YoungDiagram& shape) {
  IrrepMatrices irrep{shape, enumerate_syt(shape), {}};
  const auto dim = static_cast<Eigen::Index>(irrep.basis.size());
  std::map<std::vector<std::vector<std::size_t>>, Eigen::Index> index_of;
  for (Eigen::Index p = 0; p < dim; ++p) {
    index_of.emplace(irrep.basis[static_cast<std::size_t>(p)].rows(), p);
  }
  const std::size_t n = shape.boxes();
  for (std::size_t k = 1; k < n; ++k) {
    Eigen::MatrixXd g = Eigen::MatrixXd::Zero(dim, dim);
    for (Eigen::Index p = 0; p < dim; ++p) {
      const StandardTableau& t = irrep.basis[static_cast<std::size_t>(p)];
      const double a = axial_distance(t, k);
      if (t.swap_is_standard(k)) {
        const Eigen::Index q = index_of.at(t.swapped(k).rows());
        g(p, p) = 1.0 / a;
        g(q, p) = std::sqrt(1.0 - 1.0 / (a * a));
      } else {
        // Letters k, k+1 share a row (a = 1) or a column (a = -1).
        g(p, p) = a > 0 ? 1.0 : -1.0;
      }
    }
    irrep.generators.push_back(std::move(g));
  }
  return irrep;
}

Eigen::MatrixXd irrep_matrix(const IrrepMatrices& irrep, const Permutation& pi) {
  if (pi.size() != irrep.shape.boxes()) {
    throw ContractViolation("irrep_matrix: permutation size does not match the diagram");
  }
  const auto dim = static_cast<Eigen::Index>(irrep.dim());
  Eigen::MatrixXd out = Eigen::MatrixXd::Identity(dim, dim);
  for (std::size_t i : pi.adjacent_word()) out = out * irrep.generators[i];
  return out;
}

Eigen::MatrixXd jm_irrep(const IrrepMatrices& irrep, std::size_t k) {
  const std::size_t n = irrep.shape.boxes();
  if (k < 1 || k > n) throw ContractViolation("jm_irrep: index out of range");
  const auto dim = static_cast<Eigen::Index>(irrep.dim());
  Eigen::MatrixXd out = Eigen::MatrixXd::Zero(dim, dim);
  for (std::size_t r = 1; r < k; ++r) {
    out += irrep_matrix(irrep, Permutation::transposition(n, r - 1, k - 1));
  }
  return out;
}

double coxeter_defect(const IrrepMatrices& irrep) {
  const auto dim = static_cast<Eigen::Index>(irrep.dim());
  const Eigen::MatrixXd one = Eigen::MatrixXd::Identity(dim, dim);
  const auto& s = irrep.generators;
  double worst = 0.0;
  const auto track = [&worst](const Eigen::MatrixXd& m) {
    if (m.size() > 0) worst = std::max(worst, m.cwiseAbs().maxCoeff());
  };
  for (std::size_t i = 0; i < s.size(); ++i) {
    track(s[i] * s[i] - one);
    track(s[i].transpose() * s[i] - one);
    if (i + 1 < s.size()) {
      const Eigen::MatrixXd braid = s[i] * s[i + 1];
      track(braid * braid * braid - one);
    }
    for (std::size_t j = i + 2; j < s.size(); ++j) {
      const Eigen::MatrixXd far = s[i] * s[j];
      track(far * far - one);
    }
  }
  return worst;
}

double jm_diagonal_defect(const IrrepMatrices& irrep) {
  const auto dim = static_cast<Eigen::Index>(irrep.dim());
  double worst = 0.0;
  for (std::size_t k = 1; k <= irrep.shape.boxes(); ++k) {
    Eigen::MatrixXd expected = Eigen::MatrixXd::Zero(dim, dim);
    for (Eigen::Index p = 0; p < dim; ++p) {
      expected(p, p) = content(irrep.basis[static_cast<std::size_t>(p)], k);
    }
    const Eigen::MatrixXd diff = jm_irrep(irrep, k) - expected;
    if (diff.size() > 0) worst = std::max(worst, diff.cwiseAbs().maxCoeff());
  }
  return worst;
}

Operator jm_tensor(std::size_t k, std::size_t d, std::size_t n) {
  if (k < 1 || k > n) throw ContractViolation("jm_tensor: index out of range");
  const SubsystemShape shape = SubsystemShape::uniform(d, n);
  check_dense_dim(shape.total(), "jm_tensor");
  const auto dim = static_cast<Eigen::Index>(shape.total());
  Matrix m = Matrix::Zero(dim, dim);
  for (std::size_t r = 1; r < k; ++r) {
    const auto map = tensor_rep_index_map(Permutation::transposition(n, r - 1, k - 1), d);
    for (std::size_t x = 0; x < map.size(); ++x) {
      m(static_cast<Eigen::Index>(map[x]), static_cast<Eigen::Index>(x)) += 1.0;
    }
  }
  return Operator(std::move(m), shape);
}

std::vector<int> jm_spectrum_analytic(std::size_t k, std::size_t n, std::size_t max_rows) {
  if (k < 1 || k > n) throw ContractViolation("jm_spectrum_analytic: index out of range");
  std::vector<int> out;
  for (const YoungDiagram& shape : enumerate_diagrams(n, max_rows)) {
    for (const StandardTableau& t : enumerate_syt(shape)) out.push_back(content(t, k));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::map<int, std::uint64_t> jm_tensor_spectrum_analytic(std::size_t k, std::size_t d,
                                                         std::size_t n) {
  if (k < 1 || k > n) throw ContractViolation("jm_tensor_spectrum_analytic: index out of range");
  std::map<int, std::uint64_t> out;
  for (const YoungDiagram& shape : enumerate_diagrams(n, d)) {
    const std::uint64_t weight = weyl_dimension(shape, d);
    for (const StandardTableau& t : enumerate_syt(shape)) out[content(t, k)] += weight;
  }
  return out;
}

std::uint64_t schur_weyl_dimension_sum(std::size_t d, std::size_t n) {
  std::uint64_t total = 0;
  for (const YoungDiagram& shape : enumerate_diagrams(n, d)) {
    total += weyl_dimension(shape, d) * syt_count(shape);
  }
  return total;
}

bool schur_weyl_dim_check(std::size_t d, std::size_t n) {
  return schur_weyl_dimension_sum(d, n) == integer_power(d, n);
}

}  // namespace tranclone
