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

#include "tranclone/channels.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <numeric>
#include <shared_mutex>
#include <utility>
#include <vector>

#include "tranclone/symgroup.hpp"

namespace tranclone {

namespace {

std::vector<std::size_t> range(std::size_t first, std::size_t last) {
  std::vector<std::size_t> out(last - first);
  std::iota(out.begin(), out.end(), first);
  return out;
}

void require_density(const Operator& rho, const SubsystemShape& shape, const char* what) {
  if (!rho.is_square() || rho.row_shape() != shape) {
    throw ShapeError(std::string(what) + ": operator does not live on the expected register");
  }
  if (!is_hermitian(rho)) throw ContractViolation(std::string(what) + ": not Hermitian");
  if (std::abs(rho.trace() - Complex(1.0, 0.0)) > 1e-9) {
    throw ContractViolation(std::string(what) + ": trace is not 1");
  }
  if (!is_psd(rho)) throw ContractViolation(std::string(what) + ": not positive semidefinite");
}

void require_symmetric_support(const ChannelSpec& spec, const Operator& rho, const char* what) {
  if (!rho.is_square() || rho.row_shape() != spec.input_shape()) {
    throw ShapeError(std::string(what) + ": input must live on (C^d)^N");
  }
  if (symmetric_support_defect(spec.d, rho) > 1e-9 * (1.0 + rho.max_abs())) {
    throw ContractViolation(std::string(what) + ": input is not supported on sym^N");
  }
}

Operator sigma_or_default(const ChannelSpec& spec, const std::optional<Operator>& sigma) {
  if (!sigma) return maximally_mixed(spec.output_shape());
  require_density(*sigma, spec.output_shape(), "sigma");
  return *sigma;
}

}  // namespace

void ChannelSpec::validate() const {
  if (d < 2) throw ContractViolation("ChannelSpec: d must be >= 2");
  if (n < 1) throw ContractViolation("ChannelSpec: N must be >= 1");
  if (k < 1) throw ContractViolation("ChannelSpec: K must be >= 1");
}

std::size_t ChannelSpec::choi_dim() const {
  std::size_t dim = 1;
  for (std::size_t i = 0; i < n + k; ++i) dim *= d;
  return dim;
}

double optimal_fidelity(const ChannelSpec& spec) {
  return static_cast<double>(sym_dim(spec.d, spec.n)) /
         static_cast<double>(sym_dim(spec.d, spec.n + spec.k));
}

ChoiOperator::ChoiOperator(Operator op, SubsystemShape in_shape, SubsystemShape out_shape)
    : op_(std::move(op)), in_shape_(std::move(in_shape)), out_shape_(std::move(out_shape)) {
  const SubsystemShape joint = in_shape_.concat(out_shape_);
  if (!op_.is_square() || op_.row_shape() != joint || op_.col_shape() != joint) {
    throw ShapeError("ChoiOperator: operator must be square on input (x) output");
  }
}

Operator apply_channel(const ChoiOperator& j, const Operator& rho) {
  if (!rho.is_square() || rho.row_shape() != j.in_shape() || rho.col_shape() != j.in_shape()) {
    throw ShapeError("apply_channel: input does not match the channel's input register");
  }
  const auto din = static_cast<Eigen::Index>(j.in_shape().total());
  const auto dout = static_cast<Eigen::Index>(j.out_shape().total());
  const Matrix& m = j.op().matrix();
  const Matrix& r = rho.matrix();
  Matrix out = Matrix::Zero(dout, dout);
  // C(rho)_{ab} = sum_{ij} rho_{ji} J_{(j,a),(i,b)}.
  for (Eigen::Index i = 0; i < din; ++i) {
    for (Eigen::Index jj = 0; jj < din; ++jj) {
      const Complex w = r(jj, i);
      if (w == Complex(0.0, 0.0)) continue;
      out.noalias() += w * m.block(jj * dout, i * dout, dout, dout);
    }
  }
  return Operator(std::move(out), j.out_shape());
}

Operator output_trace(const ChoiOperator& j) {
  return partial_trace(j.op(), range(0, j.in_shape().size()));
}

double tp_defect(const ChoiOperator& j) {
  return max_abs_diff(output_trace(j), Operator::identity(j.in_shape()));
}

std::shared_ptr<const Operator> shared_sym_projector(std::size_t d, std::size_t copies) {
  static std::shared_mutex mutex;
  static std::map<std::pair<std::size_t, std::size_t>, std::shared_ptr<const Operator>> cache;
  const auto key = std::make_pair(d, copies);
  {
    std::shared_lock lock(mutex);
    if (auto it = cache.find(key); it != cache.end()) return it->second;
  }
  auto built = std::make_shared<const Operator>(sym_projector(d, copies));
  std::unique_lock lock(mutex);
  return cache.try_emplace(key, std::move(built)).first->second;
}

Operator maximally_mixed(const SubsystemShape& shape) {
  return Operator::identity(shape) * Complex(1.0 / static_cast<double>(shape.total()), 0.0);
}

Operator product_state(const Operator& psi, std::size_t copies) {
  return tensor_power(Operator::projector(psi), copies);
}

double symmetric_support_defect(std::size_t d, const Operator& rho) {
  const std::size_t copies = rho.row_shape().size();
  const Operator complement =
      Operator::identity(rho.row_shape()) - *shared_sym_projector(d, copies);
  return frobenius_norm(complement * rho * complement);
}

ChoiOperator optimal_transpose_choi(const ChannelSpec& spec, const std::optional<Operator>& sigma) {
  spec.validate();
  check_dense_dim(spec.choi_dim(), "optimal_transpose_choi");
  const Operator state = sigma_or_default(spec, sigma);
  const auto joint = shared_sym_projector(spec.d, spec.n + spec.k);
  const auto input = shared_sym_projector(spec.d, spec.n);
  Operator j = *joint * Complex(optimal_fidelity(spec), 0.0) +
               kron(Operator::identity(spec.input_shape()) - *input, state);
  return ChoiOperator(std::move(j), spec.input_shape(), spec.output_shape());
}

Operator t_cp(const ChannelSpec& spec, const Operator& rho, Domain domain) {
  spec.validate();
  if (domain == Domain::kStrictSymmetric) require_symmetric_support(spec, rho, "t_cp");
  return apply_channel(optimal_transpose_choi(spec), rho);
}

Operator t_cp_ext(const ChannelSpec& spec, const Operator& rho,
                  const std::optional<Operator>& sigma) {
  spec.validate();
  if (!rho.is_square() || rho.row_shape() != spec.input_shape()) {
    throw ShapeError("t_cp_ext: input must live on (C^d)^N");
  }
  check_dense_dim(spec.choi_dim(), "t_cp_ext");
  const Operator state = sigma_or_default(spec, sigma);
  const auto joint = shared_sym_projector(spec.d, spec.n + spec.k);
  const auto input = shared_sym_projector(spec.d, spec.n);
  const Operator lifted =
      kron(transpose_in_computational_basis(rho), Operator::identity(spec.output_shape()));
  Operator estimate = partial_trace(*joint * lifted, range(spec.n, spec.n + spec.k)) *
                      Complex(optimal_fidelity(spec), 0.0);
  const Complex leak = ((Operator::identity(spec.input_shape()) - *input) * rho).trace();
  return estimate + state * leak;
}

Operator werner_clone(const ChannelSpec& spec, const Operator& rho) {
  spec.validate();
  require_symmetric_support(spec, rho, "werner_clone");
  check_dense_dim(spec.choi_dim(), "werner_clone");
  const auto joint = shared_sym_projector(spec.d, spec.n + spec.k);
  const Operator lifted = kron(rho, Operator::identity(spec.output_shape()));
  return *joint * lifted * *joint * Complex(optimal_fidelity(spec), 0.0);
}

Operator stinespring_isometry(const ChannelSpec& spec) {
  spec.validate();
  const std::size_t dout = spec.output_shape().total();
  const std::size_t joint_dim = spec.choi_dim();
  check_dense_dim(joint_dim * dout, "stinespring_isometry");
  const Operator s = sym_isometry(spec.d, spec.n);
  const auto projector = shared_sym_projector(spec.d, spec.n + spec.k);
  const Matrix& p = projector->matrix();
  const double scale = std::sqrt(optimal_fidelity(spec));

  const auto cols = s.cols();
  const auto din = s.rows();
  Matrix v = Matrix::Zero(static_cast<Eigen::Index>(joint_dim * dout), cols);
  for (Eigen::Index c = 0; c < cols; ++c) {
    for (std::size_t k = 0; k < dout; ++k) {
      // Pi (|s_c> (x) |k>) = sum_x s_c(x) Pi(:, x * dout + k).
      Vector w = Vector::Zero(static_cast<Eigen::Index>(joint_dim));
      for (Eigen::Index x = 0; x < din; ++x) {
        const Complex coeff = s(x, c);
        if (coeff == Complex(0.0, 0.0)) continue;
        w += coeff * p.col(x * static_cast<Eigen::Index>(dout) + static_cast<Eigen::Index>(k));
      }
      for (Eigen::Index row = 0; row < static_cast<Eigen::Index>(joint_dim); ++row) {
        v(row * static_cast<Eigen::Index>(dout) + static_cast<Eigen::Index>(k), c) =
            scale * w(row);
      }
    }
  }
  const SubsystemShape rows = SubsystemShape::uniform(spec.d, spec.n + 2 * spec.k);
  return Operator(std::move(v), rows, s.col_shape());
}

Operator dilate(const Operator& v, const ChannelSpec& spec, const Operator& rho) {
  require_symmetric_support(spec, rho, "dilate");
  const Operator s = sym_isometry(spec.d, spec.n);
  const Operator coords = s.adjoint() * rho * s;
  return v * coords * v.adjoint();
}

Operator clone_branch(const Operator& dilated, const ChannelSpec& spec) {
  return partial_trace(dilated, range(0, spec.n + spec.k));
}

Operator transpose_branch(const Operator& dilated, const ChannelSpec& spec) {
  return partial_trace(dilated, range(spec.n + spec.k, spec.n + 2 * spec.k));
}

VisibilityFit fit_single_site_visibility(const ChannelSpec& spec, const Operator& psi,
                                         std::size_t site) {
  spec.validate();
  if (psi.cols() != 1 || psi.row_shape() != SubsystemShape{spec.d}) {
    throw ShapeError("single_site_visibility: psi must be a vector in C^d");
  }
  if (std::abs(psi.matrix().norm() - 1.0) > 1e-10) {
    throw ContractViolation("single_site_visibility: psi must be normalised");
  }
  if (site >= spec.k) throw ShapeError("single_site_visibility: output site out of range");
  const Operator output = t_cp(spec, product_state(psi, spec.n));
  const Operator marginal = partial_trace(output, {site});
  const Operator target = transpose_in_computational_basis(Operator::projector(psi));
  const double d = static_cast<double>(spec.d);

  VisibilityFit fit;
  fit.fidelity = (marginal * target).trace().real();
  fit.eta = (d * fit.fidelity - 1.0) / (d - 1.0);
  const Operator model = target * Complex(fit.eta, 0.0) +
                         maximally_mixed(SubsystemShape{spec.d}) * Complex(1.0 - fit.eta, 0.0);
  fit.residual = max_abs_diff(marginal, model);
  return fit;
}

double single_site_visibility(const ChannelSpec& spec, const Operator& psi, std::size_t site) {
  const VisibilityFit fit = fit_single_site_visibility(spec, psi, site);
  if (fit.residual > 1e-9) {
    throw StructureError("single_site_visibility: marginal is not of the form "
                         "eta psi^T + (1 - eta) 1/d");
  }
  return fit.eta;
}

namespace {

void require_unitary(const Operator& u) {
  if (!u.is_square()) throw ShapeError("basis_changed_transpose: u must be square");
  const Operator gram = u.adjoint() * u;
  if (max_abs_diff(gram, Operator::identity(gram.row_shape())) > 1e-10) {
    throw ContractViolation("basis_changed_transpose: u is not unitary");
  }
}

}  // namespace

Operator basis_changed_transpose(const Operator& u, const Operator& rho) {
  require_unitary(u);
  const Operator a = u * transpose_in_computational_basis(u);
  return a * transpose_in_computational_basis(rho) * a.adjoint();
}

Operator basis_changed_transpose_direct(const Operator& u, const Operator& rho) {
  require_unitary(u);
  return u * transpose_in_computational_basis(u.adjoint() * rho * u) * u.adjoint();
}

}  // namespace tranclone
