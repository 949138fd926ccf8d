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

#include "tranclone/haar.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "tranclone/parallel.hpp"
#include "tranclone/symgroup.hpp"

namespace tranclone {

std::mt19937_64 SeededSampler::engine(std::uint64_t substream) const {
  const auto lo = [](std::uint64_t v) { return static_cast<std::uint32_t>(v); };
  const auto hi = [](std::uint64_t v) { return static_cast<std::uint32_t>(v >> 32); };
  std::seed_seq seq{lo(seed_), hi(seed_), lo(stream_id_), hi(stream_id_),
                    lo(substream), hi(substream)};
  return std::mt19937_64(seq);
}

SeededSampler SeededSampler::split(std::uint64_t child) const {
  // Distinct children map to distinct stream ids for a fixed parent.
  return SeededSampler(seed_, stream_id_ * 0x9E3779B97F4A7C15ULL + child + 1);
}

Matrix ginibre(std::size_t rows, std::size_t cols, std::mt19937_64& rng) {
  std::normal_distribution<double> normal(0.0, std::sqrt(0.5));
  Matrix g(static_cast<Eigen::Index>(rows), static_cast<Eigen::Index>(cols));
  for (Eigen::Index j = 0; j < g.cols(); ++j) {
    for (Eigen::Index i = 0; i < g.rows(); ++i) {
      const double re = normal(rng);
      const double im = normal(rng);
      g(i, j) = Complex(re, im);
    }
  }
  return g;
}

Operator haar_state(std::size_t d, std::mt19937_64& rng) {
  if (d == 0) throw ContractViolation("haar_state: d must be >= 1");
  Vector v = ginibre(d, 1, rng).col(0);
  v /= v.norm();
  return Operator::ket(std::move(v), SubsystemShape{d});
}

Operator haar_unitary(std::size_t d, std::mt19937_64& rng) {
  if (d == 0) throw ContractViolation("haar_unitary: d must be >= 1");
  const Matrix g = ginibre(d, d, rng);
  Eigen::HouseholderQR<Matrix> qr(g);
  Matrix q = qr.householderQ();
  const Matrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (Eigen::Index i = 0; i < q.cols(); ++i) {
    const Complex diag = r(i, i);
    const double mag = std::abs(diag);
    q.col(i) *= mag > 0.0 ? diag / mag : Complex(1.0, 0.0);
  }
  return Operator(std::move(q), SubsystemShape{d});
}

VerificationReport moment_identity_check(std::size_t d, std::size_t m, std::size_t samples,
                                         const SeededSampler& sampler) {
  const SubsystemShape shape = SubsystemShape::uniform(d, m);
  check_dense_dim(shape.total(), "moment_identity_check");
  if (samples == 0) throw ContractViolation("moment_identity_check: samples must be >= 1");
  const auto dim = static_cast<Eigen::Index>(shape.total());
  Matrix sum = Matrix::Zero(dim, dim);
  for (std::size_t s = 0; s < samples; ++s) {
    auto rng = sampler.engine(s);
    const Operator psi = haar_state(d, rng);
    Vector v = Vector::Ones(1);
    for (std::size_t c = 0; c < m; ++c) {
      Vector next(v.size() * psi.rows());
      for (Eigen::Index i = 0; i < v.size(); ++i) {
        next.segment(i * psi.rows(), psi.rows()) = v(i) * psi.matrix().col(0);
      }
      v = std::move(next);
    }
    sum.noalias() += v * v.adjoint();
  }
  sum /= static_cast<double>(samples);
  const Matrix target = sym_projector(d, m).matrix() / static_cast<double>(sym_dim(d, m));
  const double deviation = (sum - target).cwiseAbs().maxCoeff();

  ReportParams params;
  params.d = d;
  params.n = m;
  params.samples = samples;
  params.seed = sampler.seed();
  return VerificationReport::make("appA.haar_moment", params, deviation, 0.0,
                                  5.0 / std::sqrt(static_cast<double>(samples)));
}

double pure_state_fidelity(const ChoiOperator& channel, const ChannelSpec& spec,
                           const Operator& psi) {
  const Operator output = apply_channel(channel, product_state(psi, spec.n));
  // (psi^T)^{\otimes K} = |conj psi><conj psi|^{\otimes K}.
  const Operator target = product_state(conjugate(psi), spec.k);
  return hs_inner(target, output).real();
}

std::vector<double> sampled_fidelities(const ChoiOperator& channel, const ChannelSpec& spec,
                                       std::size_t samples, const SeededSampler& sampler) {
  if (channel.in_shape() != spec.input_shape() || channel.out_shape() != spec.output_shape()) {
    throw ShapeError("sampled_fidelities: channel registers do not match the spec");
  }
  std::vector<double> values(samples);
  parallel_for(samples, [&](std::size_t i) {
    auto rng = sampler.engine(i);
    values[i] = pure_state_fidelity(channel, spec, haar_state(spec.d, rng));
  });
  return values;
}

FidelityEstimate summarize(const std::vector<double>& values) {
  FidelityEstimate out;
  out.samples = values.size();
  if (values.empty()) return out;
  const double n = static_cast<double>(values.size());
  out.estimate = pairwise_sum(values) / n;
  std::vector<double> squares(values.size());
  for (std::size_t i = 0; i < values.size(); ++i) {
    const double dev = values[i] - out.estimate;
    squares[i] = dev * dev;
  }
  out.variance = values.size() > 1 ? pairwise_sum(squares) / (n - 1.0) : 0.0;
  out.standard_error = std::sqrt(out.variance / n);
  const auto [lo, hi] = std::minmax_element(values.begin(), values.end());
  out.min = *lo;
  out.max = *hi;
  return out;
}

FidelityEstimate mc_average_fidelity(const ChoiOperator& channel, const ChannelSpec& spec,
                                     std::size_t samples, const SeededSampler& sampler) {
  return summarize(sampled_fidelities(channel, spec, samples, sampler));
}

double worst_case_scan(const ChoiOperator& channel, const ChannelSpec& spec,
                       std::size_t samples, const SeededSampler& sampler) {
  const auto values = sampled_fidelities(channel, spec, samples, sampler);
  return values.empty() ? std::numeric_limits<double>::quiet_NaN()
                        : *std::min_element(values.begin(), values.end());
}

double mc_tolerance(const FidelityEstimate& estimate) {
  return std::max(3.0 * estimate.standard_error, 1e-9);
}

Operator random_density(std::size_t d, std::size_t copies, std::mt19937_64& rng) {
  const SubsystemShape shape = SubsystemShape::uniform(d, copies);
  check_dense_dim(shape.total(), "random_density");
  const Matrix g = ginibre(shape.total(), shape.total(), rng);
  Matrix rho = g * g.adjoint();
  rho /= rho.trace();
  return hermitian_part(Operator(std::move(rho), shape));
}

Operator random_symmetric_state(std::size_t d, std::size_t copies, std::mt19937_64& rng) {
  const Operator s = sym_isometry(d, copies);
  const auto dim = static_cast<std::size_t>(s.cols());
  const Matrix g = ginibre(dim, dim, rng);
  Matrix inner = g * g.adjoint();
  inner /= inner.trace();
  const Operator rho(s.matrix() * inner * s.matrix().adjoint(), s.row_shape());
  return hermitian_part(rho);
}

}  // namespace tranclone
