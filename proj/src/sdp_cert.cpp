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

#include "tranclone/sdp_cert.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "tranclone/symgroup.hpp"

namespace tranclone {

namespace {

std::uint64_t factorial(std::size_t n) {
  std::uint64_t f = 1;
  for (std::size_t i = 2; i <= n; ++i) f *= i;
  return f;
}

void require_matching_choi(const ChoiOperator& j, const ChannelSpec& spec, const char* what) {
  if (j.in_shape() != spec.input_shape() || j.out_shape() != spec.output_shape()) {
    throw ShapeError(std::string(what) + ": Choi registers do not match the spec");
  }
}

// pi on the first N positions, sigma on the last K.
Permutation block_permutation(const Permutation& pi, const Permutation& sigma) {
  std::vector<std::size_t> images(pi.size() + sigma.size());
  for (std::size_t i = 0; i < pi.size(); ++i) images[i] = pi(i);
  for (std::size_t i = 0; i < sigma.size(); ++i) images[pi.size() + i] = pi.size() + sigma(i);
  return Permutation(std::move(images));
}

}  // namespace

Operator performance_operator(const ChannelSpec& spec) {
  spec.validate();
  check_dense_dim(spec.choi_dim(), "performance_operator");
  return *shared_sym_projector(spec.d, spec.n + spec.k) *
         Complex(1.0 / static_cast<double>(sym_dim(spec.d, spec.n + spec.k)), 0.0);
}

PrimalProblem make_primal_problem(const ChannelSpec& spec) {
  return PrimalProblem{spec, performance_operator(spec)};
}

PrimalCheck primal_check(const ChoiOperator& j, const ChannelSpec& spec, double tol) {
  require_matching_choi(j, spec, "primal_check");
  PrimalCheck out;
  out.min_eigenvalue = min_eigenvalue(j.op());
  out.tp_defect = tp_defect(j);
  out.value = hs_inner(performance_operator(spec), j.op()).real();
  out.feasible = out.min_eigenvalue >= -tol && out.tp_defect <= tol;
  return out;
}

DualCertificate dual_certificate(const ChannelSpec& spec) {
  spec.validate();
  check_dense_dim(spec.input_shape().total(), "dual_certificate");
  return DualCertificate{*shared_sym_projector(spec.d, spec.n) *
                         Complex(1.0 / static_cast<double>(sym_dim(spec.d, spec.n + spec.k)),
                                 0.0)};
}

double dual_slack(const DualCertificate& x, const ChannelSpec& spec) {
  if (x.x.row_shape() != spec.input_shape() || x.x.col_shape() != spec.input_shape()) {
    throw ShapeError("dual_check: certificate does not live on the input register");
  }
  const Operator lifted = kron(x.x, Operator::identity(spec.output_shape()));
  return min_eigenvalue(lifted - performance_operator(spec));
}

bool dual_check(const DualCertificate& x, const ChannelSpec& spec, double tol) {
  return dual_slack(x, spec) >= -tol;
}

OptimalityCertificate certify_optimality(const ChannelSpec& spec) {
  OptimalityCertificate cert;
  cert.spec = spec;
  cert.primal = primal_check(optimal_transpose_choi(spec), spec);
  const DualCertificate x = dual_certificate(spec);
  cert.dual_value = x.x.trace().real();
  cert.dual_slack = dual_slack(x, spec);
  cert.dual_feasible = cert.dual_slack >= -kFeasibilityTolerance;
  cert.gap = std::abs(cert.primal.value - cert.dual_value);
  cert.passed = cert.primal.feasible && cert.dual_feasible && cert.gap <= kObjectiveTolerance &&
                std::abs(cert.dual_value - optimal_fidelity(spec)) <= kObjectiveTolerance;
  return cert;
}

std::vector<VerificationReport> OptimalityCertificate::reports(const ReportParams& params) const {
  const double primal_violation =
      std::max({0.0, -primal.min_eigenvalue, primal.tp_defect});
  return {
      VerificationReport::make("lemB1.primal_feasibility", params, primal_violation, 0.0,
                               kFeasibilityTolerance),
      VerificationReport::make("lemB1.dual_feasibility", params, std::max(0.0, -dual_slack),
                               0.0, kFeasibilityTolerance),
      VerificationReport::make("thm1.duality_gap", params, primal.value, dual_value,
                               kObjectiveTolerance),
      VerificationReport::make("thm1.fidelity", params, primal.value, optimal_fidelity(spec),
                               kObjectiveTolerance),
  };
}

ChoiOperator permutation_twirl(const ChoiOperator& j, const ChannelSpec& spec) {
  require_matching_choi(j, spec, "permutation_twirl");
  if (factorial(spec.n) * factorial(spec.k) > 40320) {
    throw ResourceError("permutation_twirl: too many permutations");
  }
  const Matrix& m = j.op().matrix();
  Matrix out = Matrix::Zero(m.rows(), m.cols());
  const auto input_perms = Permutation::all(spec.n);
  const auto output_perms = Permutation::all(spec.k);
  for (const Permutation& pi : input_perms) {
    for (const Permutation& sigma : output_perms) {
      const auto map = tensor_rep_index_map(block_permutation(pi, sigma), spec.d);
      for (std::size_t y = 0; y < map.size(); ++y) {
        for (std::size_t x = 0; x < map.size(); ++x) {
          out(static_cast<Eigen::Index>(map[x]), static_cast<Eigen::Index>(map[y])) +=
              m(static_cast<Eigen::Index>(x), static_cast<Eigen::Index>(y));
        }
      }
    }
  }
  out /= static_cast<double>(input_perms.size() * output_perms.size());
  return ChoiOperator(Operator(std::move(out), j.op().row_shape()), j.in_shape(), j.out_shape());
}

ChoiOperator unitary_twirl(const ChoiOperator& j, const ChannelSpec& spec) {
  require_matching_choi(j, spec, "unitary_twirl");
  const std::size_t n = spec.n + spec.k;
  if (factorial(n) > 720) throw ResourceError("unitary_twirl: too many permutations");
  const auto perms = Permutation::all(n);
  const auto count = static_cast<Eigen::Index>(perms.size());

  Eigen::MatrixXd gram(count, count);
  for (Eigen::Index a = 0; a < count; ++a) {
    const Permutation inv = perms[static_cast<std::size_t>(a)].inverse();
    for (Eigen::Index b = 0; b < count; ++b) {
      const std::size_t cycles = (inv * perms[static_cast<std::size_t>(b)]).cycle_count();
      gram(a, b) = std::pow(static_cast<double>(spec.d), static_cast<double>(cycles));
    }
  }
  const Matrix& m = j.op().matrix();
  std::vector<std::vector<std::size_t>> maps;
  maps.reserve(perms.size());
  Vector overlaps(count);
  for (Eigen::Index a = 0; a < count; ++a) {
    maps.push_back(tensor_rep_index_map(perms[static_cast<std::size_t>(a)], spec.d));
    Complex acc(0.0, 0.0);
    const auto& map = maps.back();
    for (std::size_t x = 0; x < map.size(); ++x) {
      acc += m(static_cast<Eigen::Index>(map[x]), static_cast<Eigen::Index>(x));
    }
    overlaps(a) = acc;
  }

  // The permutation operators are linearly dependent once d < N+K, so the
  // Gram matrix is inverted on its range only.
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(gram);
  const Eigen::VectorXd& lambda = solver.eigenvalues();
  const double cutoff = 1e-10 * lambda.cwiseAbs().maxCoeff();
  Eigen::VectorXd inv(lambda.size());
  for (Eigen::Index i = 0; i < lambda.size(); ++i) {
    inv(i) = lambda(i) > cutoff ? 1.0 / lambda(i) : 0.0;
  }
  const Eigen::MatrixXcd basis = solver.eigenvectors().cast<Complex>();
  const Vector coeffs =
      basis * (inv.cast<Complex>().asDiagonal() * (basis.transpose() * overlaps));

  Matrix out = Matrix::Zero(m.rows(), m.cols());
  for (Eigen::Index a = 0; a < count; ++a) {
    const auto& map = maps[static_cast<std::size_t>(a)];
    for (std::size_t x = 0; x < map.size(); ++x) {
      out(static_cast<Eigen::Index>(map[x]), static_cast<Eigen::Index>(x)) += coeffs(a);
    }
  }
  return ChoiOperator(Operator(std::move(out), j.op().row_shape()), j.in_shape(), j.out_shape());
}

double pieri_slack(const ChannelSpec& spec) {
  spec.validate();
  check_dense_dim(spec.choi_dim(), "pieri_inequality_check");
  const Operator lhs = kron(*shared_sym_projector(spec.d, spec.n),
                            Operator::identity(spec.output_shape()));
  return min_eigenvalue(lhs - *shared_sym_projector(spec.d, spec.n + spec.k));
}

bool pieri_inequality_check(const ChannelSpec& spec, double tol) {
  return pieri_slack(spec) >= -tol;
}

ChoiOperator random_feasible_choi(const ChannelSpec& spec, std::mt19937_64& rng,
                                  std::size_t rank) {
  spec.validate();
  const std::size_t dim = spec.choi_dim();
  check_dense_dim(dim, "random_feasible_choi");
  if (rank == 0) rank = dim;
  // Tr_O J has rank at most rank * d^K and must be invertible.
  if (rank * spec.output_shape().total() < spec.input_shape().total()) {
    throw ContractViolation("random_feasible_choi: rank too small to be trace preserving");
  }
  const Matrix a = ginibre(dim, rank, rng);
  const SubsystemShape joint = spec.input_shape().concat(spec.output_shape());
  const ChoiOperator raw(Operator(a * a.adjoint(), joint), spec.input_shape(),
                         spec.output_shape());
  const Operator scale = kron(psd_inverse_sqrt(output_trace(raw)),
                              Operator::identity(spec.output_shape()));
  Operator j = scale * raw.op() * scale;
  return ChoiOperator(hermitian_part(j), spec.input_shape(), spec.output_shape());
}

ChoiOperator discard_choi(const ChannelSpec& spec) {
  spec.validate();
  const SubsystemShape joint = spec.input_shape().concat(spec.output_shape());
  return ChoiOperator(maximally_mixed(joint) * Complex(static_cast<double>(spec.input_shape().total()), 0.0),
                      spec.input_shape(), spec.output_shape());
}

}  // namespace tranclone
