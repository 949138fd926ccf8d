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

// Seeded Haar sampling and Monte Carlo estimates used as independent oracles
// for the closed-form channel formulas.

#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

#include "tranclone/channels.hpp"
#include "tranclone/report.hpp"
#include "tranclone/tensor.hpp"

namespace tranclone {

/// Reproducible source of random engines. Every (seed, stream_id, substream)
/// triple names an independent engine, so sample i can be drawn from
/// engine(i) on any thread without changing the results.
class SeededSampler {
 public:
  explicit SeededSampler(std::uint64_t seed, std::uint64_t stream_id = 0)
      : seed_(seed), stream_id_(stream_id) {}

  std::uint64_t seed() const { return seed_; }
  std::uint64_t stream_id() const { return stream_id_; }

  std::mt19937_64 engine(std::uint64_t substream) const;
  /// Sampler for an independent child stream.
  SeededSampler split(std::uint64_t child) const;

 private:
  std::uint64_t seed_;
  std::uint64_t stream_id_;
};

/// rows x cols matrix of i.i.d. standard complex Gaussians (E|z|^2 = 1).
Matrix ginibre(std::size_t rows, std::size_t cols, std::mt19937_64& rng);

/// Haar-random unit vector in C^d (column vector operator).
Operator haar_state(std::size_t d, std::mt19937_64& rng);

/// Haar-random unitary: QR of a Ginibre matrix with the phases of R's
/// diagonal moved into Q.
Operator haar_unitary(std::size_t d, std::mt19937_64& rng);

/// Random full-rank density operator GG^dagger / Tr(GG^dagger) on
/// (C^d)^{\otimes copies} for a square Ginibre G.
Operator random_density(std::size_t d, std::size_t copies, std::mt19937_64& rng);
/// Random density operator supported on sym^copies(C^d), embedded in the
/// full tensor product.
Operator random_symmetric_state(std::size_t d, std::size_t copies, std::mt19937_64& rng);

/// Empirical mean of (|psi><psi|)^{\otimes m} against Pi_sym^{(m)} / d_S^m.
/// Passes when the largest entry deviation is at most 5 / sqrt(samples).
VerificationReport moment_identity_check(std::size_t d, std::size_t m, std::size_t samples,
                                         const SeededSampler& sampler);

/// Tr[C(psi^{\otimes N}) (psi^T)^{\otimes K}] for one pure state.
double pure_state_fidelity(const ChoiOperator& channel, const ChannelSpec& spec,
                           const Operator& psi);

/// Per-sample fidelities; sample i uses sampler.engine(i).
std::vector<double> sampled_fidelities(const ChoiOperator& channel, const ChannelSpec& spec,
                                       std::size_t samples, const SeededSampler& sampler);

struct FidelityEstimate {
  double estimate = 0.0;
  double standard_error = 0.0;
  double min = 0.0;
  double max = 0.0;
  double variance = 0.0;  ///< sample variance of the per-state fidelity
  std::size_t samples = 0;
};

FidelityEstimate summarize(const std::vector<double>& values);

/// Haar average of the pure-state fidelity with its standard error.
FidelityEstimate mc_average_fidelity(const ChoiOperator& channel, const ChannelSpec& spec,
                                     std::size_t samples, const SeededSampler& sampler);

/// Smallest per-state fidelity over the sample set.
double worst_case_scan(const ChoiOperator& channel, const ChannelSpec& spec,
                       std::size_t samples, const SeededSampler& sampler);

/// Pass rule for Monte Carlo agreement: |estimate - expected| within
/// max(3 standard errors, 1e-9).
double mc_tolerance(const FidelityEstimate& estimate);

}  // namespace tranclone
