// Copyright 2026 The hwsim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <random>
#include <string_view>

#include "hwsim/circuit.hpp"
#include "hwsim/combinatorics.hpp"
#include "hwsim/subspace.hpp"

namespace hwsim {

enum class SamplingMode {
  kHaarSphere,      // normalized standard Gaussian: uniform on the unit sphere
  kCubeNormalized,  // uniform in [-1, 1]^d, then normalized (not Haar)
  kBasisPoint,      // the fixed basis vector e_s
};

std::string_view to_string(SamplingMode mode);
SamplingMode parse_sampling_mode(std::string_view name);

struct StateSampler {
  SamplingMode mode = SamplingMode::kHaarSphere;
  std::size_t basis_index = 0;
};

Eigen::VectorXd sample_state(const BasisIndexer& indexer, const StateSampler& sampler, std::mt19937_64& rng);

/// k (n - k) / (n (n - 1)) * 8 / C(n, k); defined for 1 <= k <= n - 1.
double theory_variance(int n, int k);

/// Reachable-support propagation from e_s: 1 + (zero-based) index of the first
/// gate after which every state of B_k^n is reachable, or D + 1 if that never
/// happens. Returns 1 when the support is full from the start (d_k = 1).
std::size_t lambda0(const SubspaceCircuit& circuit, std::size_t initial_index);
std::size_t lambda0(const Circuit& circuit, int k, std::size_t initial_index);

struct VarianceConfig {
  StateSampler input{};
  StateSampler target{};
  std::size_t samples = 10000;
  std::uint64_t seed = 0;
  unsigned threads = 1;
};

struct GradStats {
  Eigen::VectorXd per_param_mean;
  Eigen::VectorXd per_param_var;
  Eigen::VectorXd stderr_mean;
  std::size_t samples = 0;
  double theory_var = 0.0;
  std::size_t lambda0 = 1;
  double pooled_mean = 0.0;
  double pooled_var = 0.0;
};

/// samples x D matrix of dC/dtheta. Sample s draws (theta ~ U[0, 2pi)^D, input,
/// target) from its own generator seeded by (seed, s), so the result does not
/// depend on the thread count.
Eigen::MatrixXd sample_gradients(const Circuit& circuit, int k, const VarianceConfig& config);

/// Column statistics of a samples x D gradient matrix (unbiased variance).
GradStats summarize_gradients(const Eigen::Ref<const Eigen::MatrixXd>& grads);

inline constexpr std::size_t kMinStatisticsSamples = 100;

GradStats gradient_statistics(const Circuit& circuit, int k, const VarianceConfig& config);

}  // namespace hwsim
