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

#include "hwsim/variance.hpp"

#include <algorithm>
#include <numbers>
#include <string>
#include <thread>
#include <vector>

#include "hwsim/errors.hpp"
#include "hwsim/gradients.hpp"

namespace hwsim {

std::string_view to_string(SamplingMode mode) {
  switch (mode) {
    case SamplingMode::kHaarSphere:
      return "haar_sphere";
    case SamplingMode::kCubeNormalized:
      return "cube_normalized";
    case SamplingMode::kBasisPoint:
      return "basis_point";
  }
  return "haar_sphere";
}

SamplingMode parse_sampling_mode(std::string_view name) {
  if (name == "haar_sphere" || name == "haar") return SamplingMode::kHaarSphere;
  if (name == "cube_normalized" || name == "cube") return SamplingMode::kCubeNormalized;
  if (name == "basis_point" || name == "basis") return SamplingMode::kBasisPoint;
  throw DomainError("unknown sampling mode '" + std::string(name) +
                    "' (expected haar_sphere, cube_normalized or basis_point)");
}

Eigen::VectorXd sample_state(const BasisIndexer& indexer, const StateSampler& sampler, std::mt19937_64& rng) {
  const auto d = static_cast<Eigen::Index>(indexer.dim());
  Eigen::VectorXd v(d);
  switch (sampler.mode) {
    case SamplingMode::kBasisPoint:
      return SubspaceState::basis(indexer, sampler.basis_index).amplitudes();
    case SamplingMode::kHaarSphere: {
      std::normal_distribution<double> gauss(0.0, 1.0);
      do {
        for (Eigen::Index r = 0; r < d; ++r) v(r) = gauss(rng);
      } while (v.squaredNorm() == 0.0);
      break;
    }
    case SamplingMode::kCubeNormalized: {
      std::uniform_real_distribution<double> cube(-1.0, 1.0);
      do {
        for (Eigen::Index r = 0; r < d; ++r) v(r) = cube(rng);
      } while (v.squaredNorm() == 0.0);
      break;
    }
  }
  return v / v.norm();
}

double theory_variance(int n, int k) {
  if (k < 1 || k > n - 1) throw DomainError("theory_variance: need 1 <= k <= n - 1");
  const double nd = n;
  const double kd = k;
  return kd * (nd - kd) / (nd * (nd - 1.0)) * 8.0 / static_cast<double>(binomial(n, k));
}

std::size_t lambda0(const SubspaceCircuit& circuit, std::size_t initial_index) {
  const std::size_t d = circuit.dim();
  if (initial_index >= d) throw DomainError("lambda0: initial index out of range");
  std::vector<char> reached(d, 0);
  reached[initial_index] = 1;
  std::size_t count = 1;
  if (count == d) return 1;
  for (std::size_t g = 0; g < circuit.size(); ++g) {
    for (const RotationPair& p : circuit.pairs(g)) {
      if (reached[p.first] != reached[p.second]) {
        reached[p.first] = reached[p.second] = 1;
        ++count;
      }
    }
    if (count == d) return g + 1;
  }
  return circuit.size() + 1;
}

std::size_t lambda0(const Circuit& circuit, int k, std::size_t initial_index) {
  return lambda0(SubspaceCircuit(circuit, k), initial_index);
}

namespace {

std::mt19937_64 sample_rng(std::uint64_t seed, std::size_t sample) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(sample), static_cast<std::uint32_t>(static_cast<std::uint64_t>(sample) >> 32)};
  return std::mt19937_64(seq);
}

}  // namespace

Eigen::MatrixXd sample_gradients(const Circuit& circuit, int k, const VarianceConfig& config) {
  if (config.samples < 2) throw DomainError("gradient statistics need at least 2 samples");
  const SubspaceCircuit bound(circuit, k);
  const auto params = static_cast<Eigen::Index>(bound.size());
  Eigen::MatrixXd grads(static_cast<Eigen::Index>(config.samples), params);

  auto work = [&](std::size_t begin, std::size_t end) {
    std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);
    Eigen::VectorXd theta(params);
    for (std::size_t s = begin; s < end; ++s) {
      auto rng = sample_rng(config.seed, s);
      for (Eigen::Index g = 0; g < params; ++g) theta(g) = angle(rng);
      const Eigen::VectorXd x = sample_state(bound.indexer(), config.input, rng);
      const Eigen::VectorXd y = sample_state(bound.indexer(), config.target, rng);
      grads.row(static_cast<Eigen::Index>(s)) = backprop_gradient(bound, theta, x, y).grad.transpose();
    }
  };

  const std::size_t threads = std::clamp<std::size_t>(config.threads, 1, config.samples);
  if (threads == 1) {
    work(0, config.samples);
  } else {
    std::vector<std::jthread> pool;
    const std::size_t chunk = (config.samples + threads - 1) / threads;
    for (std::size_t t = 0; t < threads; ++t) {
      const std::size_t begin = t * chunk;
      const std::size_t end = std::min(config.samples, begin + chunk);
      if (begin < end) pool.emplace_back(work, begin, end);
    }
  }
  return grads;
}

GradStats summarize_gradients(const Eigen::Ref<const Eigen::MatrixXd>& grads) {
  const auto n = grads.rows();
  if (n < 2) throw DomainError("gradient statistics need at least 2 samples");
  GradStats out;
  out.samples = static_cast<std::size_t>(n);
  out.per_param_mean = grads.colwise().mean().transpose();
  const Eigen::MatrixXd centered = grads.rowwise() - out.per_param_mean.transpose();
  out.per_param_var = centered.colwise().squaredNorm().transpose() / static_cast<double>(n - 1);
  out.stderr_mean = (out.per_param_var / static_cast<double>(n)).cwiseSqrt();
  if (grads.cols() > 0) {
    out.pooled_mean = grads.mean();
    out.pooled_var = (grads.array() - out.pooled_mean).square().sum() / static_cast<double>(grads.size() - 1);
  }
  return out;
}

GradStats gradient_statistics(const Circuit& circuit, int k, const VarianceConfig& config) {
  if (config.samples < kMinStatisticsSamples) {
    throw DomainError("gradient_statistics: need at least " + std::to_string(kMinStatisticsSamples) + " samples");
  }
  GradStats out = summarize_gradients(sample_gradients(circuit, k, config));
  out.theory_var = theory_variance(circuit.n(), k);
  out.lambda0 = config.input.mode == SamplingMode::kBasisPoint ? lambda0(circuit, k, config.input.basis_index) : 1;
  return out;
}

}  // namespace hwsim
