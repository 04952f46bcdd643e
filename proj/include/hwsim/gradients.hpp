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
#include <optional>
#include <string_view>
#include <vector>

#include "hwsim/circuit.hpp"
#include "hwsim/subspace.hpp"

namespace hwsim {

/// Forward states at every gate boundary: layers[0] is the input, layers[g + 1]
/// the state after gate g.
struct InnerTrace {
  std::vector<Eigen::VectorXd> layers;

  const Eigen::VectorXd& output() const { return layers.back(); }
};

InnerTrace forward_with_trace(const SubspaceCircuit& circuit, const Eigen::Ref<const Eigen::VectorXd>& thetas,
                              const Eigen::Ref<const Eigen::VectorXd>& input);

/// ||output - target||^2
double quadratic_cost(const Eigen::Ref<const Eigen::VectorXd>& output, const Eigen::Ref<const Eigen::VectorXd>& target);

struct GradientResult {
  Eigen::VectorXd grad;
  double cost = 0.0;
};

/// Exact dC/dtheta for the quadratic cost by one forward and one backward sweep.
///
/// The backward sweep carries the inner error delta = dC/dzeta through the
/// transposed gate blocks. For gate g with input zeta and output error delta,
/// each rotated pair (l, j) contributes
///   delta_l (-sin zeta_l + s cos zeta_j) + delta_j (-s cos zeta_l - sin zeta_j).
GradientResult backprop_gradient(const SubspaceCircuit& circuit, const Eigen::Ref<const Eigen::VectorXd>& thetas,
                                 const Eigen::Ref<const Eigen::VectorXd>& input,
                                 const Eigen::Ref<const Eigen::VectorXd>& target);

/// Inner errors delta^0 .. delta^D, delta^D = 2 (z - y) and
/// delta^g = (w^g)^T delta^{g+1}.
std::vector<Eigen::VectorXd> inner_errors(const SubspaceCircuit& circuit, const Eigen::Ref<const Eigen::VectorXd>& thetas,
                                          const Eigen::Ref<const Eigen::VectorXd>& input,
                                          const Eigen::Ref<const Eigen::VectorXd>& target);

GradientResult backprop_gradient(const Circuit& circuit, int k, const Eigen::Ref<const Eigen::VectorXd>& input,
                                 const Eigen::Ref<const Eigen::VectorXd>& target);

/// Central differences (C(t + h) - C(t - h)) / 2h by full re-simulation.
Eigen::VectorXd finite_difference_gradient(const Circuit& circuit, int k, const Eigen::Ref<const Eigen::VectorXd>& input,
                                           const Eigen::Ref<const Eigen::VectorXd>& target, double step);

enum class OptimizerMethod { kGradientDescent, kMomentum, kAdam };

std::string_view to_string(OptimizerMethod method);
OptimizerMethod parse_optimizer(std::string_view name);

struct OptimizerConfig {
  OptimizerMethod method = OptimizerMethod::kGradientDescent;
  double learning_rate = 0.1;
  double momentum = 0.9;  // heavy-ball coefficient
  double beta1 = 0.9;
  double beta2 = 0.999;
  double epsilon = 1e-8;
  std::size_t max_iterations = 10000;
  double tolerance = 1e-6;  // stop once the cost drops below this
  /// Draw the starting angles uniformly in [0, 2pi) instead of using the circuit's.
  bool random_init = false;
  /// Independent random starts; the best run is returned. Only used with random_init.
  std::size_t restarts = 1;
  std::uint64_t seed = 0;
};

struct TrainingResult {
  Eigen::VectorXd thetas;
  double final_cost = 0.0;
  std::size_t iterations = 0;
  std::vector<double> history;  // cost before each update, then the final cost
};

/// Fits W^k(theta) e_s to the normalized target by gradient descent.
TrainingResult train_loader(const Circuit& circuit, int k, std::size_t initial_index,
                            const Eigen::Ref<const Eigen::VectorXd>& target, const OptimizerConfig& config);

}  // namespace hwsim
