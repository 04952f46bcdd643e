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

#include "hwsim/gradients.hpp"

#include <cmath>
#include <numbers>
#include <random>
#include <string>

#include "hwsim/errors.hpp"

namespace hwsim {

namespace {

void check_shapes(const SubspaceCircuit& circuit, Eigen::Index thetas, Eigen::Index input, Eigen::Index target) {
  const auto d = static_cast<Eigen::Index>(circuit.dim());
  if (thetas != static_cast<Eigen::Index>(circuit.size())) throw DomainError("theta length differs from gate count");
  if (input != d) throw DomainError("input length differs from C(n,k)");
  if (target != d) throw DomainError("target length differs from C(n,k)");
}

}  // namespace

InnerTrace forward_with_trace(const SubspaceCircuit& circuit, const Eigen::Ref<const Eigen::VectorXd>& thetas,
                              const Eigen::Ref<const Eigen::VectorXd>& input) {
  check_shapes(circuit, thetas.size(), input.size(), input.size());
  InnerTrace trace;
  trace.layers.reserve(circuit.size() + 1);
  trace.layers.emplace_back(input);
  for (std::size_t g = 0; g < circuit.size(); ++g) {
    Eigen::VectorXd next = trace.layers.back();
    apply_gates(circuit, thetas, next, g, g + 1);
    trace.layers.push_back(std::move(next));
  }
  return trace;
}

double quadratic_cost(const Eigen::Ref<const Eigen::VectorXd>& output, const Eigen::Ref<const Eigen::VectorXd>& target) {
  if (output.size() != target.size()) throw DomainError("cost: output and target lengths differ");
  return (output - target).squaredNorm();
}

GradientResult backprop_gradient(const SubspaceCircuit& circuit, const Eigen::Ref<const Eigen::VectorXd>& thetas,
                                 const Eigen::Ref<const Eigen::VectorXd>& input,
                                 const Eigen::Ref<const Eigen::VectorXd>& target) {
  check_shapes(circuit, thetas.size(), input.size(), target.size());
  const InnerTrace trace = forward_with_trace(circuit, thetas, input);

  GradientResult result;
  result.cost = quadratic_cost(trace.output(), target);
  result.grad = Eigen::VectorXd::Zero(thetas.size());

  Eigen::VectorXd delta = 2.0 * (trace.output() - target);
  for (std::size_t g = circuit.size(); g-- > 0;) {
    const double t = thetas(static_cast<Eigen::Index>(g));
    const double c = std::cos(t);
    const double s = std::sin(t);
    const Eigen::VectorXd& zeta = trace.layers[g];
    double acc = 0.0;
    for (const RotationPair& p : circuit.pairs(g)) {
      const double zl = zeta(p.first);
      const double zj = zeta(p.second);
      acc += delta(p.first) * (-s * zl + p.sign * c * zj) + delta(p.second) * (-p.sign * c * zl - s * zj);
    }
    result.grad(static_cast<Eigen::Index>(g)) = acc;
    // delta^g = (w^g)^T delta^{g+1}: the transpose is the rotation by -theta.
    rotate_pairs(delta, circuit.pairs(g), c, -s);
  }
  return result;
}

std::vector<Eigen::VectorXd> inner_errors(const SubspaceCircuit& circuit, const Eigen::Ref<const Eigen::VectorXd>& thetas,
                                          const Eigen::Ref<const Eigen::VectorXd>& input,
                                          const Eigen::Ref<const Eigen::VectorXd>& target) {
  check_shapes(circuit, thetas.size(), input.size(), target.size());
  Eigen::VectorXd out = input;
  apply_gates(circuit, thetas, out);
  std::vector<Eigen::VectorXd> deltas(circuit.size() + 1);
  deltas.back() = 2.0 * (out - target);
  for (std::size_t g = circuit.size(); g-- > 0;) {
    const double t = thetas(static_cast<Eigen::Index>(g));
    deltas[g] = deltas[g + 1];
    rotate_pairs(deltas[g], circuit.pairs(g), std::cos(t), -std::sin(t));
  }
  return deltas;
}

GradientResult backprop_gradient(const Circuit& circuit, int k, const Eigen::Ref<const Eigen::VectorXd>& input,
                                 const Eigen::Ref<const Eigen::VectorXd>& target) {
  const SubspaceCircuit bound(circuit, k);
  return backprop_gradient(bound, circuit.thetas(), input, target);
}

Eigen::VectorXd finite_difference_gradient(const Circuit& circuit, int k, const Eigen::Ref<const Eigen::VectorXd>& input,
                                           const Eigen::Ref<const Eigen::VectorXd>& target, double step) {
  if (!(step > 0.0)) throw DomainError("finite difference step must be positive");
  const SubspaceCircuit bound(circuit, k);
  Eigen::VectorXd thetas = circuit.thetas();
  check_shapes(bound, thetas.size(), input.size(), target.size());
  Eigen::VectorXd grad(thetas.size());
  for (Eigen::Index g = 0; g < thetas.size(); ++g) {
    const double t0 = thetas(g);
    thetas(g) = t0 + step;
    const double up = quadratic_cost(apply_circuit(bound, thetas, input), target);
    thetas(g) = t0 - step;
    const double down = quadratic_cost(apply_circuit(bound, thetas, input), target);
    thetas(g) = t0;
    grad(g) = (up - down) / (2.0 * step);
  }
  return grad;
}

std::string_view to_string(OptimizerMethod method) {
  switch (method) {
    case OptimizerMethod::kGradientDescent:
      return "gd";
    case OptimizerMethod::kMomentum:
      return "momentum";
    case OptimizerMethod::kAdam:
      return "adam";
  }
  return "gd";
}

OptimizerMethod parse_optimizer(std::string_view name) {
  if (name == "gd" || name == "sgd") return OptimizerMethod::kGradientDescent;
  if (name == "momentum") return OptimizerMethod::kMomentum;
  if (name == "adam") return OptimizerMethod::kAdam;
  throw DomainError("unknown optimizer '" + std::string(name) + "' (expected gd, momentum or adam)");
}

namespace {

TrainingResult descend(const SubspaceCircuit& circuit, Eigen::VectorXd thetas, const Eigen::VectorXd& input,
                       const Eigen::VectorXd& target, const OptimizerConfig& cfg) {
  TrainingResult out;
  Eigen::VectorXd velocity = Eigen::VectorXd::Zero(thetas.size());
  Eigen::VectorXd second = Eigen::VectorXd::Zero(thetas.size());
  double beta1_pow = 1.0;
  double beta2_pow = 1.0;

  std::size_t it = 0;
  for (;; ++it) {
    const GradientResult gr = backprop_gradient(circuit, thetas, input, target);
    out.history.push_back(gr.cost);
    if (gr.cost < cfg.tolerance || it >= cfg.max_iterations) break;
    switch (cfg.method) {
      case OptimizerMethod::kGradientDescent:
        thetas -= cfg.learning_rate * gr.grad;
        break;
      case OptimizerMethod::kMomentum:
        velocity = cfg.momentum * velocity - cfg.learning_rate * gr.grad;
        thetas += velocity;
        break;
      case OptimizerMethod::kAdam: {
        beta1_pow *= cfg.beta1;
        beta2_pow *= cfg.beta2;
        velocity = cfg.beta1 * velocity + (1.0 - cfg.beta1) * gr.grad;
        second = cfg.beta2 * second + (1.0 - cfg.beta2) * gr.grad.cwiseAbs2();
        const Eigen::VectorXd m_hat = velocity / (1.0 - beta1_pow);
        const Eigen::VectorXd v_hat = second / (1.0 - beta2_pow);
        thetas.array() -= cfg.learning_rate * m_hat.array() / (v_hat.array().sqrt() + cfg.epsilon);
        break;
      }
    }
  }
  out.final_cost = out.history.back();
  out.iterations = it;
  out.thetas = std::move(thetas);
  return out;
}

}  // namespace

TrainingResult train_loader(const Circuit& circuit, int k, std::size_t initial_index,
                            const Eigen::Ref<const Eigen::VectorXd>& target, const OptimizerConfig& config) {
  const SubspaceCircuit bound(circuit, k);
  if (static_cast<std::size_t>(target.size()) != bound.dim()) throw DomainError("target length differs from C(n,k)");
  const Eigen::VectorXd y = SubspaceState::from_vector(bound.indexer(), target).amplitudes();
  const Eigen::VectorXd input = SubspaceState::basis(bound.indexer(), initial_index).amplitudes();
  if (!(config.learning_rate > 0.0)) throw DomainError("learning rate must be positive");

  if (!config.random_init) return descend(bound, circuit.thetas(), input, y, config);

  std::mt19937_64 rng(config.seed);
  std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);
  TrainingResult best;
  const std::size_t runs = std::max<std::size_t>(1, config.restarts);
  for (std::size_t r = 0; r < runs; ++r) {
    Eigen::VectorXd start(static_cast<Eigen::Index>(bound.size()));
    for (Eigen::Index g = 0; g < start.size(); ++g) start(g) = angle(rng);
    TrainingResult run = descend(bound, std::move(start), input, y, config);
    if (r == 0 || run.final_cost < best.final_cost) best = std::move(run);
    if (best.final_cost < config.tolerance) break;
  }
  return best;
}

}  // namespace hwsim
