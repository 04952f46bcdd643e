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
#include <span>
#include <vector>

#include "hwsim/circuit.hpp"
#include "hwsim/subspace.hpp"

namespace hwsim {

/// Subspace-projected generators, one antisymmetric d_k x d_k matrix per edge.
struct GeneratorSet {
  int n = 0;
  int k = 0;
  GateKind kind = GateKind::kRbs;
  std::vector<Edge> edges;
  std::vector<Eigen::MatrixXd> generators;
};

/// Generator of edge (i, j) is d/dtheta of its subspace gate block at theta = 0.
GeneratorSet generators_from_graph(int n, int k, std::span<const Edge> edges, GateKind kind);

/// Orthonormal basis (Frobenius inner product) of a space of antisymmetric
/// matrices, each stored as its strictly-upper triangle scaled by sqrt(2).
struct LieBasis {
  int dim_k = 0;  // side length d_k of the matrices
  std::vector<Eigen::VectorXd> ortho_basis;

  std::size_t dim() const { return ortho_basis.size(); }
  Eigen::MatrixXd element(std::size_t index) const;
};

inline constexpr std::size_t kDefaultDlaDimCap = 256;

struct DlaOptions {
  double tolerance = 1e-10;
  std::size_t dim_cap = kDefaultDlaDimCap;
};

/// Lie closure of the generators by breadth-first commutator sweeps with
/// incremental Gram-Schmidt rank maintenance.
LieBasis lie_closure(const GeneratorSet& generators, const DlaOptions& options = {});

std::size_t dla_dimension(const GeneratorSet& generators, const DlaOptions& options = {});

/// 1/2 d (d - 1), the dimension of so(d).
std::size_t orthogonal_algebra_dim(std::size_t d);

struct QfimMatrix {
  Eigen::MatrixXd matrix;
  Eigen::VectorXd theta;
  std::size_t initial_index = 0;
};

/// d_k x D matrix of d psi / d theta_g with psi = W^k(theta) e_s.
Eigen::MatrixXd state_jacobian(const SubspaceCircuit& circuit, const Eigen::Ref<const Eigen::VectorXd>& theta,
                               std::size_t initial_index);

QfimMatrix qfim(const SubspaceCircuit& circuit, std::size_t initial_index, const Eigen::Ref<const Eigen::VectorXd>& theta);
QfimMatrix qfim(const Circuit& circuit, int k, std::size_t initial_index, const Eigen::Ref<const Eigen::VectorXd>& theta);

inline constexpr double kDefaultRankTolerance = 1e-8;

/// Number of eigenvalues above tolerance * largest eigenvalue.
std::size_t qfim_rank(const QfimMatrix& qfim, double tolerance = kDefaultRankTolerance);

/// Eigenvalues in ascending order.
Eigen::VectorXd qfim_spectrum(const QfimMatrix& qfim);

/// Max of qfim_rank over `samples` uniformly random theta points.
std::size_t max_qfim_rank(const SubspaceCircuit& circuit, std::size_t initial_index, std::size_t samples,
                          std::mt19937_64& rng, double tolerance = kDefaultRankTolerance);

}  // namespace hwsim
