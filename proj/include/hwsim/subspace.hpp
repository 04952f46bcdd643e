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

/**
 * @file
 * Exact simulation of RBS/FBS circuits restricted to the weight-k subspace.
 *
 * A gate on qubits (i, j) rotates C(n-2, k-1) disjoint pairs of basis states.
 * The first member of each pair has qubit i set and qubit j clear; the second
 * is obtained by swapping those two bits. For amplitudes (a, b) of such a pair
 *
 *     a' =  cos(t) a + s sin(t) b
 *     b' = -s sin(t) a + cos(t) b
 *
 * where s = 1 for RBS and s = (-1)^f for FBS, f being the number of set qubits
 * strictly between i and j.
 */

#pragma once

#include <Eigen/Dense>
#include <cmath>
#include <cstdint>
#include <memory>
#include <span>
#include <vector>

#include "hwsim/circuit.hpp"
#include "hwsim/combinatorics.hpp"

namespace hwsim {

struct RotationPair {
  std::uint32_t first;   // qubit i set, qubit j clear
  std::uint32_t second;  // qubit i clear, qubit j set
  double sign;           // +1 for RBS, (-1)^f for FBS
};

/// The pairs rotated by a gate of the given kind on (i, j) inside B_k^n.
std::vector<RotationPair> rotation_pairs(const BasisIndexer& indexer, int i, int j, GateKind kind);

/// Rotate every pair of rows of `amps` by angle (cos, sin) = (c, s).
///
/// Works on a single amplitude vector or on every column of a matrix at once.
template <typename Derived>
void rotate_pairs(Eigen::MatrixBase<Derived>& amps, std::span<const RotationPair> pairs,
                  typename Derived::Scalar c, typename Derived::Scalar s) {
  using Scalar = typename Derived::Scalar;
  if constexpr (Derived::ColsAtCompileTime == 1) {
    for (const RotationPair& p : pairs) {
      const Scalar ss = static_cast<Scalar>(p.sign) * s;
      const Scalar a = amps.coeff(p.first);
      const Scalar b = amps.coeff(p.second);
      amps.coeffRef(p.first) = c * a + ss * b;
      amps.coeffRef(p.second) = -ss * a + c * b;
    }
  } else {
    for (const RotationPair& p : pairs) {
      const Scalar ss = static_cast<Scalar>(p.sign) * s;
      const auto a = amps.row(p.first).eval();
      const auto b = amps.row(p.second).eval();
      amps.row(p.first) = c * a + ss * b;
      amps.row(p.second) = -ss * a + c * b;
    }
  }
}

/// Apply the theta-derivative of the pair rotation: untouched amplitudes go to zero.
template <typename Derived>
void rotate_pairs_derivative(Eigen::MatrixBase<Derived>& amps, std::span<const RotationPair> pairs,
                             typename Derived::Scalar c, typename Derived::Scalar s) {
  using Scalar = typename Derived::Scalar;
  std::vector<Scalar> buffer;
  buffer.reserve(2 * pairs.size());
  for (const RotationPair& p : pairs) {
    const Scalar ss = static_cast<Scalar>(p.sign);
    const Scalar a = amps.coeff(p.first);
    const Scalar b = amps.coeff(p.second);
    buffer.push_back(-s * a + ss * c * b);
    buffer.push_back(-ss * c * a - s * b);
  }
  amps.setZero();
  for (std::size_t q = 0; q < pairs.size(); ++q) {
    amps.coeffRef(pairs[q].first) = buffer[2 * q];
    amps.coeffRef(pairs[q].second) = buffer[2 * q + 1];
  }
}

/// A unit-norm real amplitude vector over B_k^n.
class SubspaceState {
 public:
  SubspaceState(BasisIndexer indexer, Eigen::VectorXd amplitudes);

  static SubspaceState basis(const BasisIndexer& indexer, std::size_t index);
  /// Normalizes `raw`; throws on non-finite entries or a zero vector.
  static SubspaceState from_vector(const BasisIndexer& indexer, const Eigen::Ref<const Eigen::VectorXd>& raw);

  const BasisIndexer& indexer() const { return indexer_; }
  const Eigen::VectorXd& amplitudes() const { return amplitudes_; }
  Eigen::VectorXd& amplitudes() { return amplitudes_; }
  double norm() const { return amplitudes_.norm(); }

 private:
  BasisIndexer indexer_;
  Eigen::VectorXd amplitudes_;
};

/// A circuit bound to one weight-k subspace.
///
/// Pair lists are discovered once per distinct (edge, kind) and shared by every
/// gate on that edge, so applying gate g costs O(C(n-2, k-1)).
class SubspaceCircuit {
 public:
  SubspaceCircuit(Circuit circuit, int k);

  const Circuit& circuit() const { return circuit_; }
  const BasisIndexer& indexer() const { return indexer_; }
  std::size_t size() const { return circuit_.size(); }
  std::size_t dim() const { return indexer_.dim(); }
  std::span<const RotationPair> pairs(std::size_t gate) const { return *pairs_[gate]; }
  /// cos and sin of the stored angle of each gate.
  const Eigen::VectorXd& stored_cos() const { return cos_; }
  const Eigen::VectorXd& stored_sin() const { return sin_; }

 private:
  Circuit circuit_;
  BasisIndexer indexer_;
  std::vector<std::shared_ptr<const std::vector<RotationPair>>> pairs_;
  Eigen::VectorXd cos_;
  Eigen::VectorXd sin_;
};

/// Apply gates [begin, end) of `circuit` with angles `thetas` to the rows of `amps`.
template <typename Derived>
void apply_gates(const SubspaceCircuit& circuit, const Eigen::Ref<const Eigen::VectorXd>& thetas,
                 Eigen::MatrixBase<Derived>& amps, std::size_t begin, std::size_t end) {
  using Scalar = typename Derived::Scalar;
  for (std::size_t g = begin; g < end; ++g) {
    const double t = thetas(static_cast<Eigen::Index>(g));
    rotate_pairs(amps, circuit.pairs(g), static_cast<Scalar>(std::cos(t)), static_cast<Scalar>(std::sin(t)));
  }
}

template <typename Derived>
void apply_gates(const SubspaceCircuit& circuit, const Eigen::Ref<const Eigen::VectorXd>& thetas,
                 Eigen::MatrixBase<Derived>& amps) {
  apply_gates(circuit, thetas, amps, 0, circuit.size());
}

/// Apply every gate at its stored angle, reusing the cached cos and sin.
template <typename Derived>
void apply_stored(const SubspaceCircuit& circuit, Eigen::MatrixBase<Derived>& amps) {
  using Scalar = typename Derived::Scalar;
  for (std::size_t g = 0; g < circuit.size(); ++g) {
    const auto e = static_cast<Eigen::Index>(g);
    rotate_pairs(amps, circuit.pairs(g), static_cast<Scalar>(circuit.stored_cos()(e)),
                 static_cast<Scalar>(circuit.stored_sin()(e)));
  }
}

SubspaceState apply_rbs(const SubspaceState& state, int i, int j, double theta);
SubspaceState apply_fbs(const SubspaceState& state, int i, int j, double theta);
SubspaceState apply_gate(const SubspaceState& state, const Gate& gate);

/// Runs the circuit (at its stored angles) on `state`; n and k must match.
SubspaceState apply_circuit(const Circuit& circuit, int k, const SubspaceState& state);
SubspaceState apply_circuit(const SubspaceCircuit& circuit, const SubspaceState& state);
Eigen::VectorXd apply_circuit(const SubspaceCircuit& circuit, const Eigen::Ref<const Eigen::VectorXd>& thetas,
                              const Eigen::Ref<const Eigen::VectorXd>& input);

/// Default cap on d_k for dense d_k x d_k matrices; HWSIM_DKCAP overrides it.
inline constexpr std::size_t kDefaultDimCap = 4096;
std::size_t dim_cap_from_env();

/// The d_k x d_k orthogonal block W^k of a circuit. Column c is the image of e_c.
struct SubspaceUnitary {
  BasisIndexer indexer;
  Eigen::MatrixXd matrix;

  /// max |W W^T - I|
  double orthogonality_residual() const;
};

SubspaceUnitary circuit_unitary(const Circuit& circuit, int k, std::size_t dim_cap = dim_cap_from_env());
SubspaceUnitary circuit_unitary(const SubspaceCircuit& circuit, std::size_t dim_cap = dim_cap_from_env());

/// k-th compound of an n x n matrix: entry (I, J) = det of the minor with rows
/// I and columns J, with subsets indexed like BasisIndexer (set bit q selects row q).
Eigen::MatrixXd compound_matrix(const Eigen::Ref<const Eigen::MatrixXd>& w1, int k);

}  // namespace hwsim
