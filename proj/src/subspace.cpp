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

#include "hwsim/subspace.hpp"

#include <bit>
#include <cstdlib>
#include <map>
#include <string>
#include <tuple>

#include "hwsim/errors.hpp"

namespace hwsim {

std::vector<RotationPair> rotation_pairs(const BasisIndexer& indexer, int i, int j, GateKind kind) {
  const int n = indexer.n();
  if (i < 0 || j >= n || i >= j) {
    throw DomainError("gate qubits must satisfy 0 <= i < j < n");
  }
  const int k = indexer.k();
  std::vector<RotationPair> pairs;
  if (k == 0 || k == n) return pairs;
  pairs.reserve(static_cast<std::size_t>(binomial(n - 2, k - 1)));

  const Bits mi = qubit_mask(n, i);
  const Bits mj = qubit_mask(n, j);
  // Qubits strictly between i and j sit on the bits strictly between mj and mi.
  const Bits between = (mi - 1) & ~((mj << 1) - 1);
  for (std::size_t idx = 0; idx < indexer.dim(); ++idx) {
    const Bits s = indexer.unrank(idx);
    if ((s & mi) == 0 || (s & mj) != 0) continue;
    const Bits partner = s ^ mi ^ mj;
    double sign = 1.0;
    if (kind == GateKind::kFbs && (std::popcount(s & between) & 1) != 0) sign = -1.0;
    pairs.push_back({static_cast<std::uint32_t>(idx), static_cast<std::uint32_t>(indexer.rank(partner)), sign});
  }
  return pairs;
}

SubspaceState::SubspaceState(BasisIndexer indexer, Eigen::VectorXd amplitudes)
    : indexer_(indexer), amplitudes_(std::move(amplitudes)) {
  if (static_cast<std::size_t>(amplitudes_.size()) != indexer_.dim()) {
    throw DomainError("amplitude vector length differs from C(n,k)");
  }
}

SubspaceState SubspaceState::basis(const BasisIndexer& indexer, std::size_t index) {
  if (index >= indexer.dim()) throw DomainError("basis index out of range");
  Eigen::VectorXd v = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(indexer.dim()));
  v(static_cast<Eigen::Index>(index)) = 1.0;
  return SubspaceState(indexer, std::move(v));
}

SubspaceState SubspaceState::from_vector(const BasisIndexer& indexer, const Eigen::Ref<const Eigen::VectorXd>& raw) {
  if (!raw.allFinite()) throw DomainError("state vector has non-finite entries");
  const double norm = raw.norm();
  if (norm == 0.0) throw DomainError("state vector is zero");
  return SubspaceState(indexer, raw / norm);
}

SubspaceCircuit::SubspaceCircuit(Circuit circuit, int k) : circuit_(std::move(circuit)), indexer_(circuit_.n(), k) {
  std::map<std::tuple<int, int, GateKind>, std::shared_ptr<const std::vector<RotationPair>>> cache;
  pairs_.reserve(circuit_.size());
  for (const Gate& g : circuit_.gates()) {
    // Adjacent FBS and RBS coincide; share the list.
    const GateKind key_kind = (g.j - g.i == 1) ? GateKind::kRbs : g.kind;
    auto& slot = cache[{g.i, g.j, key_kind}];
    if (!slot) slot = std::make_shared<const std::vector<RotationPair>>(rotation_pairs(indexer_, g.i, g.j, key_kind));
    pairs_.push_back(slot);
  }
  const Eigen::VectorXd t = circuit_.thetas();
  cos_ = t.array().cos().matrix();
  sin_ = t.array().sin().matrix();
}

namespace {

SubspaceState apply_single(const SubspaceState& state, int i, int j, double theta, GateKind kind) {
  const auto pairs = rotation_pairs(state.indexer(), i, j, kind);
  SubspaceState out = state;
  rotate_pairs(out.amplitudes(), pairs, std::cos(theta), std::sin(theta));
  return out;
}

}  // namespace

SubspaceState apply_rbs(const SubspaceState& state, int i, int j, double theta) {
  return apply_single(state, i, j, theta, GateKind::kRbs);
}

SubspaceState apply_fbs(const SubspaceState& state, int i, int j, double theta) {
  return apply_single(state, i, j, theta, GateKind::kFbs);
}

SubspaceState apply_gate(const SubspaceState& state, const Gate& gate) {
  return apply_single(state, gate.i, gate.j, gate.theta, gate.kind);
}

SubspaceState apply_circuit(const Circuit& circuit, int k, const SubspaceState& state) {
  if (circuit.n() != state.indexer().n() || k != state.indexer().k()) {
    throw DomainError("state (n,k) does not match circuit n and requested k");
  }
  return apply_circuit(SubspaceCircuit(circuit, k), state);
}

SubspaceState apply_circuit(const SubspaceCircuit& circuit, const SubspaceState& state) {
  if (!(circuit.indexer() == state.indexer())) {
    throw DomainError("state (n,k) does not match the circuit subspace");
  }
  Eigen::VectorXd out = state.amplitudes();
  apply_stored(circuit, out);
  return SubspaceState(state.indexer(), std::move(out));
}

Eigen::VectorXd apply_circuit(const SubspaceCircuit& circuit, const Eigen::Ref<const Eigen::VectorXd>& thetas,
                              const Eigen::Ref<const Eigen::VectorXd>& input) {
  if (static_cast<std::size_t>(input.size()) != circuit.dim()) throw DomainError("input length differs from C(n,k)");
  if (static_cast<std::size_t>(thetas.size()) != circuit.size()) throw DomainError("theta length differs from gate count");
  Eigen::VectorXd out = input;
  apply_gates(circuit, thetas, out);
  return out;
}

std::size_t dim_cap_from_env() {
  if (const char* env = std::getenv("HWSIM_DKCAP")) {
    try {
      const long long v = std::stoll(env);
      if (v > 0) return static_cast<std::size_t>(v);
    } catch (const std::exception&) {
    }
  }
  return kDefaultDimCap;
}

double SubspaceUnitary::orthogonality_residual() const {
  const auto d = matrix.rows();
  return (matrix * matrix.transpose() - Eigen::MatrixXd::Identity(d, d)).cwiseAbs().maxCoeff();
}

SubspaceUnitary circuit_unitary(const Circuit& circuit, int k, std::size_t dim_cap) {
  const BasisIndexer indexer(circuit.n(), k);
  if (indexer.dim() > dim_cap) {
    throw ResourceError("C(n,k) = " + std::to_string(indexer.dim()) + " exceeds the dimension cap " +
                        std::to_string(dim_cap));
  }
  return circuit_unitary(SubspaceCircuit(circuit, k), dim_cap);
}

SubspaceUnitary circuit_unitary(const SubspaceCircuit& circuit, std::size_t dim_cap) {
  const auto d = circuit.dim();
  if (d > dim_cap) {
    throw ResourceError("C(n,k) = " + std::to_string(d) + " exceeds the dimension cap " + std::to_string(dim_cap));
  }
  Eigen::MatrixXd w = Eigen::MatrixXd::Identity(static_cast<Eigen::Index>(d), static_cast<Eigen::Index>(d));
  apply_gates(circuit, circuit.circuit().thetas(), w);
  return {circuit.indexer(), std::move(w)};
}

Eigen::MatrixXd compound_matrix(const Eigen::Ref<const Eigen::MatrixXd>& w1, int k) {
  if (w1.rows() != w1.cols()) throw DomainError("compound_matrix: matrix must be square");
  const int n = static_cast<int>(w1.rows());
  const auto subsets = enumerate_basis(n, k);
  const auto d = static_cast<Eigen::Index>(subsets.size());
  std::vector<std::vector<int>> members(subsets.size());
  for (std::size_t s = 0; s < subsets.size(); ++s) {
    for (int q = 0; q < n; ++q) {
      if (qubit_set(subsets[s], n, q)) members[s].push_back(q);
    }
  }
  Eigen::MatrixXd out(d, d);
  Eigen::MatrixXd minor(k, k);
  for (Eigen::Index r = 0; r < d; ++r) {
    for (Eigen::Index c = 0; c < d; ++c) {
      const auto& rows = members[static_cast<std::size_t>(r)];
      const auto& cols = members[static_cast<std::size_t>(c)];
      for (int a = 0; a < k; ++a) {
        for (int b = 0; b < k; ++b) minor(a, b) = w1(rows[static_cast<std::size_t>(a)], cols[static_cast<std::size_t>(b)]);
      }
      out(r, c) = k == 0 ? 1.0 : minor.determinant();
    }
  }
  return out;
}

}  // namespace hwsim
