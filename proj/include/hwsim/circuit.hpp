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
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace hwsim {

enum class GateKind { kRbs, kFbs };

std::string_view to_string(GateKind kind);
GateKind parse_gate_kind(std::string_view name);

/// An undirected qubit coupling, always stored with first < second.
using Edge = std::pair<int, int>;

/// A two-qubit Hamming-weight preserving rotation on qubits i < j.
struct Gate {
  GateKind kind = GateKind::kRbs;
  int i = 0;
  int j = 1;
  double theta = 0.0;

  Edge edge() const { return {i, j}; }
  friend bool operator==(const Gate&, const Gate&) = default;
};

/// An ordered list of RBS/FBS gates on n qubits, one variational angle per gate.
///
/// When a connectivity graph is attached every gate must sit on one of its edges.
class Circuit {
 public:
  explicit Circuit(int n, std::vector<Gate> gates = {},
                   std::optional<std::vector<Edge>> connectivity = std::nullopt);

  int n() const { return n_; }
  std::size_t size() const { return gates_.size(); }
  bool empty() const { return gates_.empty(); }
  const std::vector<Gate>& gates() const { return gates_; }
  const Gate& gate(std::size_t index) const { return gates_.at(index); }
  const std::optional<std::vector<Edge>>& connectivity() const { return connectivity_; }

  Eigen::VectorXd thetas() const;
  Circuit with_thetas(const Eigen::Ref<const Eigen::VectorXd>& thetas) const;
  Circuit appended(const Gate& gate) const;
  Circuit without(std::size_t index) const;

  bool fbs_only() const;
  bool has_non_adjacent_rbs() const;

  friend bool operator==(const Circuit&, const Circuit&) = default;

 private:
  int n_;
  std::vector<Gate> gates_;
  std::optional<std::vector<Edge>> connectivity_;
};

/// Throws DomainError unless 0 <= i < j < n for every edge.
void validate_edges(int n, std::span<const Edge> edges);

}  // namespace hwsim
