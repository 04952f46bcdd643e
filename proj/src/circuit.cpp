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

#include "hwsim/circuit.hpp"

#include <algorithm>

#include "hwsim/combinatorics.hpp"
#include "hwsim/errors.hpp"

namespace hwsim {

std::string_view to_string(GateKind kind) { return kind == GateKind::kRbs ? "rbs" : "fbs"; }

GateKind parse_gate_kind(std::string_view name) {
  if (name == "rbs" || name == "RBS") return GateKind::kRbs;
  if (name == "fbs" || name == "FBS") return GateKind::kFbs;
  throw DomainError("unknown gate kind '" + std::string(name) + "' (expected rbs or fbs)");
}

void validate_edges(int n, std::span<const Edge> edges) {
  for (const auto& [i, j] : edges) {
    if (i < 0 || j >= n || i >= j) {
      throw DomainError("edge (" + std::to_string(i) + "," + std::to_string(j) +
                        ") violates 0 <= i < j < n with n=" + std::to_string(n));
    }
  }
}

Circuit::Circuit(int n, std::vector<Gate> gates, std::optional<std::vector<Edge>> connectivity)
    : n_(n), gates_(std::move(gates)), connectivity_(std::move(connectivity)) {
  if (n < 1 || n > kMaxQubits) throw DomainError("circuit: n must be in [1, 62]");
  if (connectivity_) validate_edges(n_, *connectivity_);
  for (const Gate& g : gates_) {
    const Edge e = g.edge();
    validate_edges(n_, std::span<const Edge>(&e, 1));
    if (connectivity_ && std::find(connectivity_->begin(), connectivity_->end(), e) == connectivity_->end()) {
      throw DomainError("gate on (" + std::to_string(g.i) + "," + std::to_string(g.j) +
                        ") is not an edge of the connectivity graph");
    }
  }
}

Eigen::VectorXd Circuit::thetas() const {
  Eigen::VectorXd out(static_cast<Eigen::Index>(gates_.size()));
  for (std::size_t g = 0; g < gates_.size(); ++g) out(static_cast<Eigen::Index>(g)) = gates_[g].theta;
  return out;
}

Circuit Circuit::with_thetas(const Eigen::Ref<const Eigen::VectorXd>& thetas) const {
  if (static_cast<std::size_t>(thetas.size()) != gates_.size()) {
    throw DomainError("theta vector length differs from gate count");
  }
  Circuit out = *this;
  for (std::size_t g = 0; g < gates_.size(); ++g) out.gates_[g].theta = thetas(static_cast<Eigen::Index>(g));
  return out;
}

Circuit Circuit::appended(const Gate& gate) const {
  std::vector<Gate> gates = gates_;
  gates.push_back(gate);
  return Circuit(n_, std::move(gates), connectivity_);
}

Circuit Circuit::without(std::size_t index) const {
  if (index >= gates_.size()) throw DomainError("gate index out of range");
  Circuit out = *this;
  out.gates_.erase(out.gates_.begin() + static_cast<std::ptrdiff_t>(index));
  return out;
}

bool Circuit::fbs_only() const {
  return std::all_of(gates_.begin(), gates_.end(), [](const Gate& g) { return g.kind == GateKind::kFbs; });
}

bool Circuit::has_non_adjacent_rbs() const {
  return std::any_of(gates_.begin(), gates_.end(),
                     [](const Gate& g) { return g.kind == GateKind::kRbs && g.j - g.i > 1; });
}

}  // namespace hwsim
