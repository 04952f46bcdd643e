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

#include "hwsim/ansatz.hpp"

#include <numbers>
#include <numeric>

#include "hwsim/errors.hpp"

namespace hwsim {

std::vector<Edge> line_graph(int n) {
  std::vector<Edge> edges;
  for (int q = 0; q + 1 < n; ++q) edges.emplace_back(q, q + 1);
  return edges;
}

std::vector<Edge> full_graph(int n) {
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) edges.emplace_back(i, j);
  }
  return edges;
}

std::vector<Edge> square_pendant_graph() { return {{0, 1}, {1, 2}, {2, 3}, {0, 3}, {0, 4}}; }

bool is_connected(int n, std::span<const Edge> edges) {
  if (n <= 1) return true;
  std::vector<int> parent(static_cast<std::size_t>(n));
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[static_cast<std::size_t>(x)] != x) {
      parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
      x = parent[static_cast<std::size_t>(x)];
    }
    return x;
  };
  int components = n;
  for (const auto& [i, j] : edges) {
    const int a = find(i);
    const int b = find(j);
    if (a != b) {
      parent[static_cast<std::size_t>(a)] = b;
      --components;
    }
  }
  return components == 1;
}

std::vector<Edge> periodic_block(int n) {
  if (n < 2) throw DomainError("periodic ansatz needs at least 2 qubits");
  std::vector<Edge> block;
  for (int q = 0; q + 1 < n; q += 2) block.emplace_back(q, q + 1);
  for (int q = 1; q + 1 < n; q += 2) block.emplace_back(q, q + 1);
  if (n >= 3) {
    const int c = n / 2 - 1;
    block.emplace_back(c, c + 2);
  }
  return block;
}

Circuit periodic_ansatz(int n, int layers, GateKind kind) {
  if (layers < 0) throw DomainError("periodic ansatz: negative layer count");
  const auto block = periodic_block(n);
  std::vector<Gate> gates;
  gates.reserve(block.size() * static_cast<std::size_t>(layers));
  for (int l = 0; l < layers; ++l) {
    for (const auto& [i, j] : block) gates.push_back({kind, i, j, 0.0});
  }
  return Circuit(n, std::move(gates));
}

Circuit random_circuit(int n, std::span<const Edge> edges, GateKind kind, std::size_t gates, std::mt19937_64& rng) {
  if (edges.empty()) throw DomainError("random circuit: edge list is empty");
  std::uniform_int_distribution<std::size_t> pick(0, edges.size() - 1);
  std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);
  std::vector<Gate> out;
  out.reserve(gates);
  for (std::size_t g = 0; g < gates; ++g) {
    const Edge& e = edges[pick(rng)];
    out.push_back({kind, e.first, e.second, angle(rng)});
  }
  return Circuit(n, std::move(out));
}

}  // namespace hwsim
