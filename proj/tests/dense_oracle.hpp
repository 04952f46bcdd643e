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

// Test-only reference: full 2^n real matrices built gate by gate, then cut
// down to the Hamming-weight-k block. Shares no code with the library's
// ranking or pair tables.

#pragma once

#include <Eigen/Dense>
#include <bit>
#include <cmath>
#include <cstdint>
#include <vector>

#include "hwsim/circuit.hpp"

namespace hwsim::oracle {

inline int bit_of(std::uint64_t x, int n, int qubit) { return static_cast<int>((x >> (n - 1 - qubit)) & 1U); }

// One gate on the full register. On the (i, j) qubit pair the block acts on
// |10>, |01> as [[c, sg s], [-sg s, c]], identity on |00> and |11>; sg is
// (-1)^(number of set qubits strictly between i and j) for FBS and 1 for RBS.
inline Eigen::MatrixXd dense_gate(int n, const Gate& g) {
  const std::uint64_t size = std::uint64_t{1} << n;
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(size), static_cast<Eigen::Index>(size));
  const double c = std::cos(g.theta);
  const double s = std::sin(g.theta);
  for (std::uint64_t x = 0; x < size; ++x) {
    const int bi = bit_of(x, n, g.i);
    const int bj = bit_of(x, n, g.j);
    const auto xi = static_cast<Eigen::Index>(x);
    if (bi == bj) {
      m(xi, xi) = 1.0;
      continue;
    }
    int between = 0;
    for (int q = g.i + 1; q < g.j; ++q) between += bit_of(x, n, q);
    const double sg = (g.kind == GateKind::kFbs && (between % 2) == 1) ? -1.0 : 1.0;
    const std::uint64_t y = x ^ (std::uint64_t{1} << (n - 1 - g.i)) ^ (std::uint64_t{1} << (n - 1 - g.j));
    const auto yi = static_cast<Eigen::Index>(y);
    m(xi, xi) = c;
    // x has bit i set: it is the |10> member, y the |01> member.
    m(xi, yi) = bi == 1 ? sg * s : -sg * s;
  }
  return m;
}

inline Eigen::MatrixXd dense_unitary(const Circuit& circuit) {
  const auto size = static_cast<Eigen::Index>(std::uint64_t{1} << circuit.n());
  Eigen::MatrixXd u = Eigen::MatrixXd::Identity(size, size);
  for (const Gate& g : circuit.gates()) u = dense_gate(circuit.n(), g) * u;
  return u;
}

// Weight-k bitstrings in decreasing integer order (qubit 0 is the top bit).
inline std::vector<std::uint64_t> weight_k_states(int n, int k) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t x = (std::uint64_t{1} << n); x-- > 0;) {
    if (std::popcount(x) == k) out.push_back(x);
  }
  return out;
}

inline Eigen::MatrixXd restrict_to_weight(const Eigen::MatrixXd& full, int n, int k) {
  const auto states = weight_k_states(n, k);
  const auto d = static_cast<Eigen::Index>(states.size());
  Eigen::MatrixXd out(d, d);
  for (Eigen::Index r = 0; r < d; ++r) {
    for (Eigen::Index c = 0; c < d; ++c) {
      out(r, c) = full(static_cast<Eigen::Index>(states[static_cast<std::size_t>(r)]),
                       static_cast<Eigen::Index>(states[static_cast<std::size_t>(c)]));
    }
  }
  return out;
}

// Largest |entry| of the full unitary that couples different Hamming weights.
inline double weight_leakage(const Eigen::MatrixXd& full, int n) {
  double worst = 0.0;
  const auto size = std::uint64_t{1} << n;
  for (std::uint64_t r = 0; r < size; ++r) {
    for (std::uint64_t c = 0; c < size; ++c) {
      if (std::popcount(r) != std::popcount(c)) {
        worst = std::max(worst, std::abs(full(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c))));
      }
    }
  }
  return worst;
}

// Cost of the dense circuit as a function of the angle vector, for finite differences.
inline double dense_cost(const Circuit& circuit, int k, const Eigen::VectorXd& input, const Eigen::VectorXd& target) {
  const Eigen::MatrixXd w = restrict_to_weight(dense_unitary(circuit), circuit.n(), k);
  return (w * input - target).squaredNorm();
}

}  // namespace hwsim::oracle
