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

#include <random>
#include <span>
#include <vector>

#include "hwsim/circuit.hpp"

namespace hwsim {

std::vector<Edge> line_graph(int n);
std::vector<Edge> full_graph(int n);
/// A 5-qubit square-with-pendant patch: a 4-cycle 0-1-2-3 plus qubit 4 hanging off 0.
std::vector<Edge> square_pendant_graph();

bool is_connected(int n, std::span<const Edge> edges);

/// One block of the periodic ansatz: nearest-neighbour gates on even then odd
/// bonds, followed by a single next-nearest-neighbour gate (c, c + 2) with
/// c = n/2 - 1 that breaks the fermionic parity structure of the brick wall.
std::vector<Edge> periodic_block(int n);

/// `layers` repetitions of periodic_block, all angles zero.
Circuit periodic_ansatz(int n, int layers, GateKind kind);

/// D gates drawn uniformly from `edges` with uniform angles in [0, 2pi).
Circuit random_circuit(int n, std::span<const Edge> edges, GateKind kind, std::size_t gates, std::mt19937_64& rng);

}  // namespace hwsim
