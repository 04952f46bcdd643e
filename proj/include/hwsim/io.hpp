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
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "hwsim/circuit.hpp"
#include "hwsim/subspace.hpp"

namespace hwsim {

inline constexpr std::string_view kSchema = "hwsim/1";

/// Circuit file:
///   {"schema": "hwsim/1", "n": 5,
///    "gates": [{"kind": "rbs", "i": 0, "j": 1, "theta": 0.25}, ...],
///    "connectivity": [[0, 1], ...]}
/// "schema" and "connectivity" are optional on input; unknown keys are ignored.
Circuit parse_circuit_json(std::string_view text);
Circuit read_circuit_file(const std::string& path);
std::string circuit_to_json(const Circuit& circuit, int indent = 2);

struct Graph {
  int n = 0;
  std::vector<Edge> edges;
};

/// Either {"n": 5, "edges": [[0, 1], ...]} or a bare edge array, in which case
/// n is one more than the largest qubit index.
Graph parse_graph_json(std::string_view text);
Graph read_graph_file(const std::string& path);

/// One vector per non-empty row, comma separated. Lines starting with '#' are
/// comments. Every row must have the same number of columns.
std::vector<Eigen::VectorXd> parse_vectors_csv(std::string_view text);
std::vector<Eigen::VectorXd> read_vectors_file(const std::string& path);

/// "bitstring,amplitude" rows in basis order, preceded by a schema comment and
/// followed by a "# norm=" line.
void write_state_csv(std::ostream& out, const SubspaceState& state);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, std::string_view text);

/// Shortest text that reads back to the same double.
std::string format_double(double value);

}  // namespace hwsim
