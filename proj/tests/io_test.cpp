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

#include "hwsim/io.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <random>
#include <sstream>

#include "hwsim/ansatz.hpp"
#include "hwsim/errors.hpp"

using namespace hwsim;

namespace {

std::string parse_error_of(std::string_view text) {
  try {
    parse_circuit_json(text);
  } catch (const ParseError& e) {
    return e.what();
  }
  return {};
}

}  // namespace

TEST(circuit_json, round_trip) {
  std::mt19937_64 rng(4);
  for (const auto kind : {GateKind::kRbs, GateKind::kFbs}) {
    Circuit c = random_circuit(6, full_graph(6), kind, 12, rng);
    std::uniform_real_distribution<double> angle(-3.0, 3.0);
    Eigen::VectorXd t(12);
    for (auto& x : t) x = angle(rng);
    c = c.with_thetas(t);
    EXPECT_EQ(parse_circuit_json(circuit_to_json(c)), c);
    const Circuit wired(6, c.gates(), full_graph(6));
    EXPECT_EQ(parse_circuit_json(circuit_to_json(wired, -1)), wired);
  }
}

TEST(circuit_json, defaults_and_unknown_keys) {
  const Circuit c = parse_circuit_json(R"({"n": 3, "note": "x", "gates": [{"kind": "fbs", "i": 0, "j": 2, "color": 1}]})");
  ASSERT_EQ(c.size(), 1U);
  EXPECT_EQ(c.gate(0).kind, GateKind::kFbs);
  EXPECT_EQ(c.gate(0).theta, 0.0);
  EXPECT_FALSE(c.connectivity().has_value());
}

TEST(circuit_json, diagnostics_name_the_field) {
  EXPECT_NE(parse_error_of(R"({"n": 3, "gates": [{"kind": "rbs", "i": 0, "j": 1}, {"kind": "cz", "i": 0, "j": 1}]})")
                .find("gates[1].kind"),
            std::string::npos);
  EXPECT_NE(parse_error_of(R"({"gates": []})").find("n"), std::string::npos);
  EXPECT_NE(parse_error_of(R"({"n": 3, "gates": [{"kind": "rbs", "i": 0}]})").find("gates[0]"), std::string::npos);
  EXPECT_NE(parse_error_of(R"({"schema": "hwsim/9", "n": 3, "gates": []})").find("schema"), std::string::npos);
  EXPECT_FALSE(parse_error_of("{ not json").empty());
  EXPECT_FALSE(parse_error_of("[1, 2]").empty());
}

TEST(circuit_json, invalid_gate_placement) {
  EXPECT_ANY_THROW(parse_circuit_json(R"({"n": 3, "gates": [{"kind": "rbs", "i": 1, "j": 1}]})"));
  EXPECT_ANY_THROW(parse_circuit_json(R"({"n": 3, "gates": [{"kind": "rbs", "i": 0, "j": 3}]})"));
  // Gate off the declared connectivity.
  EXPECT_ANY_THROW(parse_circuit_json(R"({"n": 3, "connectivity": [[0, 1]], "gates": [{"kind": "rbs", "i": 1, "j": 2}]})"));
}

TEST(graph_json, object_and_bare_array) {
  const Graph a = parse_graph_json(R"({"n": 6, "edges": [[0, 1], [1, 2]]})");
  EXPECT_EQ(a.n, 6);
  EXPECT_EQ(a.edges.size(), 2U);
  const Graph b = parse_graph_json("[[0, 1], [1, 4]]");
  EXPECT_EQ(b.n, 5);
  EXPECT_THROW(parse_graph_json("[]"), ParseError);
  EXPECT_THROW(parse_graph_json(R"({"n": 2, "edges": [[0]]})"), ParseError);
  EXPECT_ANY_THROW(parse_graph_json(R"({"n": 2, "edges": [[0, 2]]})"));
}

TEST(vectors_csv, parses_rows_and_comments) {
  const auto v = parse_vectors_csv("# header\n1, 2,3\n\n-0.5,1e-3,4\n");
  ASSERT_EQ(v.size(), 2U);
  EXPECT_EQ(v[0], Eigen::Vector3d(1, 2, 3));
  EXPECT_DOUBLE_EQ(v[1](1), 1e-3);
}

TEST(vectors_csv, errors_carry_position) {
  try {
    parse_vectors_csv("1,2\n3,x\n");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_NE(std::string(e.what()).find("line 2"), std::string::npos);
    EXPECT_NE(std::string(e.what()).find("field 2"), std::string::npos);
  }
  EXPECT_THROW(parse_vectors_csv("1,2\n3,4,5\n"), ParseError);
}

TEST(state_csv, layout) {
  const BasisIndexer idx(3, 1);
  std::ostringstream os;
  write_state_csv(os, SubspaceState(idx, Eigen::Vector3d(0.6, 0.0, -0.8)));
  EXPECT_EQ(os.str(), "# schema=hwsim/1\nbitstring,amplitude\n100,0.6\n010,0\n001,-0.8\n# norm=1.000000000000\n");
}

TEST(format, shortest_round_trip) {
  for (double x : {0.1, 1.0 / 3.0, -2.5e-17, 12345.678}) EXPECT_EQ(std::stod(format_double(x)), x);
  EXPECT_EQ(format_double(0.5), "0.5");
}

TEST(files, missing_file_is_resource_error) {
  EXPECT_THROW(read_text_file("/nonexistent/hwsim/file.json"), ResourceError);
}
