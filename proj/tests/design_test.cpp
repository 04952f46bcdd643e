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

#include "hwsim/design.hpp"

#include <gtest/gtest.h>

#include <random>

#include "hwsim/ansatz.hpp"
#include "hwsim/gradients.hpp"

using namespace hwsim;

namespace {

std::size_t rank_of(const Circuit& c, int k, std::uint64_t seed = 1) {
  std::mt19937_64 rng(seed);
  return max_qfim_rank(SubspaceCircuit(c, k), 0, 3, rng);
}

}  // namespace

TEST(precheck, line_n3_unary_exists) {
  const auto r = existence_precheck(3, 1, line_graph(3), GateKind::kRbs);
  EXPECT_EQ(r.verdict, Verdict::kLoaderExists);
  EXPECT_EQ(r.dla_dim, 3U);
}

TEST(precheck, single_edge_is_insufficient) {
  for (int n = 3; n <= 6; ++n) {
    const auto r = existence_precheck(n, 1, std::vector<Edge>{{0, 1}}, GateKind::kRbs);
    EXPECT_EQ(r.verdict, Verdict::kInsufficientControl) << "n=" << n;
  }
  // For n = 2 the edge is the whole graph and so(2) is already maximal.
  const auto r = existence_precheck(2, 1, std::vector<Edge>{{0, 1}}, GateKind::kRbs);
  EXPECT_EQ(r.verdict, Verdict::kLoaderExists);
}

TEST(precheck, fbs_cannot_fully_control_weight_two) {
  const auto r = existence_precheck(5, 2, full_graph(5), GateKind::kFbs);
  EXPECT_NE(r.verdict, Verdict::kLoaderExists);
  ASSERT_TRUE(r.dla_dim.has_value());
  EXPECT_LE(*r.dla_dim, 10U);
}

TEST(precheck, disconnected_graph_reason) {
  const auto r = existence_precheck(4, 2, std::vector<Edge>{{0, 1}, {2, 3}}, GateKind::kRbs);
  EXPECT_EQ(r.verdict, Verdict::kInsufficientControl);
  EXPECT_FALSE(r.dla_dim.has_value());
  EXPECT_NE(r.reason.find("disconnected"), std::string::npos);
}

TEST(precheck, rbs_full_graph_exists) {
  const auto r = existence_precheck(5, 2, full_graph(5), GateKind::kRbs);
  EXPECT_EQ(r.verdict, Verdict::kLoaderExists);
  EXPECT_EQ(r.dla_dim, 45U);
}

TEST(greedy, two_qubits_one_gate) {
  const auto r = design_greedy(2, 1, std::vector<Edge>{{0, 1}}, 0);
  EXPECT_EQ(r.circuit.size(), 1U);
  EXPECT_EQ(r.final_rank, 1U);
  EXPECT_EQ(r.verdict, Verdict::kLoaderExists);
}

TEST(greedy, square_pendant_weight_two) {
  const auto r = design_greedy(5, 2, square_pendant_graph(), default_initial_index(5, 2));
  EXPECT_EQ(r.final_rank, 9U);
  EXPECT_EQ(r.target_rank, 9U);
  EXPECT_EQ(r.verdict, Verdict::kLoaderExists);
  EXPECT_EQ(rank_of(r.circuit, 2), 9U);
  for (std::size_t i = 1; i < r.rank_history.size(); ++i) EXPECT_GT(r.rank_history[i], r.rank_history[i - 1]);
  EXPECT_EQ(r.rank_history.size(), r.circuit.size());
}

TEST(greedy, insufficient_graph_terminates) {
  const auto r = design_greedy(4, 2, std::vector<Edge>{{0, 1}, {1, 2}}, 0);
  EXPECT_EQ(r.verdict, Verdict::kInsufficientControl);
  EXPECT_LT(r.final_rank, r.target_rank);
}

TEST(greedy, ordering_policy_keeps_rank) {
  DesignConfig lex;
  lex.order = CandidateOrder::kLexicographic;
  const auto a = design_greedy(5, 2, full_graph(5), 0, lex);
  const auto b = design_greedy(5, 2, full_graph(5), 0);
  EXPECT_EQ(a.final_rank, 9U);
  EXPECT_EQ(b.final_rank, 9U);
}

TEST(greedy, fbs_weight_two_is_not_a_loader) {
  DesignConfig cfg;
  cfg.kind = GateKind::kFbs;
  const auto r = design_greedy(5, 2, full_graph(5), 0, cfg);
  EXPECT_LE(r.final_rank, r.target_rank);
  ASSERT_TRUE(r.dla_dim.has_value());
  EXPECT_LE(*r.dla_dim, 10U);
}

TEST(prune, duplicated_gate_is_removed) {
  const Circuit c(3, {{GateKind::kRbs, 0, 1, 0.0}, {GateKind::kRbs, 0, 1, 0.0}, {GateKind::kRbs, 1, 2, 0.0}});
  ASSERT_EQ(rank_of(c, 1), 2U);
  const auto r = prune_overparametrized(c, 1, 0);
  EXPECT_EQ(r.circuit.size(), 2U);
  EXPECT_EQ(r.final_rank, 2U);
}

TEST(prune, minimal_circuit_unchanged) {
  const Circuit c(3, {{GateKind::kRbs, 0, 1, 0.0}, {GateKind::kRbs, 1, 2, 0.0}});
  const auto r = prune_overparametrized(c, 1, 0);
  EXPECT_EQ(r.circuit, c);
}

TEST(prune, random_seed_circuit_keeps_full_rank) {
  DesignConfig cfg;
  cfg.seed = 5;
  const auto r = design_by_pruning(4, 2, full_graph(4), 0, cfg);
  EXPECT_EQ(r.final_rank, 5U);
  EXPECT_EQ(rank_of(r.circuit, 2), 5U);
  EXPECT_EQ(r.verdict, Verdict::kLoaderExists);
  const auto again = prune_overparametrized(r.circuit, 2, 0, cfg);
  EXPECT_EQ(again.circuit, r.circuit);
}

TEST(composed, greedy_then_prune) {
  const auto r = design_composed(5, 2, square_pendant_graph(), 0);
  EXPECT_EQ(r.final_rank, 9U);
  EXPECT_EQ(r.verdict, Verdict::kLoaderExists);
}

namespace {

struct TrainSummary {
  int below_1e2 = 0;
  double mean_cost = 0.0;
};

TrainSummary train_many(const Circuit& c, std::size_t restarts) {
  std::mt19937_64 rng(89);
  std::normal_distribution<double> g;
  OptimizerConfig cfg;
  cfg.method = OptimizerMethod::kAdam;
  cfg.learning_rate = 0.1;
  cfg.max_iterations = 500;
  cfg.random_init = true;
  cfg.restarts = restarts;
  TrainSummary out;
  const int targets = 100;
  for (int t = 0; t < targets; ++t) {
    Eigen::VectorXd y(10);
    for (auto& x : y) x = g(rng);
    cfg.seed = static_cast<std::uint64_t>(t);
    const auto r = train_loader(c, 2, 0, y, cfg);
    if (r.final_cost < 1e-2) ++out.below_1e2;
    out.mean_cost += r.final_cost / targets;
  }
  return out;
}

}  // namespace

// A minimal loader has exactly d_k - 1 angles; a few targets fall outside its
// image, so the mean cost is checked rather than every single target.
TEST(soundness, greedy_loader_trains) {
  const auto design = design_greedy(5, 2, full_graph(5), 0);
  ASSERT_EQ(design.verdict, Verdict::kLoaderExists);
  const auto summary = train_many(design.circuit, 3);
  EXPECT_LT(summary.mean_cost, 1e-2);
  EXPECT_GE(summary.below_1e2, 85);
}

TEST(soundness, saturated_rank_circuit_reaches_targets) {
  const auto design = design_greedy(5, 2, full_graph(5), 0);
  std::vector<Gate> gates = design.circuit.gates();
  gates.insert(gates.end(), design.circuit.gates().begin(), design.circuit.gates().end());
  const Circuit doubled(5, gates);
  ASSERT_EQ(rank_of(doubled, 2), 9U);
  EXPECT_GE(train_many(doubled, 1).below_1e2, 95);
}
