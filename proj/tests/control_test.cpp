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

#include "hwsim/control.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <numbers>
#include <random>

#include "hwsim/ansatz.hpp"
#include "hwsim/errors.hpp"

using namespace hwsim;

namespace {

Eigen::VectorXd random_angles(std::size_t d, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);
  Eigen::VectorXd t(static_cast<Eigen::Index>(d));
  for (auto& x : t) x = angle(rng);
  return t;
}

// Residual of m after projection onto the span of the closure basis.
double outside_span(const LieBasis& basis, const Eigen::MatrixXd& m) {
  Eigen::MatrixXd rest = m;
  for (std::size_t b = 0; b < basis.dim(); ++b) {
    const Eigen::MatrixXd e = basis.element(b);
    rest -= (rest.cwiseProduct(e).sum() / e.squaredNorm()) * e;
  }
  return rest.norm() / std::max(m.norm(), 1e-300);
}

}  // namespace

TEST(generators, two_qubit_edge) {
  const auto gs = generators_from_graph(2, 1, std::vector<Edge>{{0, 1}}, GateKind::kRbs);
  ASSERT_EQ(gs.generators.size(), 1U);
  Eigen::Matrix2d expected;
  expected << 0, 1, -1, 0;
  EXPECT_EQ(gs.generators[0], Eigen::MatrixXd(expected));
}

TEST(generators, derivative_of_gate_block) {
  const auto edges = full_graph(5);
  for (const auto kind : {GateKind::kRbs, GateKind::kFbs}) {
    const auto gs = generators_from_graph(5, 2, edges, kind);
    for (std::size_t e = 0; e < edges.size(); ++e) {
      const Eigen::MatrixXd& g = gs.generators[e];
      EXPECT_EQ(g.transpose(), -g);
      EXPECT_EQ(static_cast<std::size_t>(g.cwiseAbs().sum()), 2 * binomial(3, 1));
      const double h = 1e-6;
      const Circuit plus(5, {{kind, edges[e].first, edges[e].second, h}});
      const Circuit minus(5, {{kind, edges[e].first, edges[e].second, -h}});
      const Eigen::MatrixXd fd = (circuit_unitary(plus, 2).matrix - circuit_unitary(minus, 2).matrix) / (2 * h);
      EXPECT_LT((fd - g).cwiseAbs().maxCoeff(), 1e-9);
    }
  }
}

TEST(generators, adjacent_fbs_equals_rbs) {
  const auto edges = line_graph(6);
  const auto r = generators_from_graph(6, 3, edges, GateKind::kRbs);
  const auto f = generators_from_graph(6, 3, edges, GateKind::kFbs);
  for (std::size_t e = 0; e < edges.size(); ++e) EXPECT_EQ(r.generators[e], f.generators[e]);
}

TEST(generators, empty_edge_list) {
  EXPECT_THROW(generators_from_graph(3, 1, std::vector<Edge>{}, GateKind::kRbs), DomainError);
}

TEST(dla, single_generator) {
  EXPECT_EQ(dla_dimension(generators_from_graph(4, 2, std::vector<Edge>{{1, 3}}, GateKind::kRbs)), 1U);
}

TEST(dla, three_qubit_line_is_so3) {
  const auto dim = dla_dimension(generators_from_graph(3, 1, line_graph(3), GateKind::kRbs));
  EXPECT_EQ(dim, 3U);
  EXPECT_EQ(orthogonal_algebra_dim(3), 3U);
}

TEST(dla, disconnected_unary_graph) {
  // k = 1, two separate edges: two commuting so(2) blocks.
  const auto gs = generators_from_graph(4, 1, std::vector<Edge>{{0, 1}, {2, 3}}, GateKind::kRbs);
  EXPECT_EQ(dla_dimension(gs), 2U);
  EXPECT_LT(dla_dimension(gs), binomial(4, 1) - 1);
}

TEST(dla, rbs_line_tracks_unary_algebra) {
  for (int n = 3; n <= 6; ++n) {
    EXPECT_EQ(dla_dimension(generators_from_graph(n, n / 2, line_graph(n), GateKind::kRbs)),
              static_cast<std::size_t>(n * (n - 1) / 2))
        << "n=" << n;
  }
}

TEST(dla, rbs_full_graph_is_maximal) {
  for (int n = 3; n <= 6; ++n) {
    const std::size_t d = binomial(n, n / 2);
    EXPECT_EQ(dla_dimension(generators_from_graph(n, n / 2, full_graph(n), GateKind::kRbs)), orthogonal_algebra_dim(d))
        << "n=" << n;
  }
}

TEST(dla, fbs_full_graph_ceiling) {
  for (int n = 3; n <= 6; ++n) {
    for (int k = 1; k < n; ++k) {
      EXPECT_LE(dla_dimension(generators_from_graph(n, k, full_graph(n), GateKind::kFbs)),
                static_cast<std::size_t>(n * (n - 1) / 2));
    }
  }
}

TEST(dla, basis_is_orthonormal_and_closed) {
  const auto gs = generators_from_graph(4, 2, std::vector<Edge>{{0, 1}, {1, 2}, {0, 3}}, GateKind::kRbs);
  const LieBasis basis = lie_closure(gs);
  for (std::size_t a = 0; a < basis.dim(); ++a) {
    for (std::size_t b = 0; b < basis.dim(); ++b) {
      EXPECT_NEAR(basis.ortho_basis[a].dot(basis.ortho_basis[b]), a == b ? 1.0 : 0.0, 1e-10);
    }
    const Eigen::MatrixXd ea = basis.element(a);
    EXPECT_LT((ea + ea.transpose()).cwiseAbs().maxCoeff(), 1e-14);
    EXPECT_NEAR(ea.squaredNorm(), 1.0, 1e-10);
  }
  for (std::size_t a = 0; a < basis.dim(); ++a) {
    for (std::size_t b = a + 1; b < basis.dim(); ++b) {
      const Eigen::MatrixXd ea = basis.element(a);
      const Eigen::MatrixXd eb = basis.element(b);
      const Eigen::MatrixXd comm = ea * eb - eb * ea;
      if (comm.norm() > 1e-12) EXPECT_LT(outside_span(basis, comm), 1e-8);
    }
  }
  for (const auto& g : gs.generators) EXPECT_LT(outside_span(basis, g), 1e-10);
}

TEST(dla, invariant_to_order_and_tolerance) {
  std::mt19937_64 rng(61);
  for (int n = 3; n <= 6; ++n) {
    auto edges = line_graph(n);
    edges.emplace_back(0, n - 1);
    if (n > 3) edges.emplace_back(1, 3);
    for (const auto kind : {GateKind::kRbs, GateKind::kFbs}) {
      const std::size_t ref = dla_dimension(generators_from_graph(n, n / 2, edges, kind));
      for (const double tol : {1e-12, 1e-10, 1e-8}) {
        std::shuffle(edges.begin(), edges.end(), rng);
        EXPECT_EQ(dla_dimension(generators_from_graph(n, n / 2, edges, kind), DlaOptions{tol, kDefaultDlaDimCap}), ref);
      }
    }
  }
}

TEST(dla, cap) {
  const auto gs = generators_from_graph(11, 5, line_graph(11), GateKind::kRbs);
  EXPECT_THROW(dla_dimension(gs), ResourceError);
}

TEST(qfim, single_gate_value) {
  const Circuit c(2, {{GateKind::kRbs, 0, 1, 0.4}});
  const auto q = qfim(c, 1, 0, c.thetas());
  ASSERT_EQ(q.matrix.rows(), 1);
  EXPECT_NEAR(q.matrix(0, 0), 4.0, 1e-14);
  EXPECT_EQ(qfim_rank(q), 1U);
}

TEST(qfim, unpopulated_gate_gives_zero_row) {
  const Circuit c(4, {{GateKind::kRbs, 0, 2, 0.0}, {GateKind::kRbs, 2, 3, 0.0}});
  const auto q = qfim(c, 2, 0, Eigen::Vector2d(0.0, 0.0));
  EXPECT_LT(q.matrix.row(1).cwiseAbs().maxCoeff(), 1e-15);
  EXPECT_LT(q.matrix.col(1).cwiseAbs().maxCoeff(), 1e-15);
  EXPECT_GT(q.matrix(0, 0), 1.0);
}

TEST(qfim, matches_finite_difference_states) {
  std::mt19937_64 rng(67);
  const Circuit base = random_circuit(5, full_graph(5), GateKind::kRbs, 12, rng);
  const SubspaceCircuit bound(base, 2);
  const Eigen::VectorXd theta = random_angles(base.size(), rng);
  const auto q = qfim(bound, 3, theta);
  const double h = 1e-5;
  Eigen::MatrixXd jac(10, static_cast<Eigen::Index>(base.size()));
  const Eigen::VectorXd e = Eigen::VectorXd::Unit(10, 3);
  for (Eigen::Index g = 0; g < jac.cols(); ++g) {
    Eigen::VectorXd tp = theta;
    Eigen::VectorXd tm = theta;
    tp(g) += h;
    tm(g) -= h;
    jac.col(g) = (apply_circuit(bound, tp, e) - apply_circuit(bound, tm, e)) / (2 * h);
  }
  const Eigen::VectorXd psi = apply_circuit(bound, theta, e);
  const Eigen::VectorXd overlap = jac.transpose() * psi;
  const Eigen::MatrixXd fd = 4.0 * (jac.transpose() * jac - overlap * overlap.transpose());
  EXPECT_LT((fd - q.matrix).cwiseAbs().maxCoeff(), 1e-6);
  EXPECT_LT((state_jacobian(bound, theta, 3) - jac).cwiseAbs().maxCoeff(), 1e-8);
}

TEST(qfim, zero_matrix_rank) {
  QfimMatrix q;
  q.matrix = Eigen::MatrixXd::Zero(3, 3);
  EXPECT_EQ(qfim_rank(q), 0U);
  q.matrix.resize(0, 0);
  EXPECT_EQ(qfim_rank(q), 0U);
}

TEST(qfim, periodic_ansatz_saturates_at_four_layers) {
  std::mt19937_64 rng(71);
  std::vector<std::size_t> ranks;
  for (int layers = 1; layers <= 5; ++layers) {
    const SubspaceCircuit c(periodic_ansatz(6, layers, GateKind::kRbs), 3);
    ranks.push_back(max_qfim_rank(c, 0, 3, rng));
  }
  EXPECT_EQ(ranks[0], 4U);
  EXPECT_TRUE(std::is_sorted(ranks.begin(), ranks.end()));
  EXPECT_LT(ranks[2], 19U);
  EXPECT_EQ(ranks[3], 19U);
  EXPECT_EQ(ranks[4], 19U);
}

TEST(qfim, psd_symmetric_and_bounded) {
  std::mt19937_64 rng(73);
  const Circuit c = random_circuit(5, full_graph(5), GateKind::kRbs, 20, rng);
  const SubspaceCircuit bound(c, 2);
  for (int trial = 0; trial < 100; ++trial) {
    const auto q = qfim(bound, 0, random_angles(c.size(), rng));
    EXPECT_LT((q.matrix - q.matrix.transpose()).cwiseAbs().maxCoeff(), 1e-10);
    EXPECT_GE(qfim_spectrum(q)(0), -1e-10);
    EXPECT_LE(qfim_rank(q), std::min<std::size_t>(c.size(), 9));
  }
}

TEST(qfim, rank_constant_over_random_points) {
  std::mt19937_64 rng(79);
  for (int n = 3; n <= 5; ++n) {
    for (const auto kind : {GateKind::kRbs, GateKind::kFbs}) {
      const Circuit c = random_circuit(n, full_graph(n), kind, 8, rng);
      const SubspaceCircuit bound(c, n / 2);
      const std::size_t ref = qfim_rank(qfim(bound, 0, random_angles(c.size(), rng)));
      for (int trial = 0; trial < 50; ++trial) {
        ASSERT_EQ(qfim_rank(qfim(bound, 0, random_angles(c.size(), rng))), ref) << "n=" << n;
      }
    }
  }
}

TEST(qfim, bounded_by_dla) {
  std::mt19937_64 rng(83);
  const std::vector<std::vector<Edge>> graphs = {line_graph(5), full_graph(5), square_pendant_graph(),
                                                 {{0, 1}, {0, 2}}};
  for (const auto& edges : graphs) {
    for (const auto kind : {GateKind::kRbs, GateKind::kFbs}) {
      const Circuit c = random_circuit(5, edges, kind, 30, rng);
      const std::size_t rank = max_qfim_rank(SubspaceCircuit(c, 2), 0, 3, rng);
      EXPECT_GE(dla_dimension(generators_from_graph(5, 2, edges, kind)), rank);
    }
  }
}
