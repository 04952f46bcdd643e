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

#include <algorithm>
#include <cmath>
#include <random>
#include <set>

#include "hwsim/ansatz.hpp"
#include "hwsim/errors.hpp"

namespace hwsim {

std::string_view to_string(Verdict verdict) {
  switch (verdict) {
    case Verdict::kLoaderExists:
      return "loader_exists";
    case Verdict::kInsufficientControl:
      return "insufficient_control";
    case Verdict::kIndeterminate:
      return "indeterminate";
  }
  return "indeterminate";
}

std::size_t default_initial_index(int n, int k) {
  const BasisIndexer indexer(n, k);
  Bits s = 0;
  for (int q = 0; q < k; ++q) s |= qubit_mask(n, q);
  return indexer.rank(s);
}

PrecheckResult existence_precheck(int n, int k, std::span<const Edge> edges, GateKind kind, const DlaOptions& options) {
  validate_edges(n, edges);
  const BasisIndexer indexer(n, k);
  const std::size_t d = indexer.dim();
  PrecheckResult out;
  if (d <= 1) {
    out.verdict = Verdict::kLoaderExists;
    out.dla_dim = 0;
    out.reason = "subspace is one-dimensional";
    return out;
  }
  if (!is_connected(n, edges)) {
    out.verdict = Verdict::kInsufficientControl;
    out.reason = "connectivity graph is disconnected";
    return out;
  }
  const std::size_t dim = dla_dimension(generators_from_graph(n, k, edges, kind), options);
  out.dla_dim = dim;
  if (dim < d - 1) {
    out.verdict = Verdict::kInsufficientControl;
    out.reason = "dim(DLA) < d_k - 1";
  } else if (dim == orthogonal_algebra_dim(d)) {
    out.verdict = Verdict::kLoaderExists;
    out.reason = "dim(DLA) = d_k (d_k - 1) / 2";
  } else {
    out.verdict = Verdict::kIndeterminate;
    out.reason = "d_k - 1 <= dim(DLA) < d_k (d_k - 1) / 2";
  }
  return out;
}

namespace {

std::vector<Edge> unique_edges(const Circuit& circuit) {
  std::set<Edge> seen;
  for (const Gate& g : circuit.gates()) seen.insert(g.edge());
  return {seen.begin(), seen.end()};
}

std::optional<std::size_t> try_dla(int n, int k, std::span<const Edge> edges, const DesignConfig& config) {
  if (!config.compute_dla || edges.empty()) return std::nullopt;
  try {
    return dla_dimension(generators_from_graph(n, k, edges, config.kind), config.dla);
  } catch (const ResourceError&) {
    return std::nullopt;
  }
}

void finalize(DesignReport& report, int n, std::span<const Edge> edges) {
  if (report.final_rank >= report.target_rank) {
    report.verdict = Verdict::kLoaderExists;
    report.reason = "max QFIM rank reached d_k - 1";
  } else if (!is_connected(n, edges)) {
    report.verdict = Verdict::kInsufficientControl;
    report.reason = "connectivity graph is disconnected";
  } else if (report.dla_dim && *report.dla_dim < report.target_rank) {
    report.verdict = Verdict::kInsufficientControl;
    report.reason = "dim(DLA) < d_k - 1";
  } else {
    report.verdict = Verdict::kIndeterminate;
    report.reason = "max QFIM rank stalled below d_k - 1";
  }
}

// Per-qubit depth of the circuit scheduled as-soon-as-possible.
std::vector<std::size_t> qubit_depths(const Circuit& circuit) {
  std::vector<std::size_t> depth(static_cast<std::size_t>(circuit.n()), 0);
  for (const Gate& g : circuit.gates()) {
    const std::size_t layer = std::max(depth[static_cast<std::size_t>(g.i)], depth[static_cast<std::size_t>(g.j)]) + 1;
    depth[static_cast<std::size_t>(g.i)] = layer;
    depth[static_cast<std::size_t>(g.j)] = layer;
  }
  return depth;
}

std::size_t pick_candidate(const std::vector<Edge>& untried, const Circuit& circuit, CandidateOrder order) {
  if (order == CandidateOrder::kLexicographic) return 0;
  const auto depth = qubit_depths(circuit);
  std::size_t best = 0;
  std::size_t best_layer = SIZE_MAX;
  for (std::size_t c = 0; c < untried.size(); ++c) {
    const auto& [i, j] = untried[c];
    const std::size_t layer = std::max(depth[static_cast<std::size_t>(i)], depth[static_cast<std::size_t>(j)]);
    if (layer < best_layer) {
      best_layer = layer;
      best = c;
    }
  }
  return best;
}

}  // namespace

DesignReport design_greedy(int n, int k, std::span<const Edge> edges, std::size_t initial_index,
                           const DesignConfig& config) {
  validate_edges(n, edges);
  std::vector<Edge> candidates(edges.begin(), edges.end());
  std::sort(candidates.begin(), candidates.end());
  candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());

  const BasisIndexer indexer(n, k);
  if (initial_index >= indexer.dim()) throw DomainError("design: initial index out of range");
  std::mt19937_64 rng(config.seed);

  DesignReport report;
  report.circuit = Circuit(n, {}, candidates);
  report.target_rank = indexer.dim() - 1;
  report.dla_dim = try_dla(n, k, candidates, config);

  std::size_t rank = 0;
  for (std::size_t sweep = 0; sweep < config.max_sweeps && rank < report.target_rank; ++sweep) {
    bool accepted = false;
    std::vector<Edge> untried = candidates;
    while (!untried.empty() && rank < report.target_rank) {
      const std::size_t pick = pick_candidate(untried, report.circuit, config.order);
      const Edge e = untried[pick];
      untried.erase(untried.begin() + static_cast<std::ptrdiff_t>(pick));
      Circuit trial = report.circuit.appended({config.kind, e.first, e.second, 0.0});
      const std::size_t r =
          max_qfim_rank(SubspaceCircuit(trial, k), initial_index, config.rank_samples, rng, config.rank_tolerance);
      if (r > rank) {
        report.circuit = std::move(trial);
        rank = r;
        report.rank_history.push_back(r);
        accepted = true;
      }
    }
    if (!accepted) break;
  }
  report.final_rank = rank;
  finalize(report, n, candidates);
  return report;
}

DesignReport prune_overparametrized(const Circuit& circuit, int k, std::size_t initial_index, const DesignConfig& config) {
  const BasisIndexer indexer(circuit.n(), k);
  if (initial_index >= indexer.dim()) throw DomainError("prune: initial index out of range");
  std::mt19937_64 rng(config.seed);
  auto rank_of = [&](const Circuit& c) {
    return max_qfim_rank(SubspaceCircuit(c, k), initial_index, config.rank_samples, rng, config.rank_tolerance);
  };

  DesignReport report;
  report.circuit = circuit;
  report.target_rank = indexer.dim() - 1;
  const std::size_t rank = rank_of(circuit);
  report.rank_history.push_back(rank);

  for (bool removed = true; removed;) {
    removed = false;
    for (std::size_t g = 0; g < report.circuit.size(); ++g) {
      Circuit trial = report.circuit.without(g);
      if (rank_of(trial) == rank) {
        report.circuit = std::move(trial);
        report.rank_history.push_back(rank);
        removed = true;
        break;
      }
    }
  }
  report.final_rank = rank;
  const auto edges = circuit.connectivity() ? *circuit.connectivity() : unique_edges(circuit);
  report.dla_dim = try_dla(circuit.n(), k, edges, config);
  finalize(report, circuit.n(), edges);
  return report;
}

DesignReport design_by_pruning(int n, int k, std::span<const Edge> edges, std::size_t initial_index,
                               const DesignConfig& config) {
  validate_edges(n, edges);
  const std::size_t dla = dla_dimension(generators_from_graph(n, k, edges, config.kind), config.dla);
  const auto gates = static_cast<std::size_t>(std::ceil(config.seed_factor * static_cast<double>(dla)));
  std::mt19937_64 rng(config.seed ^ 0x9e3779b97f4a7c15ULL);
  const Circuit seed = random_circuit(n, edges, config.kind, std::max<std::size_t>(1, gates), rng);
  std::vector<Edge> graph(edges.begin(), edges.end());
  DesignReport report = prune_overparametrized(Circuit(n, seed.gates(), graph), k, initial_index, config);
  return report;
}

DesignReport design_composed(int n, int k, std::span<const Edge> edges, std::size_t initial_index,
                             const DesignConfig& config) {
  const DesignReport greedy = design_greedy(n, k, edges, initial_index, config);
  DesignReport pruned = prune_overparametrized(greedy.circuit, k, initial_index, config);
  pruned.dla_dim = greedy.dla_dim;
  return pruned;
}

}  // namespace hwsim
