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

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "hwsim/circuit.hpp"
#include "hwsim/control.hpp"

namespace hwsim {

enum class Verdict { kLoaderExists, kInsufficientControl, kIndeterminate };

std::string_view to_string(Verdict verdict);

struct PrecheckResult {
  Verdict verdict = Verdict::kIndeterminate;
  std::optional<std::size_t> dla_dim;
  std::string reason;
};

/// Classifies a connectivity graph from its subspace DLA dimension:
/// below d_k - 1 no loader can exist, at 1/2 d_k (d_k - 1) one always does,
/// anything in between is undecided by the DLA alone.
PrecheckResult existence_precheck(int n, int k, std::span<const Edge> edges, GateKind kind,
                                  const DlaOptions& options = {});

enum class CandidateOrder {
  kLexicographic,  // edges in (i, j) order
  kParallelFirst,  // edges that land in the shallowest layer first, then (i, j)
};

struct DesignConfig {
  GateKind kind = GateKind::kRbs;
  CandidateOrder order = CandidateOrder::kParallelFirst;
  std::size_t max_sweeps = 64;
  std::size_t rank_samples = 3;  // random theta points per max-rank estimate
  double rank_tolerance = kDefaultRankTolerance;
  DlaOptions dla;
  bool compute_dla = true;
  double seed_factor = 2.0;  // pruning seeds D = seed_factor * dim(DLA) gates
  std::uint64_t seed = 0;
};

struct DesignReport {
  Circuit circuit{1};
  std::size_t final_rank = 0;
  std::size_t target_rank = 0;  // d_k - 1
  std::optional<std::size_t> dla_dim;
  Verdict verdict = Verdict::kIndeterminate;
  std::vector<std::size_t> rank_history;  // max rank after each accepted change
  std::string reason;
};

/// Index of the basis state with the k first qubits set (index 0).
std::size_t default_initial_index(int n, int k);

/// Appends edge gates one at a time, keeping a gate only when it strictly
/// raises the max QFIM rank, until the rank reaches d_k - 1 or a full sweep
/// over the candidates adds nothing.
DesignReport design_greedy(int n, int k, std::span<const Edge> edges, std::size_t initial_index,
                           const DesignConfig& config = {});

/// Repeatedly drops the first gate whose removal keeps the max QFIM rank,
/// restarting the scan after each removal.
DesignReport prune_overparametrized(const Circuit& circuit, int k, std::size_t initial_index,
                                    const DesignConfig& config = {});

/// Random seed circuit of seed_factor * dim(DLA) gates on `edges`, then pruned.
DesignReport design_by_pruning(int n, int k, std::span<const Edge> edges, std::size_t initial_index,
                               const DesignConfig& config = {});

/// design_greedy followed by prune_overparametrized.
DesignReport design_composed(int n, int k, std::span<const Edge> edges, std::size_t initial_index,
                             const DesignConfig& config = {});

}  // namespace hwsim
