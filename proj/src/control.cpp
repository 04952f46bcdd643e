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

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "hwsim/errors.hpp"
#include "hwsim/gradients.hpp"

namespace hwsim {

GeneratorSet generators_from_graph(int n, int k, std::span<const Edge> edges, GateKind kind) {
  if (edges.empty()) throw DomainError("generators: edge list is empty");
  validate_edges(n, edges);
  const BasisIndexer indexer(n, k);
  const auto d = static_cast<Eigen::Index>(indexer.dim());

  GeneratorSet set;
  set.n = n;
  set.k = k;
  set.kind = kind;
  set.edges.assign(edges.begin(), edges.end());
  for (const auto& [i, j] : edges) {
    Eigen::MatrixXd g = Eigen::MatrixXd::Zero(d, d);
    for (const RotationPair& p : rotation_pairs(indexer, i, j, kind)) {
      g(p.first, p.second) = p.sign;
      g(p.second, p.first) = -p.sign;
    }
    set.generators.push_back(std::move(g));
  }
  return set;
}

std::size_t orthogonal_algebra_dim(std::size_t d) { return d * (d - (d > 0 ? 1 : 0)) / 2; }

namespace {

Eigen::VectorXd pack_antisymmetric(const Eigen::MatrixXd& m) {
  const Eigen::Index d = m.rows();
  Eigen::VectorXd v(d * (d - 1) / 2);
  Eigen::Index at = 0;
  for (Eigen::Index r = 0; r < d; ++r) {
    for (Eigen::Index c = r + 1; c < d; ++c) v(at++) = std::numbers::sqrt2 * m(r, c);
  }
  return v;
}

Eigen::MatrixXd unpack_antisymmetric(const Eigen::VectorXd& v, Eigen::Index d) {
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(d, d);
  Eigen::Index at = 0;
  for (Eigen::Index r = 0; r < d; ++r) {
    for (Eigen::Index c = r + 1; c < d; ++c) {
      m(r, c) = v(at++) / std::numbers::sqrt2;
      m(c, r) = -m(r, c);
    }
  }
  return m;
}

// Orthonormal columns grown on demand; candidates are reduced by two rounds of
// classical Gram-Schmidt.
class SpanTracker {
 public:
  SpanTracker(Eigen::Index length, std::size_t max_dim, double tolerance)
      : max_dim_(max_dim), tolerance_(tolerance), q_(length, std::min<Eigen::Index>(16, std::max<Eigen::Index>(1, static_cast<Eigen::Index>(max_dim)))) {}

  std::size_t dim() const { return dim_; }
  bool full() const { return dim_ >= max_dim_; }
  const Eigen::MatrixXd& columns() const { return q_; }

  bool add(Eigen::VectorXd v) {
    const double raw = v.norm();
    scale_ = std::max(scale_, raw);
    if (raw == 0.0 || full()) return false;
    const auto used = static_cast<Eigen::Index>(dim_);
    for (int round = 0; round < 2 && used > 0; ++round) {
      const Eigen::VectorXd coeffs = q_.leftCols(used).transpose() * v;
      v.noalias() -= q_.leftCols(used) * coeffs;
    }
    const double residual = v.norm();
    if (residual <= tolerance_ * scale_) return false;
    if (used == q_.cols()) {
      q_.conservativeResize(Eigen::NoChange, std::min<Eigen::Index>(2 * q_.cols(), static_cast<Eigen::Index>(max_dim_)));
    }
    q_.col(used) = v / residual;
    ++dim_;
    return true;
  }

 private:
  std::size_t max_dim_;
  double tolerance_;
  double scale_ = 0.0;
  std::size_t dim_ = 0;
  Eigen::MatrixXd q_;
};

}  // namespace

Eigen::MatrixXd LieBasis::element(std::size_t index) const {
  return unpack_antisymmetric(ortho_basis.at(index), dim_k);
}

LieBasis lie_closure(const GeneratorSet& generators, const DlaOptions& options) {
  if (generators.generators.empty()) throw DomainError("dla: at least one generator is required");
  const auto d = generators.generators.front().rows();
  if (static_cast<std::size_t>(d) > options.dim_cap) {
    throw ResourceError("dla: C(n,k) = " + std::to_string(d) + " exceeds the DLA dimension cap " +
                        std::to_string(options.dim_cap));
  }
  const std::size_t max_dim = orthogonal_algebra_dim(static_cast<std::size_t>(d));

  LieBasis basis;
  basis.dim_k = static_cast<int>(d);
  if (max_dim == 0) return basis;

  SpanTracker span(d * (d - 1) / 2, max_dim, options.tolerance);
  std::vector<Eigen::MatrixXd> elements;
  auto accept = [&](const Eigen::MatrixXd& m) {
    if (span.add(pack_antisymmetric(m))) {
      elements.push_back(unpack_antisymmetric(span.columns().col(static_cast<Eigen::Index>(span.dim() - 1)), d));
    }
  };

  for (const auto& g : generators.generators) {
    accept(g);
    if (span.full()) break;
  }
  // Nested brackets [g_1, [g_2, [..., g_m]]] of generators already span the
  // algebra, so each sweep brackets the elements added by the previous sweep
  // with the accepted generators only; stop when a sweep contributes nothing.
  const std::size_t generator_count = elements.size();
  std::size_t sweep_begin = 0;
  while (!span.full()) {
    const std::size_t sweep_end = elements.size();
    if (sweep_end == sweep_begin) break;
    for (std::size_t l = sweep_begin; l < sweep_end && !span.full(); ++l) {
      for (std::size_t g = 0; g < generator_count && !span.full(); ++g) {
        if (g != l) accept(elements[g] * elements[l] - elements[l] * elements[g]);
      }
    }
    sweep_begin = sweep_end;
  }

  basis.ortho_basis.reserve(span.dim());
  for (std::size_t c = 0; c < span.dim(); ++c) basis.ortho_basis.emplace_back(span.columns().col(static_cast<Eigen::Index>(c)));
  return basis;
}

std::size_t dla_dimension(const GeneratorSet& generators, const DlaOptions& options) {
  return lie_closure(generators, options).dim();
}

Eigen::MatrixXd state_jacobian(const SubspaceCircuit& circuit, const Eigen::Ref<const Eigen::VectorXd>& theta,
                               std::size_t initial_index) {
  if (static_cast<std::size_t>(theta.size()) != circuit.size()) throw DomainError("qfim: theta length differs from gate count");
  const Eigen::VectorXd e_s = SubspaceState::basis(circuit.indexer(), initial_index).amplitudes();
  const InnerTrace trace = forward_with_trace(circuit, theta, e_s);

  Eigen::MatrixXd jac(static_cast<Eigen::Index>(circuit.dim()), theta.size());
  for (std::size_t g = 0; g < circuit.size(); ++g) {
    Eigen::VectorXd v = trace.layers[g];
    const double t = theta(static_cast<Eigen::Index>(g));
    rotate_pairs_derivative(v, circuit.pairs(g), std::cos(t), std::sin(t));
    apply_gates(circuit, theta, v, g + 1, circuit.size());
    jac.col(static_cast<Eigen::Index>(g)) = v;
  }
  return jac;
}

QfimMatrix qfim(const SubspaceCircuit& circuit, std::size_t initial_index, const Eigen::Ref<const Eigen::VectorXd>& theta) {
  const Eigen::MatrixXd jac = state_jacobian(circuit, theta, initial_index);
  const Eigen::VectorXd psi = apply_circuit(circuit, theta, SubspaceState::basis(circuit.indexer(), initial_index).amplitudes());
  const Eigen::VectorXd overlap = jac.transpose() * psi;  // <d_i psi | psi>
  QfimMatrix out;
  out.matrix = 4.0 * (jac.transpose() * jac - overlap * overlap.transpose());
  out.theta = theta;
  out.initial_index = initial_index;
  return out;
}

QfimMatrix qfim(const Circuit& circuit, int k, std::size_t initial_index, const Eigen::Ref<const Eigen::VectorXd>& theta) {
  if (circuit.n() < 1) throw DomainError("qfim: invalid circuit");
  return qfim(SubspaceCircuit(circuit, k), initial_index, theta);
}

Eigen::VectorXd qfim_spectrum(const QfimMatrix& qfim) {
  if (qfim.matrix.size() == 0) return {};
  const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(qfim.matrix, Eigen::EigenvaluesOnly);
  return solver.eigenvalues();
}

std::size_t qfim_rank(const QfimMatrix& qfim, double tolerance) {
  const Eigen::VectorXd ev = qfim_spectrum(qfim);
  if (ev.size() == 0) return 0;
  const double largest = ev.maxCoeff();
  // QFIM entries are O(1); anything this small is round-off of a zero matrix.
  if (largest <= 1e-12) return 0;
  return static_cast<std::size_t>((ev.array() > tolerance * largest).count());
}

std::size_t max_qfim_rank(const SubspaceCircuit& circuit, std::size_t initial_index, std::size_t samples,
                          std::mt19937_64& rng, double tolerance) {
  if (circuit.size() == 0) return 0;
  std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);
  std::size_t best = 0;
  for (std::size_t s = 0; s < std::max<std::size_t>(1, samples); ++s) {
    Eigen::VectorXd theta(static_cast<Eigen::Index>(circuit.size()));
    for (Eigen::Index g = 0; g < theta.size(); ++g) theta(g) = angle(rng);
    best = std::max(best, qfim_rank(qfim(circuit, initial_index, theta), tolerance));
  }
  return best;
}

}  // namespace hwsim
