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

#include "hwsim/combinatorics.hpp"

#include <array>
#include <bit>

#include "hwsim/errors.hpp"

namespace hwsim {

namespace {

using PascalTable = std::array<std::array<std::uint64_t, 64>, 64>;

constexpr PascalTable make_pascal() {
  PascalTable t{};
  for (int n = 0; n < 64; ++n) {
    t[n][0] = 1;
    for (int k = 1; k <= n; ++k) t[n][k] = t[n - 1][k - 1] + (k < n ? t[n - 1][k] : 0);
  }
  return t;
}

constexpr PascalTable kPascal = make_pascal();

}  // namespace

std::uint64_t binomial(int n, int k) {
  if (n < 0 || n > 63) throw DomainError("binomial: n out of range");
  if (k < 0 || k > n) return 0;
  return kPascal[n][k];
}

BasisIndexer::BasisIndexer(int n, int k) : n_(n), k_(k), dim_(0) {
  if (n < 1 || n > kMaxQubits) throw DomainError("basis: n must be in [1, 62]");
  if (k < 0 || k > n) throw DomainError("basis: k must satisfy 0 <= k <= n");
  dim_ = static_cast<std::size_t>(binomial(n, k));
}

// The colex rank of the set bit positions c_1 < ... < c_k is sum C(c_m, m),
// which equals the ascending numeric rank among weight-k integers. Our order
// is descending, hence the reflection dim - 1 - colex.
std::size_t BasisIndexer::rank(Bits state) const {
  if (n_ < 64 && (state >> n_) != 0) throw DomainError("rank: bitstring wider than n");
  if (std::popcount(state) != k_) throw DomainError("rank: bitstring has wrong Hamming weight");
  std::uint64_t colex = 0;
  int m = 0;
  for (int pos = 0; pos < n_; ++pos) {
    if ((state >> pos) & 1U) colex += kPascal[pos][++m];
  }
  return dim_ - 1 - static_cast<std::size_t>(colex);
}

Bits BasisIndexer::unrank(std::size_t index) const {
  if (index >= dim_) throw DomainError("unrank: index out of range");
  std::uint64_t colex = dim_ - 1 - index;
  Bits state = 0;
  int m = k_;
  for (int pos = n_ - 1; pos >= 0 && m > 0; --pos) {
    const std::uint64_t c = pos >= m ? kPascal[pos][m] : 0;
    if (c <= colex) {
      state |= Bits{1} << pos;
      colex -= c;
      --m;
    }
  }
  return state;
}

std::string BasisIndexer::to_string(Bits state) const {
  std::string out(static_cast<std::size_t>(n_), '0');
  for (int q = 0; q < n_; ++q) {
    if (qubit_set(state, n_, q)) out[static_cast<std::size_t>(q)] = '1';
  }
  return out;
}

Bits BasisIndexer::from_string(std::string_view bits) const {
  if (bits.size() != static_cast<std::size_t>(n_)) throw DomainError("bitstring length differs from n");
  Bits state = 0;
  for (int q = 0; q < n_; ++q) {
    const char c = bits[static_cast<std::size_t>(q)];
    if (c == '1') {
      state |= qubit_mask(n_, q);
    } else if (c != '0') {
      throw DomainError("bitstring may only contain '0' and '1'");
    }
  }
  if (std::popcount(state) != k_) throw DomainError("bitstring has wrong Hamming weight");
  return state;
}

std::vector<Bits> enumerate_basis(int n, int k) {
  const BasisIndexer indexer(n, k);
  std::vector<Bits> out(indexer.dim());
  if (k == 0) {
    out[0] = 0;
    return out;
  }
  // Gosper's hack walks weight-k integers upwards; fill from the back.
  Bits v = (Bits{1} << k) - 1;
  for (std::size_t idx = out.size(); idx-- > 0;) {
    out[idx] = v;
    const Bits c = v & (~v + 1);
    const Bits r = v + c;
    v = (((r ^ v) >> 2) / c) | r;
  }
  return out;
}

}  // namespace hwsim
