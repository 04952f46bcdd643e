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

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace hwsim {

/// A computational basis state. Qubit 0 is the most significant of the low
/// `n` bits, so the integer value orders bitstrings lexicographically.
using Bits = std::uint64_t;

inline constexpr int kMaxQubits = 62;

/// Exact binomial coefficient C(n, k) for 0 <= n <= 63; zero when k < 0 or k > n.
std::uint64_t binomial(int n, int k);

inline constexpr Bits qubit_mask(int n, int qubit) { return Bits{1} << (n - 1 - qubit); }

inline constexpr bool qubit_set(Bits s, int n, int qubit) { return (s & qubit_mask(n, qubit)) != 0; }

/// Dense indexing of the weight-k basis B_k^n.
///
/// Index 0 is the lexicographically largest bitstring (the k first qubits set),
/// so for n = 3, k = 2 the order is 110, 101, 011. rank/unrank run in O(n)
/// through the combinatorial number system.
class BasisIndexer {
 public:
  BasisIndexer(int n, int k);

  int n() const { return n_; }
  int k() const { return k_; }
  std::size_t dim() const { return dim_; }

  std::size_t rank(Bits state) const;
  Bits unrank(std::size_t index) const;

  std::string to_string(Bits state) const;
  Bits from_string(std::string_view bits) const;

  friend bool operator==(const BasisIndexer& a, const BasisIndexer& b) {
    return a.n_ == b.n_ && a.k_ == b.k_;
  }

 private:
  int n_;
  int k_;
  std::size_t dim_;
};

/// All weight-k bitstrings of length n in BasisIndexer order.
std::vector<Bits> enumerate_basis(int n, int k);

}  // namespace hwsim
