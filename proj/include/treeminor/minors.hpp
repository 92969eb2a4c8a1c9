// Copyright 2026 The treeminor Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef TREEMINOR_MINORS_HPP
#define TREEMINOR_MINORS_HPP

#include <cstdint>
#include <optional>

#include "treeminor/bigint.hpp"
#include "treeminor/tree.hpp"

namespace treeminor {

// Four independent routes to det D[S].
//
//   determinant  Bareiss on the principal submatrix.
//   theorem A    (-1)^(m-1) 2^(m-2) [ (m-1) kappa - sum (b-1)(b-4) ]
//   richman      (-1)^(m-1) 2^(m-2) [ (n-1) kappa - sum (b-2)^2 ]
//   catalyst     signed count of S-catalysts (see catalyst.hpp)
//
// kappa counts S-rooted forests; the sums run over (S,*)-rooted forests with
// b the boundary degree of the floating component.

BigInt minor_determinant(const Tree& tree, const SubsetS& s);

// Throws SubsetTooSmall when m < 2.
BigInt minor_theorem_a(const Tree& tree, const SubsetS& s);
BigInt minor_richman(const Tree& tree, const SubsetS& s);

// Closed form (-1)^(m-1) (m-1) 2^(m-2) when s induces a subtree of the tree,
// nullopt otherwise. Throws SubsetTooSmall when m < 3.
std::optional<BigInt> minor_ck_corollary(const Tree& tree, const SubsetS& s);

// (-1)^(n-1) (n-1) 2^(n-2), n >= 2.
BigInt graham_pollak(int n);

inline constexpr std::uint64_t kDefaultCatalystBudget = 50'000'000;

struct MinorReport {
  int n = 0;
  std::vector<Vertex> subset;
  BigInt value_det;
  BigInt value_theorem_a;
  BigInt value_richman;
  std::optional<BigInt> value_catalyst;  // absent when over budget
  BigInt catalyst_estimate;              // elementary steps the route would take
  BigInt kappa;
  BigInt sum_a;
  BigInt sum_richman;
  bool agree = false;
};

// Runs every route; the catalyst route only when its estimate fits in
// catalyst_budget. agree is true iff all present values coincide.
MinorReport cross_verify(const Tree& tree, const SubsetS& s, std::uint64_t catalyst_budget);

}  // namespace treeminor

#endif  // TREEMINOR_MINORS_HPP
