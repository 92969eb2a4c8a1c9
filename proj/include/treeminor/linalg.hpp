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

#ifndef TREEMINOR_LINALG_HPP
#define TREEMINOR_LINALG_HPP

#include <span>
#include <vector>

#include "treeminor/bigint.hpp"
#include "treeminor/tree.hpp"

namespace treeminor {

// Exact determinant by fraction-free (Bareiss) elimination. Every division
// is exact. A 0x0 matrix has determinant 1.
BigInt det_exact(const BigMatrix& mat);

// Bijection of a finite vertex set. images()[k] is the image of domain()[k];
// domain() is strictly increasing.
class Permutation {
 public:
  // Throws InvalidArgument unless images is a rearrangement of domain.
  Permutation(std::vector<Vertex> domain, std::vector<Vertex> images);
  static Permutation identity(std::vector<Vertex> domain);

  const std::vector<Vertex>& domain() const noexcept { return domain_; }
  const std::vector<Vertex>& images() const noexcept { return images_; }
  int size() const noexcept { return static_cast<int>(domain_.size()); }

  Vertex operator()(Vertex x) const;
  int position(Vertex x) const;

  int cycle_count() const;
  // (-1)^(size - cycles).
  int sign() const { return sign_power(static_cast<unsigned>(size() - cycle_count())); }
  bool has_fixed_point() const;

  // this o (i j): the map x -> this((i j)(x)).
  Permutation compose_transposition(Vertex i, Vertex j) const;

  // Cycles in canonical form: each starts at its smallest element, cycles
  // ordered by that element. Fixed points included.
  std::vector<std::vector<Vertex>> cycles() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation& a, const Permutation& b) {
    return a.images_ <=> b.images_;
  }

 private:
  std::vector<Vertex> domain_;
  std::vector<Vertex> images_;
};

// Sign of a permutation of {0..k-1} in one-line notation.
int permutation_sign(std::span<const int> one_line);

}  // namespace treeminor

#endif  // TREEMINOR_LINALG_HPP
