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

#include "treeminor/linalg.hpp"

#include <algorithm>

#include "treeminor/errors.hpp"

namespace treeminor {

BigInt det_exact(const BigMatrix& mat) {
  const std::size_t n = mat.dim();
  if (n == 0) return 1;
  BigMatrix a = mat;
  int sign = 1;
  BigInt previous_pivot = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t swap_row = k + 1;
      while (swap_row < n && a(swap_row, k) == 0) ++swap_row;
      if (swap_row == n) return 0;  // column k is zero from row k down
      for (std::size_t c = k; c < n; ++c) std::swap(a(k, c), a(swap_row, c));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        // Sylvester's identity guarantees this quotient is exact.
        a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / previous_pivot;
      }
      a(i, k) = 0;
    }
    previous_pivot = a(k, k);
  }
  BigInt det = a(n - 1, n - 1);
  return sign > 0 ? det : BigInt(-det);
}

Permutation::Permutation(std::vector<Vertex> domain, std::vector<Vertex> images)
    : domain_(std::move(domain)), images_(std::move(images)) {
  if (domain_.size() != images_.size() ||
      !std::is_sorted(domain_.begin(), domain_.end()) ||
      std::adjacent_find(domain_.begin(), domain_.end()) != domain_.end()) {
    throw Error(ErrorCode::kInvalidArgument, "malformed permutation domain");
  }
  std::vector<Vertex> sorted = images_;
  std::sort(sorted.begin(), sorted.end());
  if (sorted != domain_) {
    throw Error(ErrorCode::kInvalidArgument, "images are not a bijection of the domain");
  }
}

Permutation Permutation::identity(std::vector<Vertex> domain) {
  std::vector<Vertex> images = domain;
  return Permutation(std::move(domain), std::move(images));
}

int Permutation::position(Vertex x) const {
  auto it = std::lower_bound(domain_.begin(), domain_.end(), x);
  if (it == domain_.end() || *it != x) {
    throw Error(ErrorCode::kInvalidArgument,
                "vertex " + std::to_string(x) + " not in permutation domain");
  }
  return static_cast<int>(it - domain_.begin());
}

Vertex Permutation::operator()(Vertex x) const { return images_[position(x)]; }

int Permutation::cycle_count() const {
  std::vector<bool> seen(domain_.size(), false);
  int cycles = 0;
  for (std::size_t start = 0; start < domain_.size(); ++start) {
    if (seen[start]) continue;
    ++cycles;
    for (std::size_t k = start; !seen[k]; k = position(images_[k])) seen[k] = true;
  }
  return cycles;
}

bool Permutation::has_fixed_point() const {
  for (std::size_t k = 0; k < domain_.size(); ++k) {
    if (domain_[k] == images_[k]) return true;
  }
  return false;
}

Permutation Permutation::compose_transposition(Vertex i, Vertex j) const {
  std::vector<Vertex> images = images_;
  std::swap(images[position(i)], images[position(j)]);
  return Permutation(domain_, std::move(images));
}

std::vector<std::vector<Vertex>> Permutation::cycles() const {
  std::vector<bool> seen(domain_.size(), false);
  std::vector<std::vector<Vertex>> out;
  for (std::size_t start = 0; start < domain_.size(); ++start) {
    if (seen[start]) continue;
    std::vector<Vertex> cycle;
    for (std::size_t k = start; !seen[k]; k = position(images_[k])) {
      seen[k] = true;
      cycle.push_back(domain_[k]);
    }
    out.push_back(std::move(cycle));
  }
  return out;
}

int permutation_sign(std::span<const int> one_line) {
  std::vector<bool> seen(one_line.size(), false);
  int transpositions = 0;
  for (std::size_t start = 0; start < one_line.size(); ++start) {
    if (seen[start]) continue;
    std::size_t length = 0;
    for (std::size_t k = start; !seen[k]; k = static_cast<std::size_t>(one_line[k])) {
      seen[k] = true;
      ++length;
    }
    transpositions += static_cast<int>(length) - 1;
  }
  return sign_power(static_cast<unsigned>(transpositions));
}

}  // namespace treeminor
