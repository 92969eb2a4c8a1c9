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

#include "treeminor/minors.hpp"

#include "treeminor/catalyst.hpp"
#include "treeminor/errors.hpp"
#include "treeminor/forest.hpp"
#include "treeminor/linalg.hpp"

namespace treeminor {

namespace {

void require_size(const SubsetS& s, int minimum) {
  if (s.size() < minimum) {
    throw Error(ErrorCode::kSubsetTooSmall, "subset needs at least " + std::to_string(minimum) +
                                                " vertices, got " + std::to_string(s.size()));
  }
}

BigInt forest_formula(int m, const BigInt& coefficient, const BigInt& kappa, const BigInt& sum) {
  BigInt value = pow2(static_cast<unsigned>(m - 2)) * (coefficient * kappa - sum);
  return sign_power(static_cast<unsigned>(m - 1)) < 0 ? BigInt(-value) : value;
}

BigInt derangements(int m) {
  BigInt prev = 1, cur = 0;
  if (m == 0) return 1;
  for (int k = 2; k <= m; ++k) {
    BigInt next = (k - 1) * (prev + cur);
    prev = cur;
    cur = next;
  }
  return cur;
}

}  // namespace

BigInt minor_determinant(const Tree& tree, const SubsetS& s) {
  return det_exact(principal_submatrix(distance_matrix(tree), s));
}

BigInt minor_theorem_a(const Tree& tree, const SubsetS& s) {
  require_size(s, 2);
  const int m = s.size();
  return forest_formula(m, m - 1, count_s_rooted_dp(tree, s),
                        composite_weight_sum(tree, s, WeightShape::kTheoremA));
}

BigInt minor_richman(const Tree& tree, const SubsetS& s) {
  require_size(s, 2);
  return forest_formula(s.size(), tree.vertex_count() - 1, count_s_rooted_dp(tree, s),
                        composite_weight_sum(tree, s, WeightShape::kRichman));
}

std::optional<BigInt> minor_ck_corollary(const Tree& tree, const SubsetS& s) {
  require_size(s, 3);
  if (!induces_subtree(tree, s)) return std::nullopt;
  return graham_pollak(s.size());
}

BigInt graham_pollak(int n) {
  if (n < 2) throw Error(ErrorCode::kInvalidArgument, "Graham-Pollak needs n >= 2");
  BigInt value = BigInt(n - 1) * pow2(static_cast<unsigned>(n - 2));
  return sign_power(static_cast<unsigned>(n - 1)) < 0 ? BigInt(-value) : value;
}

MinorReport cross_verify(const Tree& tree, const SubsetS& s, std::uint64_t catalyst_budget) {
  require_size(s, 2);
  MinorReport r;
  r.n = tree.vertex_count();
  r.subset = s.members();
  r.value_det = minor_determinant(tree, s);
  r.kappa = count_s_rooted_dp(tree, s);
  r.sum_a = composite_weight_sum(tree, s, WeightShape::kTheoremA);
  r.sum_richman = composite_weight_sum(tree, s, WeightShape::kRichman);
  r.value_theorem_a = forest_formula(s.size(), s.size() - 1, r.kappa, r.sum_a);
  r.value_richman = forest_formula(s.size(), r.n - 1, r.kappa, r.sum_richman);

  const TreeMetric metric(tree);
  const auto count = catalyst_count(metric, s, catalyst_budget);
  r.catalyst_estimate = count ? *count : derangements(s.size());
  if (count && *count <= catalyst_budget) {
    r.value_catalyst = catalyst_signed_sum(metric, s, catalyst_budget);
  }
  r.agree = r.value_det == r.value_theorem_a && r.value_det == r.value_richman &&
            (!r.value_catalyst || *r.value_catalyst == r.value_det);
  return r;
}

}  // namespace treeminor
