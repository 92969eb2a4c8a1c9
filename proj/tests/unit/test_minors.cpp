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

#include "doctest.h"
#include "expect.hpp"
#include "oracles.hpp"
#include "treeminor/minors.hpp"

using namespace treeminor;
using testing_util::code_of;
using testing_util::path;
using testing_util::star_at;
using testing_util::subset;

TEST_CASE("worked examples") {
  const Tree p3 = path(3);
  const SubsetS ends = subset({1, 3}, 3);
  CHECK(minor_determinant(p3, ends) == -4);
  CHECK(minor_theorem_a(p3, ends) == -4);
  CHECK(minor_richman(p3, ends) == -4);

  const Tree star = star_at(4, 4);
  const SubsetS leaves = subset({1, 2, 3}, 4);
  CHECK(minor_determinant(star, leaves) == 16);
  CHECK(minor_theorem_a(star, leaves) == 16);
  CHECK(minor_richman(star, leaves) == 16);

  CHECK(minor_determinant(path(4), subset({1, 4}, 4)) == -9);
  CHECK(minor_theorem_a(path(4), subset({1, 4}, 4)) == -9);
  CHECK(minor_ck_corollary(path(4), subset({1, 2, 3}, 4)) == BigInt(4));
  CHECK_FALSE(minor_ck_corollary(star, leaves).has_value());
  CHECK(minor_determinant(p3, subset({2}, 3)) == 0);
}

TEST_CASE("size guards") {
  const Tree p3 = path(3);
  CHECK(code_of([&] { minor_theorem_a(p3, subset({2}, 3)); }) == ErrorCode::kSubsetTooSmall);
  CHECK(code_of([&] { minor_richman(p3, subset({2}, 3)); }) == ErrorCode::kSubsetTooSmall);
  CHECK(code_of([&] { minor_ck_corollary(p3, subset({1, 2}, 3)); }) ==
        ErrorCode::kSubsetTooSmall);
}

TEST_CASE("graham_pollak values and full-set minors, n <= 12") {
  CHECK(graham_pollak(2) == -1);
  CHECK(graham_pollak(3) == 4);
  CHECK(graham_pollak(4) == -12);
  CHECK(graham_pollak(5) == 32);
  for (int n = 2; n <= 12; ++n) {
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
      const Tree t = random_tree(n, seed * 31 + n);
      CHECK(minor_determinant(t, SubsetS::full(n)) == graham_pollak(n));
      CHECK(minor_theorem_a(t, SubsetS::full(n)) == graham_pollak(n));
    }
  }
}

TEST_CASE("pairs give minus the squared distance, n <= 9") {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const int n = 2 + static_cast<int>(seed % 8);
    const Tree t = random_tree(n, seed);
    const TreeMetric metric(t);
    for (Vertex a = 1; a <= n; ++a) {
      for (Vertex b = a + 1; b <= n; ++b) {
        const BigInt d = metric.distance(a, b);
        const SubsetS s = subset({a, b}, n);
        CHECK(minor_determinant(t, s) == -d * d);
        CHECK(minor_theorem_a(t, s) == -d * d);
        CHECK(minor_richman(t, s) == -d * d);
      }
    }
  }
}

TEST_CASE("determinant, both forest formulas and Leibniz agree, n <= 6") {
  for (int n = 2; n <= 6; ++n) {
    for_each_labeled_tree(n, [&](const Tree& t) {
      for_each_subset(n, 2, [&](const SubsetS& s) {
        const BigInt det = minor_determinant(t, s);
        CHECK(det == oracle::leibniz_det(oracle::sub_distance(t, s.members())));
        CHECK(minor_theorem_a(t, s) == det);
        CHECK(minor_richman(t, s) == det);
      });
    });
  }
}

TEST_CASE("formulas agree on random larger instances") {
  SplitMix64 rng(2024);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 8 + static_cast<int>(rng.next() % 7);
    const Tree t = random_tree(n, rng.next());
    const SubsetS s = random_subset(n, 2, rng);
    const BigInt det = minor_determinant(t, s);
    CHECK(minor_theorem_a(t, s) == det);
    CHECK(minor_richman(t, s) == det);
  }
}

TEST_CASE("closed form on subtree-inducing subsets") {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const int base = 3 + static_cast<int>(seed % 5);
    const int extra = static_cast<int>(seed % 4);
    const PendantExtension p = random_pendant_extension(base, extra, seed);
    REQUIRE(induces_subtree(p.tree, p.base));
    const auto ck = minor_ck_corollary(p.tree, p.base);
    REQUIRE(ck.has_value());
    CHECK(*ck == graham_pollak(base));
    CHECK(minor_determinant(p.tree, p.base) == *ck);
  }
}

TEST_CASE("cross_verify") {
  const MinorReport r = cross_verify(path(3), subset({1, 3}, 3), kDefaultCatalystBudget);
  CHECK(r.agree);
  REQUIRE(r.value_catalyst.has_value());
  CHECK(*r.value_catalyst == -4);
  CHECK(r.kappa == 2);
  CHECK(r.catalyst_estimate == 4);
  CHECK(r.subset == std::vector<Vertex>{1, 3});

  const Tree big = random_tree(30, 9);
  std::vector<int> members;
  for (int v = 1; v <= 12; ++v) members.push_back(v);
  const MinorReport capped = cross_verify(big, subset(members, 30), 1000);
  CHECK_FALSE(capped.value_catalyst.has_value());
  CHECK(capped.catalyst_estimate > 1000);
  CHECK(capped.agree);
  CHECK(capped.value_det == capped.value_theorem_a);
  CHECK(capped.value_det == capped.value_richman);
}
