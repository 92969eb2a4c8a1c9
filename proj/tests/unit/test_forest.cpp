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
#include "treeminor/forest.hpp"

using namespace treeminor;
using testing_util::code_of;
using testing_util::path;
using testing_util::star_at;
using testing_util::subset;

namespace {

Forest kept(const Tree& t, std::initializer_list<Edge> edges) {
  std::vector<int> idx;
  for (const Edge& e : edges) idx.push_back(*t.edge_index(e.u, e.v));
  return Forest::from_kept_edges(t, idx);
}

}  // namespace

TEST_CASE("classify_forest on P3") {
  const Tree p3 = path(3);
  const SubsetS s = subset({1, 3}, 3);
  CHECK(classify_forest(kept(p3, {{1, 2}}), s) == ForestClass::kSRooted);
  const Forest empty = kept(p3, {});
  CHECK(classify_forest(empty, s) == ForestClass::kSStarRooted);
  REQUIRE(floating_component(empty, s));
  CHECK(empty.component_vertices(*floating_component(empty, s)) == std::vector<Vertex>{2});
  CHECK(classify_forest(kept(p3, {{1, 2}, {2, 3}}), s) == ForestClass::kOther);
  CHECK(forest_class_name(ForestClass::kSStarRooted) == "S_STAR_ROOTED");
}

TEST_CASE("component ids follow the smallest vertex") {
  const Tree t = Tree::from_prufer({4, 4, 5});
  const Forest f = kept(t, {{4, 5}, {2, 4}});
  CHECK(f.component_count() == 3);
  CHECK(f.component_of(1) == 0);
  CHECK(f.component_of(2) == 1);
  CHECK(f.component_of(5) == 1);
  CHECK(f.component_of(3) == 2);
  CHECK(f.components() == std::vector<std::vector<Vertex>>{{1}, {2, 4, 5}, {3}});
}

TEST_CASE("enumerate_s_rooted examples") {
  const auto p3 = enumerate_s_rooted(path(3), subset({1, 3}, 3));
  REQUIRE(p3.size() == 2);
  CHECK(p3[0].kept_edge_list(path(3)) == std::vector<Edge>{{1, 2}});
  CHECK(p3[1].kept_edge_list(path(3)) == std::vector<Edge>{{2, 3}});
  const Tree star = star_at(4, 4);
  const auto spokes = enumerate_s_rooted(star, subset({1, 2, 3}, 4));
  CHECK(spokes.size() == 3);
  for (const auto& f : spokes) CHECK(f.kept_edges().size() == 1);
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const Tree t = random_tree(8, seed);
    const auto all = enumerate_s_rooted(t, SubsetS::full(8));
    REQUIRE(all.size() == 1);
    CHECK(all[0].kept_edges().empty());
  }
}

TEST_CASE("enumerate_s_star_rooted examples") {
  const auto p3 = enumerate_s_star_rooted(path(3), subset({1, 3}, 3));
  REQUIRE(p3.size() == 1);
  CHECK(p3[0].kept_edges().empty());
  CHECK(enumerate_s_star_rooted(random_tree(7, 1), SubsetS::full(7)).empty());
  const Tree p4 = path(4);
  const auto f = enumerate_s_star_rooted(p4, subset({1, 4}, 4));
  REQUIRE(f.size() == 3);
  CHECK(f[0].kept_edge_list(p4) == std::vector<Edge>{{1, 2}});
  CHECK(f[1].kept_edge_list(p4) == std::vector<Edge>{{2, 3}});
  CHECK(f[2].kept_edge_list(p4) == std::vector<Edge>{{3, 4}});
}

TEST_CASE("boundary_degree examples") {
  const Tree p3 = path(3);
  const Forest empty = kept(p3, {});
  CHECK(boundary_degree(p3, empty, empty.component_of(2)) == 2);
  const Tree star = star_at(4, 4);
  const Forest none = kept(star, {});
  CHECK(boundary_degree(star, none, none.component_of(4)) == 3);
  const Tree t = random_tree(10, 77);
  const Forest singletons = Forest::from_kept_edges(t, {});
  for (Vertex v = 1; v <= 10; ++v) {
    CHECK(boundary_degree(t, singletons, singletons.component_of(v)) == t.degree(v));
  }
  CHECK(code_of([&] { boundary_degree(t, singletons, 10); }) == ErrorCode::kInvalidArgument);
}

TEST_CASE("count_s_rooted_dp examples") {
  CHECK(count_s_rooted_dp(path(3), subset({1, 3}, 3)) == 2);
  CHECK(count_s_rooted_dp(path(4), subset({1, 4}, 4)) == 3);
  CHECK(count_s_rooted_dp(random_tree(30, 5), SubsetS::full(30)) == 1);
}

TEST_CASE("composite_weight_sum examples") {
  CHECK(composite_weight_sum(path(3), subset({1, 3}, 3), WeightShape::kTheoremA) == -2);
  CHECK(composite_weight_sum(path(3), subset({1, 3}, 3), WeightShape::kRichman) == 0);
  CHECK(composite_weight_sum(random_tree(6, 3), SubsetS::full(6), WeightShape::kTheoremA) == 0);
  CHECK(composite_weight_sum(random_tree(6, 3), SubsetS::full(6), WeightShape::kRichman) == 0);
}

TEST_CASE("enumeration matches the brute-force edge-subset oracle, n <= 6") {
  for (int n = 2; n <= 6; ++n) {
    for_each_labeled_tree(n, [&](const Tree& t) {
      for_each_subset(n, 1, [&](const SubsetS& s) {
        for (int kind = 0; kind < 2; ++kind) {
          const auto naive = oracle::naive_forests(t, s.members(), kind);
          const auto got = kind == 0 ? enumerate_s_rooted(t, s) : enumerate_s_star_rooted(t, s);
          REQUIRE(naive.size() == got.size());
          for (std::size_t i = 0; i < got.size(); ++i) {
            CHECK(got[i].kept_edges() == naive[i].kept);
            CHECK(classify_forest(got[i], s) ==
                  (kind == 0 ? ForestClass::kSRooted : ForestClass::kSStarRooted));
            if (kind == 1) {
              CHECK(boundary_degree(t, got[i], *floating_component(got[i], s)) ==
                    naive[i].floating_bdeg);
            }
          }
        }
      });
    });
  }
}

TEST_CASE("DP count equals enumeration for all trees n <= 7") {
  for (int n = 2; n <= 7; ++n) {
    for_each_labeled_tree(n, [&](const Tree& t) {
      for_each_subset(n, 1, [&](const SubsetS& s) {
        CHECK(count_s_rooted_dp(t, s) == BigInt(enumerate_s_rooted(t, s).size()));
      });
    });
  }
}

TEST_CASE("DP scales far past enumeration range") {
  const Tree p = path(200);
  // On a path with S at both ends every cut position works once.
  CHECK(count_s_rooted_dp(p, subset({1, 200}, 200)) == 199);
  const Tree star = star_at(101, 101);
  std::vector<int> leaves;
  for (int v = 1; v <= 100; ++v) leaves.push_back(v);
  CHECK(count_s_rooted_dp(star, subset(leaves, 101)) == 100);
}

TEST_CASE("(n - m) kappa equals the summed boundary degree, n <= 6") {
  for (int n = 2; n <= 6; ++n) {
    for_each_labeled_tree(n, [&](const Tree& t) {
      for_each_subset(n, 1, [&](const SubsetS& s) {
        long long bdeg = 0;
        for (const auto& f : enumerate_s_star_rooted(t, s))
          bdeg += boundary_degree(t, f, *floating_component(f, s));
        CHECK(BigInt(n - s.size()) * count_s_rooted_dp(t, s) == bdeg);
      });
    });
  }
}

TEST_CASE("edge-removal map is a bijection, n <= 6") {
  for (int n = 2; n <= 6; ++n) {
    for_each_labeled_tree(n, [&](const Tree& t) {
      for_each_subset(n, 1, [&](const SubsetS& s) {
        const EdgeRemovalAudit a = audit_edge_removal(t, s);
        CHECK(a.ok());
        CHECK(a.source_size == (n - s.size()) * enumerate_s_rooted(t, s).size());
      });
    });
  }
}
