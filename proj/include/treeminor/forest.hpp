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

#ifndef TREEMINOR_FOREST_HPP
#define TREEMINOR_FOREST_HPP

#include <optional>
#include <string_view>
#include <vector>

#include "treeminor/bigint.hpp"
#include "treeminor/tree.hpp"

namespace treeminor {

enum class ForestClass { kSRooted, kSStarRooted, kOther };

std::string_view forest_class_name(ForestClass c);

// Spanning forest of a tree given by the subset of tree edges it keeps.
// Component ids are assigned in increasing order of each component's
// smallest vertex, so component 0 always contains vertex 1.
class Forest {
 public:
  // kept_edges are indices into tree.edges(); sorted and deduplicated here.
  static Forest from_kept_edges(const Tree& tree, std::vector<int> kept_edges);
  // Forest whose kept edges are the tree edges NOT listed in removed_edges.
  static Forest complement_of(const Tree& tree, const std::vector<int>& removed_edges);

  const std::vector<int>& kept_edges() const noexcept { return kept_; }
  std::vector<Edge> kept_edge_list(const Tree& tree) const;
  int component_count() const noexcept { return component_count_; }
  int component_of(Vertex v) const { return component_of_[v]; }
  std::vector<std::vector<Vertex>> components() const;
  std::vector<Vertex> component_vertices(int comp) const;

  friend bool operator==(const Forest& a, const Forest& b) { return a.kept_ == b.kept_; }
  friend auto operator<=>(const Forest& a, const Forest& b) { return a.kept_ <=> b.kept_; }

 private:
  std::vector<int> kept_;
  std::vector<int> component_of_;  // index 0 unused
  int component_count_ = 0;
};

ForestClass classify_forest(const Forest& forest, const SubsetS& s);

// The unique component disjoint from s, when the forest is (S,*)-rooted.
std::optional<int> floating_component(const Forest& forest, const SubsetS& s);

// Number of vertices outside `comp` adjacent in the tree to a vertex of comp.
int boundary_degree(const Tree& tree, const Forest& forest, int comp);

// All S-rooted spanning forests (n - m kept edges), lexicographic in the
// kept edge indices.
std::vector<Forest> enumerate_s_rooted(const Tree& tree, const SubsetS& s);

// All (S,*)-rooted spanning forests (n - m - 1 kept edges), lexicographic.
// Empty when m = n.
std::vector<Forest> enumerate_s_star_rooted(const Tree& tree, const SubsetS& s);

// kappa(T;S) = number of S-rooted forests, by a linear-time tree DP.
BigInt count_s_rooted_dp(const Tree& tree, const SubsetS& s);

enum class WeightShape {
  kTheoremA,  // (b - 1)(b - 4)
  kRichman,   // (b - 2)^2
};

// Sum over all (S,*)-rooted forests of the chosen polynomial in the boundary
// degree of the floating component.
BigInt composite_weight_sum(const Tree& tree, const SubsetS& s, WeightShape shape);

// Explicit check of the map (F, e) -> (F \ {e}, e) from
//   {(F, e) : F S-rooted, e in F}
// to
//   {(F, e) : F (S,*)-rooted, e adjacent to the floating component}.
struct EdgeRemovalAudit {
  std::size_t source_size = 0;        // (n - m) * kappa
  std::size_t target_size = 0;        // sum of bdeg over (S,*)-rooted forests
  bool lands_in_target = true;        // every image is a target pair
  bool injective = true;
  bool surjective = true;
  bool inverse_round_trips = true;    // (F u {e}, e) recovers the source
  bool ok() const {
    return lands_in_target && injective && surjective && inverse_round_trips &&
           source_size == target_size;
  }
};
EdgeRemovalAudit audit_edge_removal(const Tree& tree, const SubsetS& s);

}  // namespace treeminor

#endif  // TREEMINOR_FOREST_HPP
