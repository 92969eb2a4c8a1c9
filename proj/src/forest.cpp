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

#include "treeminor/forest.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <utility>

#include "treeminor/errors.hpp"

namespace treeminor {

namespace {

// Union-find with undo and a per-root count of S-members, used to prune
// any partial edge set that already joins two S-vertices.
class RollbackSets {
 public:
  RollbackSets(int n, const SubsetS& s) : parent_(n + 1), size_(n + 1, 1), s_count_(n + 1, 0) {
    std::iota(parent_.begin(), parent_.end(), 0);
    for (Vertex v : s.members()) s_count_[v] = 1;
  }

  int find(int x) const {
    while (parent_[x] != x) x = parent_[x];
    return x;
  }

  // Joins the components of a and b unless that would put two S-vertices
  // together. Returns whether a join was recorded.
  bool try_unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b || s_count_[a] + s_count_[b] > 1) return false;
    if (size_[a] < size_[b]) std::swap(a, b);
    parent_[b] = a;
    size_[a] += size_[b];
    s_count_[a] += s_count_[b];
    history_.push_back(b);
    return true;
  }

  void undo() {
    const int b = history_.back();
    history_.pop_back();
    const int a = parent_[b];
    size_[a] -= size_[b];
    s_count_[a] -= s_count_[b];
    parent_[b] = b;
  }

 private:
  std::vector<int> parent_, size_, s_count_;
  std::vector<int> history_;
};

// Enumerates every `need`-subset of the tree's edges whose components each
// hold at most one S-vertex, in lexicographic order of edge indices.
std::vector<Forest> enumerate_collision_free(const Tree& tree, const SubsetS& s, int need) {
  std::vector<Forest> out;
  if (need < 0) return out;
  const int edge_count = static_cast<int>(tree.edges().size());
  RollbackSets sets(tree.vertex_count(), s);
  std::vector<int> kept;
  kept.reserve(need);
  auto search = [&](auto&& self, int next) -> void {
    if (static_cast<int>(kept.size()) == need) {
      out.push_back(Forest::from_kept_edges(tree, kept));
      return;
    }
    const int missing = need - static_cast<int>(kept.size());
    for (int i = next; i <= edge_count - missing; ++i) {
      const Edge& e = tree.edge(i);
      if (!sets.try_unite(e.u, e.v)) continue;
      kept.push_back(i);
      self(self, i + 1);
      kept.pop_back();
      sets.undo();
    }
  };
  search(search, 0);
  return out;
}

}  // namespace

std::string_view forest_class_name(ForestClass c) {
  switch (c) {
    case ForestClass::kSRooted: return "S_ROOTED";
    case ForestClass::kSStarRooted: return "S_STAR_ROOTED";
    case ForestClass::kOther: return "OTHER";
  }
  return "OTHER";
}

Forest Forest::from_kept_edges(const Tree& tree, std::vector<int> kept_edges) {
  std::sort(kept_edges.begin(), kept_edges.end());
  kept_edges.erase(std::unique(kept_edges.begin(), kept_edges.end()), kept_edges.end());
  const int n = tree.vertex_count();
  const int edge_count = static_cast<int>(tree.edges().size());
  std::vector<std::vector<Vertex>> adjacency(n + 1);
  for (int index : kept_edges) {
    if (index < 0 || index >= edge_count) {
      throw Error(ErrorCode::kInvalidArgument, "edge index out of range");
    }
    const Edge& e = tree.edge(index);
    adjacency[e.u].push_back(e.v);
    adjacency[e.v].push_back(e.u);
  }
  Forest out;
  out.kept_ = std::move(kept_edges);
  out.component_of_.assign(n + 1, -1);
  std::vector<Vertex> stack;
  for (Vertex start = 1; start <= n; ++start) {
    if (out.component_of_[start] >= 0) continue;
    const int id = out.component_count_++;
    out.component_of_[start] = id;
    stack.push_back(start);
    while (!stack.empty()) {
      const Vertex x = stack.back();
      stack.pop_back();
      for (Vertex y : adjacency[x]) {
        if (out.component_of_[y] < 0) {
          out.component_of_[y] = id;
          stack.push_back(y);
        }
      }
    }
  }
  return out;
}

Forest Forest::complement_of(const Tree& tree, const std::vector<int>& removed_edges) {
  std::vector<bool> removed(tree.edges().size(), false);
  for (int index : removed_edges) removed.at(index) = true;
  std::vector<int> kept;
  for (int i = 0; i < static_cast<int>(removed.size()); ++i) {
    if (!removed[i]) kept.push_back(i);
  }
  return from_kept_edges(tree, std::move(kept));
}

std::vector<Edge> Forest::kept_edge_list(const Tree& tree) const {
  std::vector<Edge> out;
  out.reserve(kept_.size());
  for (int index : kept_) out.push_back(tree.edge(index));
  return out;
}

std::vector<std::vector<Vertex>> Forest::components() const {
  std::vector<std::vector<Vertex>> out(component_count_);
  for (Vertex v = 1; v < static_cast<int>(component_of_.size()); ++v) {
    out[component_of_[v]].push_back(v);
  }
  return out;
}

std::vector<Vertex> Forest::component_vertices(int comp) const {
  std::vector<Vertex> out;
  for (Vertex v = 1; v < static_cast<int>(component_of_.size()); ++v) {
    if (component_of_[v] == comp) out.push_back(v);
  }
  return out;
}

ForestClass classify_forest(const Forest& forest, const SubsetS& s) {
  const int m = s.size();
  const int k = forest.component_count();
  if (k != m && k != m + 1) return ForestClass::kOther;
  std::vector<int> hits(k, 0);
  for (Vertex v : s.members()) {
    if (++hits[forest.component_of(v)] > 1) return ForestClass::kOther;
  }
  return k == m ? ForestClass::kSRooted : ForestClass::kSStarRooted;
}

std::optional<int> floating_component(const Forest& forest, const SubsetS& s) {
  if (classify_forest(forest, s) != ForestClass::kSStarRooted) return std::nullopt;
  std::vector<bool> hit(forest.component_count(), false);
  for (Vertex v : s.members()) hit[forest.component_of(v)] = true;
  for (int c = 0; c < forest.component_count(); ++c) {
    if (!hit[c]) return c;
  }
  return std::nullopt;
}

int boundary_degree(const Tree& tree, const Forest& forest, int comp) {
  if (comp < 0 || comp >= forest.component_count()) {
    throw Error(ErrorCode::kInvalidArgument, "component index out of range");
  }
  std::set<Vertex> boundary;
  for (Vertex v = 1; v <= tree.vertex_count(); ++v) {
    if (forest.component_of(v) != comp) continue;
    for (Vertex w : tree.neighbors(v)) {
      if (forest.component_of(w) != comp) boundary.insert(w);
    }
  }
  return static_cast<int>(boundary.size());
}

std::vector<Forest> enumerate_s_rooted(const Tree& tree, const SubsetS& s) {
  return enumerate_collision_free(tree, s, tree.vertex_count() - s.size());
}

std::vector<Forest> enumerate_s_star_rooted(const Tree& tree, const SubsetS& s) {
  return enumerate_collision_free(tree, s, tree.vertex_count() - s.size() - 1);
}

BigInt count_s_rooted_dp(const Tree& tree, const SubsetS& s) {
  // Root at vertex 1. For each vertex v, over the edges inside v's subtree:
  //   without[v] = #ways where every closed-off component holds exactly one
  //                S-vertex and v's open component holds none,
  //   with[v]    = same, but v's open component holds exactly one.
  // An edge to a child is either cut (child's component must be closed with
  // one S-vertex) or kept (open components merge).
  const int n = tree.vertex_count();
  std::vector<int> parent(n + 1, 0), order;
  order.reserve(n);
  order.push_back(1);
  for (std::size_t i = 0; i < order.size(); ++i) {
    for (Vertex y : tree.neighbors(order[i])) {
      if (y == parent[order[i]]) continue;
      parent[y] = order[i];
      order.push_back(y);
    }
  }
  std::vector<BigInt> without(n + 1), with(n + 1);
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    const Vertex v = *it;
    BigInt w0 = s.contains(v) ? 0 : 1;
    BigInt w1 = s.contains(v) ? 1 : 0;
    for (Vertex c : tree.neighbors(v)) {
      if (c == parent[v]) continue;
      const BigInt cut = with[c];
      BigInt next0 = w0 * (cut + without[c]);
      BigInt next1 = w1 * (cut + without[c]) + w0 * with[c];
      w0 = std::move(next0);
      w1 = std::move(next1);
    }
    without[v] = std::move(w0);
    with[v] = std::move(w1);
  }
  return with[1];
}

BigInt composite_weight_sum(const Tree& tree, const SubsetS& s, WeightShape shape) {
  BigInt total = 0;
  for (const Forest& f : enumerate_s_star_rooted(tree, s)) {
    const long long b = boundary_degree(tree, f, *floating_component(f, s));
    total += shape == WeightShape::kTheoremA ? (b - 1) * (b - 4) : (b - 2) * (b - 2);
  }
  return total;
}

EdgeRemovalAudit audit_edge_removal(const Tree& tree, const SubsetS& s) {
  using Pair = std::pair<std::vector<int>, int>;
  EdgeRemovalAudit audit;

  std::set<Pair> source;
  std::set<Pair> images;
  for (const Forest& f : enumerate_s_rooted(tree, s)) {
    for (int e : f.kept_edges()) {
      source.insert({f.kept_edges(), e});
      ++audit.source_size;
      std::vector<int> smaller;
      std::copy_if(f.kept_edges().begin(), f.kept_edges().end(),
                   std::back_inserter(smaller), [e](int x) { return x != e; });
      const Forest g = Forest::from_kept_edges(tree, smaller);
      const auto floating = floating_component(g, s);
      const Edge& edge = tree.edge(e);
      if (!floating || ((g.component_of(edge.u) == *floating) ==
                        (g.component_of(edge.v) == *floating))) {
        audit.lands_in_target = false;
      }
      if (!images.insert({smaller, e}).second) audit.injective = false;
    }
  }

  std::set<Pair> target;
  for (const Forest& g : enumerate_s_star_rooted(tree, s)) {
    const int floating = *floating_component(g, s);
    for (int e = 0; e < static_cast<int>(tree.edges().size()); ++e) {
      const Edge& edge = tree.edge(e);
      const bool u_in = g.component_of(edge.u) == floating;
      const bool v_in = g.component_of(edge.v) == floating;
      if (u_in == v_in) continue;
      target.insert({g.kept_edges(), e});
      ++audit.target_size;
      std::vector<int> larger = g.kept_edges();
      larger.push_back(e);
      const Forest f = Forest::from_kept_edges(tree, larger);
      if (classify_forest(f, s) != ForestClass::kSRooted ||
          !source.count({f.kept_edges(), e})) {
        audit.inverse_round_trips = false;
      }
    }
  }
  audit.surjective = images == target;
  return audit;
}

}  // namespace treeminor
