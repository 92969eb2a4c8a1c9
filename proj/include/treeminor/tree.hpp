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

#ifndef TREEMINOR_TREE_HPP
#define TREEMINOR_TREE_HPP

#include <compare>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "treeminor/bigint.hpp"

namespace treeminor {

// Vertices are 1-based everywhere in the public interface.
using Vertex = int;

// Undirected tree edge, normalized so that u < v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

// Oriented arc (tail -> head) supported on a tree edge.
struct Arc {
  Vertex tail = 0;
  Vertex head = 0;
  Arc reversed() const { return {head, tail}; }
  friend auto operator<=>(const Arc&, const Arc&) = default;
};

// Labeled tree on vertices 1..n. Immutable once constructed; every
// constructor validates that the edge list really is a spanning tree.
class Tree {
 public:
  // Throws NotATree (wrong count, cycle, disconnected, loop, duplicate) or
  // VertexOutOfRange.
  static Tree from_edge_list(int n, std::span<const Edge> edges);
  static Tree from_edge_list(int n, std::initializer_list<Edge> edges) {
    return from_edge_list(n, std::span<const Edge>(edges.begin(), edges.size()));
  }

  // Decodes a Prufer sequence of length n-2 over 1..n. Throws
  // ValueOutOfRange.
  static Tree from_prufer(std::span<const int> sequence);
  static Tree from_prufer(std::initializer_list<int> sequence) {
    return from_prufer(std::span<const int>(sequence.begin(), sequence.size()));
  }

  int vertex_count() const noexcept { return n_; }
  // Sorted by (u, v); edge indices below refer to this order.
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  const Edge& edge(int index) const { return edges_[index]; }
  // Sorted neighbor list.
  const std::vector<Vertex>& neighbors(Vertex v) const { return adjacency_[v]; }
  int degree(Vertex v) const { return static_cast<int>(adjacency_[v].size()); }
  // Index of edge {a, b} in edges(), if present.
  std::optional<int> edge_index(Vertex a, Vertex b) const;
  bool has_edge(Vertex a, Vertex b) const { return edge_index(a, b).has_value(); }

  friend bool operator==(const Tree& a, const Tree& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  Tree(int n, std::vector<Edge> edges);

  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<Vertex>> adjacency_;  // index 0 unused
};

std::vector<int> to_prufer(const Tree& tree);

// Strictly increasing vertex list. Construction accepts any nonempty subset;
// operations that need m >= 2 reject smaller subsets themselves.
class SubsetS {
 public:
  // Sorts, then rejects duplicates, out-of-range members and empty input.
  static SubsetS from_members(std::vector<Vertex> members, int n);
  static SubsetS full(int n);

  const std::vector<Vertex>& members() const noexcept { return members_; }
  int size() const noexcept { return static_cast<int>(members_.size()); }
  int universe() const noexcept { return n_; }
  bool contains(Vertex v) const { return position_[v] >= 0; }
  // Position of v in members(), or -1.
  int index_of(Vertex v) const { return position_[v]; }

  friend bool operator==(const SubsetS& a, const SubsetS& b) {
    return a.n_ == b.n_ && a.members_ == b.members_;
  }

 private:
  int n_ = 0;
  std::vector<Vertex> members_;
  std::vector<int> position_;  // index 0 unused
};

// All-pairs distances and next hops, computed by one BFS per vertex.
// Memory is O(n^2); intended for the enumeration routes.
class TreeMetric {
 public:
  explicit TreeMetric(const Tree& tree);

  int vertex_count() const noexcept { return n_; }
  int distance(Vertex a, Vertex b) const { return dist_[index(a, b)]; }
  // Neighbor of `from` on the path towards `to` (from != to).
  Vertex next_hop(Vertex from, Vertex to) const { return next_[index(from, to)]; }
  // Vertex sequence from a to b inclusive.
  std::vector<Vertex> path(Vertex a, Vertex b) const;
  // Oriented arcs of the path from a to b, in path order.
  std::vector<Arc> path_arcs(Vertex a, Vertex b) const;
  // True iff arc lies on the path from a to b with the path's orientation.
  bool arc_on_path(Arc arc, Vertex a, Vertex b) const {
    return distance(a, arc.tail) + 1 + distance(arc.head, b) == distance(a, b);
  }

 private:
  std::size_t index(Vertex a, Vertex b) const {
    return static_cast<std::size_t>(a - 1) * n_ + (b - 1);
  }
  int n_ = 0;
  std::vector<int> dist_;
  std::vector<Vertex> next_;
};

// d(i, j) for all pairs, one BFS per vertex.
DistMatrix distance_matrix(const Tree& tree);

// Rows and columns restricted to the members of s, in sorted order.
DistMatrix principal_submatrix(const DistMatrix& d, const SubsetS& s);

// True iff the induced subgraph on s is connected with m - 1 edges.
bool induces_subtree(const Tree& tree, const SubsetS& s);

// Vertices minimizing the largest component left after their removal.
std::vector<Vertex> centroids(const Tree& tree);

// --- Text format -----------------------------------------------------------
//
// Line 1: n. Each further line: "u v". Blank lines and '#' comments ignored.
Tree parse_tree_text(std::string_view text);
std::string format_tree_text(const Tree& tree);

// "4,4" style lists; empty string gives an empty list.
std::vector<int> parse_int_list(std::string_view text);

// --- Seeded generation -----------------------------------------------------
//
// SplitMix64 (Steele, Lea, Flood 2014): state += 0x9E3779B97F4A7C15, output is
// the standard 30/27/31 xor-shift-multiply finalizer. Bounded draws use
// rejection sampling so results are identical on every platform.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}
  std::uint64_t next();
  // Uniform in [0, bound), bound > 0.
  std::uint64_t below(std::uint64_t bound);
  // Uniform in [lo, hi].
  int between(int lo, int hi) {
    return lo + static_cast<int>(below(static_cast<std::uint64_t>(hi - lo) + 1));
  }

 private:
  std::uint64_t state_;
};

// Standard SplitMix64 finalizer applied to a single word.
std::uint64_t mix64(std::uint64_t x);

// Sub-seed of trial t under a master seed: mix64(master ^ mix64(t + 1)).
// Depends only on (master, t), never on execution order.
std::uint64_t trial_seed(std::uint64_t master, std::uint64_t trial);

// Uniform Prufer sequence from SplitMix64(seed), decoded. n = 1 gives the
// single-vertex tree.
Tree random_tree(int n, std::uint64_t seed);

// Uniform size in [min_size, n], then a uniform subset of that size.
SubsetS random_subset(int n, int min_size, SplitMix64& rng);

// A tree in which `base_size` vertices induce a subtree, grown by attaching
// `pendant_count` extra vertices one at a time to uniformly chosen existing
// vertices, then relabeled by a uniform permutation.
struct PendantExtension {
  Tree tree;
  SubsetS base;
};
PendantExtension random_pendant_extension(int base_size, int pendant_count,
                                          std::uint64_t seed);

// Calls visit on every labeled tree on n vertices (n^(n-2) of them for
// n >= 2), in lexicographic Prufer order.
void for_each_labeled_tree(int n, const std::function<void(const Tree&)>& visit);

// Calls visit on every subset of [n] with at least min_size members, in
// increasing bitmask order.
void for_each_subset(int n, int min_size,
                     const std::function<void(const SubsetS&)>& visit);

}  // namespace treeminor

#endif  // TREEMINOR_TREE_HPP
