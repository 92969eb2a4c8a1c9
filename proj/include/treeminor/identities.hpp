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

#ifndef TREEMINOR_IDENTITIES_HPP
#define TREEMINOR_IDENTITIES_HPP

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "treeminor/bigint.hpp"

namespace treeminor {

// Rooted tree on nodes 0..N-1 with root 0 (written *). Every non-root edge
// is oriented: ascending (child -> parent) or descending (parent -> child).
// Each node lists its children with all ascending ones first.
class PlaneRootedDirectedTree {
 public:
  static constexpr int kRoot = 0;

  // parent[0] is ignored. Throws InvalidArgument if parent does not describe
  // a tree rooted at 0, or if a child order is not a rearrangement of the
  // children or puts a descending child before an ascending one.
  static PlaneRootedDirectedTree from_parents(std::vector<int> parent,
                                              std::vector<bool> ascending,
                                              std::vector<std::vector<int>> child_order);
  // Ascending children by label, then descending children by label.
  static PlaneRootedDirectedTree with_canonical_order(std::vector<int> parent,
                                                      std::vector<bool> ascending);

  int node_count() const noexcept { return static_cast<int>(parent_.size()); }
  int parent(int v) const { return parent_[v]; }
  bool is_ascending(int v) const { return ascending_[v]; }
  const std::vector<int>& children(int v) const { return children_[v]; }
  int ascending_count(int v) const;
  // Whether tail -> head is one of the oriented edges.
  bool has_arc(int tail, int head) const;

 private:
  std::vector<int> parent_;
  std::vector<bool> ascending_;
  std::vector<std::vector<int>> children_;
};

// Nine vertices under the root: * -> {1, 2} descending; 1 has ascending 3, 4;
// 4 has ascending 8 and descending 7, 9; 2 has ascending 6 and descending 5.
PlaneRootedDirectedTree dfs_example_tree();

// Every plane rooted directed tree on node_count nodes (root included),
// labeled in preorder.
std::vector<PlaneRootedDirectedTree> all_plane_rooted_directed_trees(int node_count);

// Whether the root has both ascending and descending children.
bool root_is_mixed(const PlaneRootedDirectedTree& t);

struct MarkedWalk {
  std::vector<int> tokens;
  std::vector<bool> marked;
};

// DFS(x) = x DFS(y1) x ... x DFS(yk) x, with the x-token that follows the
// last ascending child marked (the first token when there is none). The
// root is never marked. 2N - 1 tokens.
MarkedWalk marked_dfs(const PlaneRootedDirectedTree& t);

// Marked vertices in walk order; read cyclically this is the mark cycle.
std::vector<int> mark_sequence(const MarkedWalk& w);

// "* 1 [3] 1 4 ..." with marked tokens in brackets.
std::string format_walk(const MarkedWalk& w);

// Reads the walk cyclically (last token identified with the first). True
// iff every step follows a tree edge and between each pair of cyclically
// consecutive marks exactly one step runs along an arc, all earlier steps
// go child -> parent and all later steps go parent -> child.
bool check_interlacing(const PlaneRootedDirectedTree& t, const MarkedWalk& w);

// Sum of signs over fixed-point-free permutations of [n]. Throws
// BudgetExceeded for n > 10, InvalidArgument for n < 1.
BigInt signed_derangement_sum(int n);

struct NetworkNode {
  enum class Kind { kSource, kSink, kStep };
  Kind kind = Kind::kSource;
  int a = 0;  // index, or first index of s(a, b)
  int b = 0;
  std::string name() const;
  friend auto operator<=>(const NetworkNode&, const NetworkNode&) = default;
};

// Sources, sinks and step nodes s(i, i+1), s(i+1, i) with arcs
//   source i -> s(i, i+1),  source i+1 -> s(i+1, i),
//   s(i, i+1) -> sink i+1,  s(i+1, i) -> sink i,
//   s(i, i+1) -> s(i+1, i+2),  s(i+2, i+1) -> s(i+1, i).
struct DerangementNetwork {
  int n = 0;
  std::vector<NetworkNode> nodes;
  std::vector<std::pair<int, int>> arcs;  // indices into nodes

  static DerangementNetwork build(int n);
  int source(int i) const;
  int sink(int i) const;
  bool is_acyclic() const;
};

struct PathFamily {
  std::vector<std::vector<int>> paths;  // paths[i-1] starts at source i
  std::vector<int> permutation;         // one-line, 1-based: source i ends at sink permutation[i-1]
  int sign = 1;
};

// Every family of source-to-sink paths with pairwise distinct sinks, ordered
// lexicographically by permutation. Throws InvalidArgument unless 2 <= n <= 7.
std::vector<PathFamily> derangement_network_paths(int n);

struct BinomialIdentity {
  BigInt lhs;  // sum_k C(n,k)(k-1)(n-k-1)
  BigInt rhs;  // 2^(n-2) n(n-1) - 2^n (n-1)
  bool pass = false;
};

// Compares 4 lhs with n(n-1)2^n - 2^(n+2)(n-1), then reports both sides
// unscaled.
BinomialIdentity binomial_identity_check(int n);

struct BeadCounts {
  BigInt r;           // bead sequences with one distinguished bead of each color
  BigInt l;           // neither distinguished bead is leftmost of its color
  BigInt complement;  // r minus l, counted directly
  bool formulas_hold = false;
};

// Builds the sets by brute force. Throws InvalidArgument unless 2 <= n <= 12.
BeadCounts bead_bijection_witness(int n);

struct IdentityRecord {
  std::string name;
  int parameter = 0;
  std::string lhs;
  std::string rhs;
  bool pass = false;
};

// check is one of derangements, network, binomial, beads, interlacing,
// dfs-example or all. For all, n is ignored and the default ranges run.
std::vector<IdentityRecord> run_identity_checks(std::string_view check, int n);

}  // namespace treeminor

#endif  // TREEMINOR_IDENTITIES_HPP
