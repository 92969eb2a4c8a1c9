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

#include "treeminor/tree.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <deque>
#include <numeric>
#include <queue>
#include <sstream>

#include "treeminor/errors.hpp"

namespace treeminor {

namespace {

class DisjointSets {
 public:
  explicit DisjointSets(int n) : parent_(n + 1) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }
  int find(int x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent_[b] = a;
    return true;
  }

 private:
  std::vector<int> parent_;
};

std::string trim(std::string_view s) {
  auto is_space = [](char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\n'; };
  std::size_t b = 0, e = s.size();
  while (b < e && is_space(s[b])) ++b;
  while (e > b && is_space(s[e - 1])) --e;
  return std::string(s.substr(b, e - b));
}

long long parse_integer(std::string_view token) {
  long long value = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || ptr != token.data() + token.size()) {
    throw Error(ErrorCode::kParseError, "not an integer: '" + std::string(token) + "'");
  }
  return value;
}

}  // namespace

Tree::Tree(int n, std::vector<Edge> edges)
    : n_(n), edges_(std::move(edges)), adjacency_(n + 1) {
  std::sort(edges_.begin(), edges_.end());
  for (const Edge& e : edges_) {
    adjacency_[e.u].push_back(e.v);
    adjacency_[e.v].push_back(e.u);
  }
  for (auto& list : adjacency_) std::sort(list.begin(), list.end());
}

Tree Tree::from_edge_list(int n, std::span<const Edge> edges) {
  if (n < 1) throw Error(ErrorCode::kNotATree, "a tree needs at least one vertex");
  std::vector<Edge> normalized;
  normalized.reserve(edges.size());
  for (const Edge& e : edges) {
    if (e.u < 1 || e.u > n || e.v < 1 || e.v > n) {
      throw Error(ErrorCode::kVertexOutOfRange,
                  "edge {" + std::to_string(e.u) + "," + std::to_string(e.v) +
                      "} outside 1.." + std::to_string(n));
    }
    if (e.u == e.v) {
      throw Error(ErrorCode::kNotATree, "loop at vertex " + std::to_string(e.u));
    }
    normalized.push_back({std::min(e.u, e.v), std::max(e.u, e.v)});
  }
  if (static_cast<int>(normalized.size()) != n - 1) {
    throw Error(ErrorCode::kNotATree, "expected " + std::to_string(n - 1) +
                                          " edges, got " +
                                          std::to_string(normalized.size()));
  }
  DisjointSets sets(n);
  for (const Edge& e : normalized) {
    if (!sets.unite(e.u, e.v)) {
      throw Error(ErrorCode::kNotATree, "edge {" + std::to_string(e.u) + "," +
                                            std::to_string(e.v) + "} closes a cycle");
    }
  }
  // n - 1 edges without a cycle on n vertices is connected.
  return Tree(n, std::move(normalized));
}

Tree Tree::from_prufer(std::span<const int> sequence) {
  const int n = static_cast<int>(sequence.size()) + 2;
  std::vector<int> remaining(n + 1, 1);
  for (int x : sequence) {
    if (x < 1 || x > n) {
      throw Error(ErrorCode::kValueOutOfRange,
                  "Prufer entry " + std::to_string(x) + " outside 1.." + std::to_string(n));
    }
    ++remaining[x];
  }
  std::priority_queue<int, std::vector<int>, std::greater<>> leaves;
  for (int v = 1; v <= n; ++v) {
    if (remaining[v] == 1) leaves.push(v);
  }
  std::vector<Edge> edges;
  edges.reserve(n - 1);
  for (int x : sequence) {
    const int leaf = leaves.top();
    leaves.pop();
    edges.push_back({std::min(leaf, x), std::max(leaf, x)});
    if (--remaining[x] == 1) leaves.push(x);
  }
  const int a = leaves.top();
  leaves.pop();
  const int b = leaves.top();
  edges.push_back({std::min(a, b), std::max(a, b)});
  return Tree(n, std::move(edges));
}

std::optional<int> Tree::edge_index(Vertex a, Vertex b) const {
  const Edge key{std::min(a, b), std::max(a, b)};
  auto it = std::lower_bound(edges_.begin(), edges_.end(), key);
  if (it == edges_.end() || *it != key) return std::nullopt;
  return static_cast<int>(it - edges_.begin());
}

std::vector<int> to_prufer(const Tree& tree) {
  const int n = tree.vertex_count();
  if (n <= 2) return {};
  std::vector<int> degree(n + 1);
  std::priority_queue<int, std::vector<int>, std::greater<>> leaves;
  for (int v = 1; v <= n; ++v) {
    degree[v] = tree.degree(v);
    if (degree[v] == 1) leaves.push(v);
  }
  std::vector<bool> removed(n + 1, false);
  std::vector<int> out;
  out.reserve(n - 2);
  while (static_cast<int>(out.size()) < n - 2) {
    const int leaf = leaves.top();
    leaves.pop();
    removed[leaf] = true;
    for (Vertex w : tree.neighbors(leaf)) {
      if (removed[w]) continue;
      out.push_back(w);
      if (--degree[w] == 1) leaves.push(w);
      break;
    }
  }
  return out;
}

SubsetS SubsetS::from_members(std::vector<Vertex> members, int n) {
  if (members.empty()) {
    throw Error(ErrorCode::kSubsetTooSmall, "subset must not be empty");
  }
  std::sort(members.begin(), members.end());
  for (std::size_t i = 0; i < members.size(); ++i) {
    if (members[i] < 1 || members[i] > n) {
      throw Error(ErrorCode::kVertexOutOfRange,
                  "subset member " + std::to_string(members[i]) + " outside 1.." +
                      std::to_string(n));
    }
    if (i > 0 && members[i] == members[i - 1]) {
      throw Error(ErrorCode::kInvalidArgument,
                  "duplicate subset member " + std::to_string(members[i]));
    }
  }
  SubsetS out;
  out.n_ = n;
  out.members_ = std::move(members);
  out.position_.assign(n + 1, -1);
  for (std::size_t i = 0; i < out.members_.size(); ++i) {
    out.position_[out.members_[i]] = static_cast<int>(i);
  }
  return out;
}

SubsetS SubsetS::full(int n) {
  std::vector<Vertex> all(n);
  std::iota(all.begin(), all.end(), 1);
  return from_members(std::move(all), n);
}

TreeMetric::TreeMetric(const Tree& tree)
    : n_(tree.vertex_count()),
      dist_(static_cast<std::size_t>(n_) * n_, 0),
      next_(static_cast<std::size_t>(n_) * n_, 0) {
  std::vector<Vertex> queue(n_);
  std::vector<bool> seen(n_ + 1);
  for (Vertex source = 1; source <= n_; ++source) {
    std::fill(seen.begin(), seen.end(), false);
    std::size_t head = 0, tail = 0;
    queue[tail++] = source;
    seen[source] = true;
    next_[index(source, source)] = source;
    while (head < tail) {
      const Vertex x = queue[head++];
      for (Vertex y : tree.neighbors(x)) {
        if (seen[y]) continue;
        seen[y] = true;
        dist_[index(source, y)] = dist_[index(source, x)] + 1;
        next_[index(source, y)] = (x == source) ? y : next_[index(source, x)];
        queue[tail++] = y;
      }
    }
  }
}

std::vector<Vertex> TreeMetric::path(Vertex a, Vertex b) const {
  std::vector<Vertex> out{a};
  while (a != b) {
    a = next_hop(a, b);
    out.push_back(a);
  }
  return out;
}

std::vector<Arc> TreeMetric::path_arcs(Vertex a, Vertex b) const {
  std::vector<Arc> out;
  out.reserve(distance(a, b));
  while (a != b) {
    const Vertex step = next_hop(a, b);
    out.push_back({a, step});
    a = step;
  }
  return out;
}

DistMatrix distance_matrix(const Tree& tree) {
  const int n = tree.vertex_count();
  DistMatrix out(n);
  std::vector<int> dist(n + 1);
  std::deque<Vertex> queue;
  for (Vertex source = 1; source <= n; ++source) {
    std::fill(dist.begin(), dist.end(), -1);
    dist[source] = 0;
    queue.push_back(source);
    while (!queue.empty()) {
      const Vertex x = queue.front();
      queue.pop_front();
      for (Vertex y : tree.neighbors(x)) {
        if (dist[y] >= 0) continue;
        dist[y] = dist[x] + 1;
        queue.push_back(y);
      }
    }
    for (Vertex v = 1; v <= n; ++v) out(source - 1, v - 1) = dist[v];
  }
  return out;
}

DistMatrix principal_submatrix(const DistMatrix& d, const SubsetS& s) {
  const auto& members = s.members();
  if (members.back() > static_cast<int>(d.dim())) {
    throw Error(ErrorCode::kVertexOutOfRange, "subset exceeds matrix dimension");
  }
  DistMatrix out(members.size());
  for (std::size_t r = 0; r < members.size(); ++r) {
    for (std::size_t c = 0; c < members.size(); ++c) {
      out(r, c) = d(members[r] - 1, members[c] - 1);
    }
  }
  return out;
}

bool induces_subtree(const Tree& tree, const SubsetS& s) {
  int inside = 0;
  DisjointSets sets(tree.vertex_count());
  int merges = 0;
  for (const Edge& e : tree.edges()) {
    if (s.contains(e.u) && s.contains(e.v)) {
      ++inside;
      if (sets.unite(e.u, e.v)) ++merges;
    }
  }
  // Induced subgraphs of a tree are acyclic, so connected iff m - 1 edges.
  return inside == s.size() - 1 && merges == inside;
}

std::vector<Vertex> centroids(const Tree& tree) {
  const int n = tree.vertex_count();
  std::vector<int> parent(n + 1, 0), order;
  order.reserve(n);
  order.push_back(1);
  parent[1] = -1;
  for (std::size_t i = 0; i < order.size(); ++i) {
    for (Vertex y : tree.neighbors(order[i])) {
      if (y == parent[order[i]]) continue;
      parent[y] = order[i];
      order.push_back(y);
    }
  }
  std::vector<int> size(n + 1, 1), heaviest(n + 1, 0);
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    const Vertex v = *it;
    if (parent[v] > 0) {
      size[parent[v]] += size[v];
      heaviest[parent[v]] = std::max(heaviest[parent[v]], size[v]);
    }
  }
  int best = n + 1;
  std::vector<Vertex> out;
  for (Vertex v = 1; v <= n; ++v) {
    const int worst = std::max(heaviest[v], n - size[v]);
    if (worst < best) {
      best = worst;
      out.clear();
    }
    if (worst == best) out.push_back(v);
  }
  return out;
}

Tree parse_tree_text(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string raw;
  std::optional<int> n;
  std::vector<Edge> edges;
  int line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    const std::string line = trim(raw);
    if (line.empty() || line.front() == '#') continue;
    std::istringstream fields(line);
    std::vector<std::string> tokens;
    for (std::string tok; fields >> tok;) tokens.push_back(tok);
    const std::string where = "line " + std::to_string(line_no) + ": ";
    if (!n) {
      if (tokens.size() != 1) {
        throw Error(ErrorCode::kParseError, where + "expected the vertex count");
      }
      n = static_cast<int>(parse_integer(tokens[0]));
      continue;
    }
    if (tokens.size() != 2) {
      throw Error(ErrorCode::kParseError, where + "expected \"u v\"");
    }
    edges.push_back({static_cast<int>(parse_integer(tokens[0])),
                     static_cast<int>(parse_integer(tokens[1]))});
  }
  if (!n) throw Error(ErrorCode::kParseError, "missing vertex count");
  return Tree::from_edge_list(*n, edges);
}

std::string format_tree_text(const Tree& tree) {
  std::string out = std::to_string(tree.vertex_count()) + "\n";
  for (const Edge& e : tree.edges()) {
    out += std::to_string(e.u) + " " + std::to_string(e.v) + "\n";
  }
  return out;
}

std::vector<int> parse_int_list(std::string_view text) {
  std::vector<int> out;
  const std::string all = trim(text);
  if (all.empty()) return out;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = all.find(',', start);
    const std::string token =
        trim(std::string_view(all).substr(start, comma == std::string::npos
                                                     ? std::string::npos
                                                     : comma - start));
    out.push_back(static_cast<int>(parse_integer(token)));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

std::uint64_t mix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

std::uint64_t SplitMix64::next() {
  state_ += 0x9E3779B97F4A7C15ULL;
  return mix64(state_);
}

std::uint64_t SplitMix64::below(std::uint64_t bound) {
  // Reject the top partial block so every residue is equally likely.
  const std::uint64_t limit = -bound % bound;
  while (true) {
    const std::uint64_t x = next();
    if (x >= limit) return x % bound;
  }
}

std::uint64_t trial_seed(std::uint64_t master, std::uint64_t trial) {
  return mix64(master ^ mix64(trial + 1));
}

Tree random_tree(int n, std::uint64_t seed) {
  if (n < 1) throw Error(ErrorCode::kInvalidArgument, "random_tree needs n >= 1");
  if (n == 1) return Tree::from_edge_list(1, {});
  SplitMix64 rng(seed);
  std::vector<int> sequence(n - 2);
  for (int& x : sequence) x = rng.between(1, n);
  return Tree::from_prufer(sequence);
}

SubsetS random_subset(int n, int min_size, SplitMix64& rng) {
  const int size = rng.between(min_size, n);
  std::vector<Vertex> pool(n);
  std::iota(pool.begin(), pool.end(), 1);
  for (int i = 0; i < size; ++i) {
    const int j = rng.between(i, n - 1);
    std::swap(pool[i], pool[j]);
  }
  pool.resize(size);
  return SubsetS::from_members(std::move(pool), n);
}

PendantExtension random_pendant_extension(int base_size, int pendant_count,
                                          std::uint64_t seed) {
  SplitMix64 rng(seed);
  const int n = base_size + pendant_count;
  const Tree base = random_tree(base_size, rng.next());
  std::vector<Edge> edges(base.edges().begin(), base.edges().end());
  for (Vertex v = base_size + 1; v <= n; ++v) {
    edges.push_back({rng.between(1, v - 1), v});
  }
  std::vector<Vertex> relabel(n + 1);
  std::iota(relabel.begin(), relabel.end(), 0);
  for (int i = n; i >= 2; --i) std::swap(relabel[i], relabel[rng.between(1, i)]);
  for (Edge& e : edges) e = {relabel[e.u], relabel[e.v]};
  std::vector<Vertex> members;
  for (Vertex v = 1; v <= base_size; ++v) members.push_back(relabel[v]);
  return {Tree::from_edge_list(n, edges), SubsetS::from_members(members, n)};
}

void for_each_labeled_tree(int n, const std::function<void(const Tree&)>& visit) {
  if (n < 1) return;
  if (n <= 2) {
    visit(n == 1 ? Tree::from_edge_list(1, {}) : Tree::from_prufer({}));
    return;
  }
  std::vector<int> sequence(n - 2, 1);
  while (true) {
    visit(Tree::from_prufer(sequence));
    int pos = n - 3;
    while (pos >= 0 && sequence[pos] == n) sequence[pos--] = 1;
    if (pos < 0) return;
    ++sequence[pos];
  }
}

void for_each_subset(int n, int min_size,
                     const std::function<void(const SubsetS&)>& visit) {
  for (std::uint32_t mask = 1; mask < (1U << n); ++mask) {
    if (std::popcount(mask) < min_size) continue;
    std::vector<Vertex> members;
    for (int v = 1; v <= n; ++v) {
      if (mask & (1U << (v - 1))) members.push_back(v);
    }
    visit(SubsetS::from_members(std::move(members), n));
  }
}

}  // namespace treeminor
