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


#include "treeminor/identities.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>

#include "treeminor/errors.hpp"
#include "treeminor/linalg.hpp"

namespace treeminor {

PlaneRootedDirectedTree PlaneRootedDirectedTree::from_parents(
    std::vector<int> parent, std::vector<bool> ascending,
    std::vector<std::vector<int>> child_order) {
  const int n = static_cast<int>(parent.size());
  if (n < 1 || static_cast<int>(ascending.size()) != n ||
      static_cast<int>(child_order.size()) != n) {
    throw Error(ErrorCode::kInvalidArgument, "plane tree arrays disagree in size");
  }
  parent[kRoot] = -1;
  std::vector<std::vector<int>> expected(n);
  for (int v = 1; v < n; ++v) {
    if (parent[v] < 0 || parent[v] >= n || parent[v] == v) {
      throw Error(ErrorCode::kInvalidArgument, "bad parent for node " + std::to_string(v));
    }
    expected[parent[v]].push_back(v);
  }
  for (int v = 1; v < n; ++v) {
    int x = v;
    for (int steps = 0; x != kRoot; ++steps) {
      if (steps > n) throw Error(ErrorCode::kInvalidArgument, "parent array has a cycle");
      x = parent[x];
    }
  }
  for (int v = 0; v < n; ++v) {
    std::vector<int> sorted = child_order[v];
    std::sort(sorted.begin(), sorted.end());
    if (sorted != expected[v]) {
      throw Error(ErrorCode::kInvalidArgument,
                  "child order of node " + std::to_string(v) + " is not its child set");
    }
    bool seen_descending = false;
    for (int c : child_order[v]) {
      if (!ascending[c]) {
        seen_descending = true;
      } else if (seen_descending) {
        throw Error(ErrorCode::kInvalidArgument,
                    "descending child precedes ascending child at node " + std::to_string(v));
      }
    }
  }
  PlaneRootedDirectedTree t;
  t.parent_ = std::move(parent);
  t.ascending_ = std::move(ascending);
  t.ascending_[kRoot] = false;
  t.children_ = std::move(child_order);
  return t;
}

PlaneRootedDirectedTree PlaneRootedDirectedTree::with_canonical_order(
    std::vector<int> parent, std::vector<bool> ascending) {
  const int n = static_cast<int>(parent.size());
  std::vector<std::vector<int>> order(n);
  for (int pass = 0; pass < 2; ++pass) {
    for (int v = 1; v < n; ++v) {
      if (parent[v] < 0 || parent[v] >= n || v >= static_cast<int>(ascending.size())) continue;
      if (ascending[v] == (pass == 0)) order[parent[v]].push_back(v);
    }
  }
  return from_parents(std::move(parent), std::move(ascending), std::move(order));
}

int PlaneRootedDirectedTree::ascending_count(int v) const {
  return static_cast<int>(std::count_if(children_[v].begin(), children_[v].end(),
                                        [this](int c) { return ascending_[c]; }));
}

bool PlaneRootedDirectedTree::has_arc(int tail, int head) const {
  if (tail != kRoot && parent_[tail] == head) return ascending_[tail];
  if (head != kRoot && parent_[head] == tail) return !ascending_[head];
  return false;
}

PlaneRootedDirectedTree dfs_example_tree() {
  //                    *  1  2  3  4  5  6  7  8  9
  std::vector<int> parent{-1, 0, 0, 1, 1, 2, 2, 4, 4, 4};
  std::vector<bool> asc{false, false, false, true, true, false, true, false, true, false};
  return PlaneRootedDirectedTree::with_canonical_order(std::move(parent), std::move(asc));
}

std::vector<PlaneRootedDirectedTree> all_plane_rooted_directed_trees(int node_count) {
  if (node_count < 1) throw Error(ErrorCode::kInvalidArgument, "node_count must be >= 1");
  std::vector<PlaneRootedDirectedTree> out;
  const int edges = node_count - 1;
  std::vector<int> parent(node_count, -1);
  std::vector<std::vector<int>> children(node_count);

  // Plane shapes as balanced words: '(' opens a new child of the current
  // node, labels handed out in preorder.
  auto emit_orientations = [&]() {
    for (std::uint32_t mask = 0; mask < (1U << edges); ++mask) {
      std::vector<bool> asc(node_count, false);
      for (int v = 1; v < node_count; ++v) asc[v] = (mask >> (v - 1)) & 1U;
      bool admissible = true;
      for (int v = 0; v < node_count && admissible; ++v) {
        for (std::size_t k = 1; k < children[v].size(); ++k) {
          if (!asc[children[v][k - 1]] && asc[children[v][k]]) admissible = false;
        }
      }
      if (admissible) out.push_back(PlaneRootedDirectedTree::from_parents(parent, asc, children));
    }
  };
  std::vector<int> stack{0};
  int next_label = 1;
  auto rec = [&](auto&& self, int opened, int closed) -> void {
    if (closed == edges) {
      emit_orientations();
      return;
    }
    if (opened < edges) {
      const int v = next_label++;
      parent[v] = stack.back();
      children[stack.back()].push_back(v);
      stack.push_back(v);
      self(self, opened + 1, closed);
      stack.pop_back();
      children[parent[v]].pop_back();
      parent[v] = -1;
      --next_label;
    }
    if (closed < opened) {
      const int v = stack.back();
      stack.pop_back();
      self(self, opened, closed + 1);
      stack.push_back(v);
    }
  };
  rec(rec, 0, 0);
  return out;
}

bool root_is_mixed(const PlaneRootedDirectedTree& t) {
  const int asc = t.ascending_count(PlaneRootedDirectedTree::kRoot);
  return asc > 0 && asc < static_cast<int>(t.children(PlaneRootedDirectedTree::kRoot).size());
}

MarkedWalk marked_dfs(const PlaneRootedDirectedTree& t) {
  MarkedWalk w;
  auto visit = [&](auto&& self, int x) -> void {
    const int mark_at = x == PlaneRootedDirectedTree::kRoot ? -1 : t.ascending_count(x);
    w.tokens.push_back(x);
    w.marked.push_back(mark_at == 0);
    int k = 0;
    for (int child : t.children(x)) {
      self(self, child);
      ++k;
      w.tokens.push_back(x);
      w.marked.push_back(mark_at == k);
    }
  };
  visit(visit, PlaneRootedDirectedTree::kRoot);
  return w;
}

std::vector<int> mark_sequence(const MarkedWalk& w) {
  std::vector<int> out;
  for (std::size_t i = 0; i < w.tokens.size(); ++i) {
    if (w.marked[i]) out.push_back(w.tokens[i]);
  }
  return out;
}

std::string format_walk(const MarkedWalk& w) {
  std::ostringstream out;
  for (std::size_t i = 0; i < w.tokens.size(); ++i) {
    if (i) out << ' ';
    const std::string label =
        w.tokens[i] == PlaneRootedDirectedTree::kRoot ? "*" : std::to_string(w.tokens[i]);
    out << (w.marked[i] ? "[" + label + "]" : label);
  }
  return out.str();
}

bool check_interlacing(const PlaneRootedDirectedTree& t, const MarkedWalk& w) {
  const int n = t.node_count();
  const int length = static_cast<int>(w.tokens.size());
  if (length != 2 * n - 1 || w.marked.size() != w.tokens.size()) return false;
  if (w.tokens.front() != w.tokens.back()) return false;

  std::vector<int> mark_count(n, 0);
  std::vector<int> marks;
  for (int i = 0; i < length; ++i) {
    const int x = w.tokens[i];
    if (x < 0 || x >= n) return false;
    if (w.marked[i]) {
      ++mark_count[x];
      marks.push_back(i);
    }
  }
  if (mark_count[PlaneRootedDirectedTree::kRoot] != 0) return false;
  for (int v = 1; v < n; ++v) {
    if (mark_count[v] != 1) return false;
  }

  const int steps = length - 1;
  enum class Step { kUp, kDown };
  std::vector<Step> kind(steps);
  std::vector<bool> along_arc(steps);
  for (int i = 0; i < steps; ++i) {
    const int a = w.tokens[i], b = w.tokens[i + 1];
    if (a != PlaneRootedDirectedTree::kRoot && t.parent(a) == b) {
      kind[i] = Step::kUp;
    } else if (b != PlaneRootedDirectedTree::kRoot && t.parent(b) == a) {
      kind[i] = Step::kDown;
    } else {
      return false;
    }
    along_arc[i] = t.has_arc(a, b);
  }

  const int k = static_cast<int>(marks.size());
  for (int j = 0; j < k; ++j) {
    const int from = marks[j];
    const int to = j + 1 < k ? marks[j + 1] : marks[0] + steps;
    int arcs_seen = 0;
    for (int p = from; p < to; ++p) {
      const int i = p % steps;
      if (along_arc[i]) {
        ++arcs_seen;
      } else if ((arcs_seen == 0) != (kind[i] == Step::kUp)) {
        return false;
      }
    }
    if (arcs_seen != 1) return false;
  }
  return true;
}

BigInt signed_derangement_sum(int n) {
  if (n < 1) throw Error(ErrorCode::kInvalidArgument, "n must be >= 1");
  if (n > 10) throw BudgetExceeded(std::to_string(n) + "!", 3628800ULL);
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  long long total = 0;
  do {
    bool fixed = false;
    for (int i = 0; i < n && !fixed; ++i) fixed = p[i] == i;
    if (!fixed) total += permutation_sign(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return total;
}

std::string NetworkNode::name() const {
  switch (kind) {
    case Kind::kSource: return "src" + std::to_string(a);
    case Kind::kSink: return "snk" + std::to_string(a);
    case Kind::kStep: return "s(" + std::to_string(a) + "," + std::to_string(b) + ")";
  }
  return "?";
}

DerangementNetwork DerangementNetwork::build(int n) {
  if (n < 1) throw Error(ErrorCode::kInvalidArgument, "n must be >= 1");
  DerangementNetwork net;
  net.n = n;
  using Kind = NetworkNode::Kind;
  for (int i = 1; i <= n; ++i) net.nodes.push_back({Kind::kSource, i, 0});
  for (int i = 1; i <= n; ++i) net.nodes.push_back({Kind::kSink, i, 0});
  for (int i = 1; i < n; ++i) {
    net.nodes.push_back({Kind::kStep, i, i + 1});
    net.nodes.push_back({Kind::kStep, i + 1, i});
  }
  auto step = [n](int a, int b) {
    const int i = std::min(a, b);
    return 2 * n + 2 * (i - 1) + (a < b ? 0 : 1);
  };
  for (int i = 1; i < n; ++i) {
    net.arcs.push_back({net.source(i), step(i, i + 1)});
    net.arcs.push_back({net.source(i + 1), step(i + 1, i)});
    net.arcs.push_back({step(i, i + 1), net.sink(i + 1)});
    net.arcs.push_back({step(i + 1, i), net.sink(i)});
  }
  for (int i = 1; i + 1 < n; ++i) {
    net.arcs.push_back({step(i, i + 1), step(i + 1, i + 2)});
    net.arcs.push_back({step(i + 2, i + 1), step(i + 1, i)});
  }
  std::sort(net.arcs.begin(), net.arcs.end());
  return net;
}

int DerangementNetwork::source(int i) const { return i - 1; }
int DerangementNetwork::sink(int i) const { return n + i - 1; }

bool DerangementNetwork::is_acyclic() const {
  std::vector<int> indegree(nodes.size(), 0);
  std::vector<std::vector<int>> out(nodes.size());
  for (const auto& [a, b] : arcs) {
    out[a].push_back(b);
    ++indegree[b];
  }
  std::vector<int> ready;
  for (std::size_t v = 0; v < nodes.size(); ++v) {
    if (indegree[v] == 0) ready.push_back(static_cast<int>(v));
  }
  std::size_t removed = 0;
  while (!ready.empty()) {
    const int v = ready.back();
    ready.pop_back();
    ++removed;
    for (int w : out[v]) {
      if (--indegree[w] == 0) ready.push_back(w);
    }
  }
  return removed == nodes.size();
}

std::vector<PathFamily> derangement_network_paths(int n) {
  if (n < 2 || n > 7) throw Error(ErrorCode::kInvalidArgument, "network paths need 2 <= n <= 7");
  const DerangementNetwork net = DerangementNetwork::build(n);
  if (!net.is_acyclic()) throw Error(ErrorCode::kIdentityViolation, "network has a cycle");
  std::vector<std::vector<int>> out(net.nodes.size());
  for (const auto& [a, b] : net.arcs) out[a].push_back(b);

  // Memoized suffixes: every path from a node to any sink.
  std::vector<std::vector<std::vector<int>>> memo(net.nodes.size());
  std::vector<bool> done(net.nodes.size(), false);
  std::function<const std::vector<std::vector<int>>&(int)> suffixes =
      [&](int v) -> const std::vector<std::vector<int>>& {
    if (done[v]) return memo[v];
    std::vector<std::vector<int>> result;
    if (net.nodes[v].kind == NetworkNode::Kind::kSink) {
      result.push_back({v});
    } else {
      for (int w : out[v]) {
        for (const auto& tail : suffixes(w)) {
          std::vector<int> path{v};
          path.insert(path.end(), tail.begin(), tail.end());
          result.push_back(std::move(path));
        }
      }
    }
    memo[v] = std::move(result);
    done[v] = true;
    return memo[v];
  };

  std::vector<std::vector<std::vector<int>>> per_source(n);
  for (int i = 1; i <= n; ++i) {
    per_source[i - 1] = suffixes(net.source(i));
    std::sort(per_source[i - 1].begin(), per_source[i - 1].end(),
              [](const auto& x, const auto& y) {
                return std::pair(x.back(), x) < std::pair(y.back(), y);
              });
  }

  std::vector<PathFamily> families;
  PathFamily current;
  current.paths.resize(n);
  current.permutation.resize(n);
  std::vector<bool> sink_used(n + 1, false);
  auto rec = [&](auto&& self, int i) -> void {
    if (i == n) {
      std::vector<int> zero_based(n);
      for (int k = 0; k < n; ++k) zero_based[k] = current.permutation[k] - 1;
      current.sign = permutation_sign(zero_based);
      families.push_back(current);
      return;
    }
    for (const auto& path : per_source[i]) {
      const int target = net.nodes[path.back()].a;
      if (sink_used[target]) continue;
      sink_used[target] = true;
      current.paths[i] = path;
      current.permutation[i] = target;
      self(self, i + 1);
      sink_used[target] = false;
    }
  };
  rec(rec, 0);
  return families;
}

BinomialIdentity binomial_identity_check(int n) {
  if (n < 0) throw Error(ErrorCode::kInvalidArgument, "n must be >= 0");
  BinomialIdentity r;
  for (int k = 0; k <= n; ++k) {
    r.lhs += binomial(static_cast<unsigned>(n), static_cast<unsigned>(k)) * (k - 1) * (n - k - 1);
  }
  const BigInt rhs4 = BigInt(n) * (n - 1) * pow2(static_cast<unsigned>(n)) -
                      pow2(static_cast<unsigned>(n + 2)) * (n - 1);
  r.pass = 4 * r.lhs == rhs4;
  r.rhs = rhs4 / 4;
  r.pass = r.pass && rhs4 % 4 == 0;
  return r;
}

BeadCounts bead_bijection_witness(int n) {
  if (n < 2 || n > 12) throw Error(ErrorCode::kInvalidArgument, "bead witness needs 2 <= n <= 12");
  long long r = 0, l = 0, complement = 0;
  for (std::uint32_t colors = 0; colors < (1U << n); ++colors) {
    // bit set = black bead
    int first_black = -1, first_white = -1;
    for (int i = n - 1; i >= 0; --i) {
      if ((colors >> i) & 1U) {
        first_black = i;
      } else {
        first_white = i;
      }
    }
    for (int b = 0; b < n; ++b) {
      if (!((colors >> b) & 1U)) continue;
      for (int w = 0; w < n; ++w) {
        if ((colors >> w) & 1U) continue;
        ++r;
        if (b != first_black && w != first_white) {
          ++l;
        } else {
          ++complement;
        }
      }
    }
  }
  BeadCounts out;
  out.r = r;
  out.l = l;
  out.complement = complement;
  BigInt expected_l = 0;
  for (int k = 2; k <= n - 2; ++k) {
    expected_l += binomial(static_cast<unsigned>(n), static_cast<unsigned>(k)) * (k - 1) *
                  (n - k - 1);
  }
  const BigInt expected_r = pow2(static_cast<unsigned>(n - 2)) * n * (n - 1);
  const BigInt expected_complement = (pow2(static_cast<unsigned>(n)) - 2) * (n - 1);
  out.formulas_hold = out.r == expected_r && out.l == expected_l &&
                      out.complement == expected_complement && out.l == out.r - out.complement;
  return out;
}

namespace {

std::string cycle_text(const std::vector<int>& seq) {
  std::string s = "(";
  for (std::size_t i = 0; i < seq.size(); ++i) {
    if (i) s += ' ';
    s += std::to_string(seq[i]);
  }
  return s + ")";
}

IdentityRecord derangement_record(int n) {
  const BigInt lhs = signed_derangement_sum(n);
  const BigInt rhs = BigInt(sign_power(static_cast<unsigned>(n - 1))) * (n - 1);
  return {"signed_derangements", n, to_decimal(lhs), to_decimal(rhs), lhs == rhs};
}

std::vector<IdentityRecord> network_records(int n) {
  const auto families = derangement_network_paths(n);
  long long signed_sum = 0;
  std::vector<std::vector<int>> perms;
  for (const auto& f : families) {
    signed_sum += f.sign;
    perms.push_back(f.permutation);
  }
  std::vector<std::vector<int>> derangements;
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 1);
  do {
    bool fixed = false;
    for (int i = 0; i < n; ++i) fixed = fixed || p[i] == i + 1;
    if (!fixed) derangements.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  const long long expected = sign_power(static_cast<unsigned>(n - 1)) * (n - 1);
  return {
      {"network_families", n, std::to_string(families.size()),
       std::to_string(derangements.size()), perms == derangements},
      {"network_signed_sum", n, std::to_string(signed_sum), std::to_string(expected),
       signed_sum == expected},
  };
}

IdentityRecord binomial_record(int n) {
  const auto r = binomial_identity_check(n);
  return {"binomial_identity", n, to_decimal(r.lhs), to_decimal(r.rhs), r.pass};
}

IdentityRecord bead_record(int n) {
  const auto b = bead_bijection_witness(n);
  return {"bead_sets", n, to_decimal(b.l), to_decimal(b.r - b.complement), b.formulas_hold};
}

std::vector<IdentityRecord> interlacing_records(int node_count) {
  long long total = 0, passing = 0, unmixed = 0, unmixed_passing = 0, failures_unmixed = 0;
  for (const auto& t : all_plane_rooted_directed_trees(node_count)) {
    const MarkedWalk w = marked_dfs(t);
    const bool ok = check_interlacing(t, w) &&
                    static_cast<int>(mark_sequence(w).size()) == node_count - 1;
    const bool mixed = root_is_mixed(t);
    ++total;
    if (ok) ++passing;
    if (!mixed) {
      ++unmixed;
      if (ok) ++unmixed_passing;
    }
    if (!ok && !mixed) ++failures_unmixed;
  }
  return {
      {"dfs_interlacing", node_count, std::to_string(passing), std::to_string(total),
       passing == total},
      {"dfs_interlacing_unmixed_root", node_count, std::to_string(unmixed_passing),
       std::to_string(unmixed), unmixed_passing == unmixed && failures_unmixed == 0},
  };
}

IdentityRecord dfs_example_record() {
  const auto t = dfs_example_tree();
  const MarkedWalk w = marked_dfs(t);
  const std::string cycle = cycle_text(mark_sequence(w));
  const std::string expected = "(3 8 4 7 9 1 6 2 5)";
  return {"dfs_example_cycle", t.node_count(), cycle, expected,
          cycle == expected && check_interlacing(t, w)};
}

}  // namespace

std::vector<IdentityRecord> run_identity_checks(std::string_view check, int n) {
  std::vector<IdentityRecord> out;
  const bool all = check == "all";
  auto wanted = [&](std::string_view name) { return all || check == name; };
  bool known = all;
  if (wanted("derangements")) {
    known = true;
    if (all) {
      for (int k = 1; k <= 9; ++k) out.push_back(derangement_record(k));
    } else {
      out.push_back(derangement_record(n));
    }
  }
  if (wanted("network")) {
    known = true;
    const int lo = all ? 2 : n, hi = all ? 7 : n;
    for (int k = lo; k <= hi; ++k) {
      for (auto& r : network_records(k)) out.push_back(std::move(r));
    }
  }
  if (wanted("binomial")) {
    known = true;
    const int lo = all ? 0 : n, hi = all ? 30 : n;
    for (int k = lo; k <= hi; ++k) out.push_back(binomial_record(k));
  }
  if (wanted("beads")) {
    known = true;
    const int lo = all ? 2 : n, hi = all ? 12 : n;
    for (int k = lo; k <= hi; ++k) out.push_back(bead_record(k));
  }
  if (wanted("interlacing")) {
    known = true;
    const int lo = all ? 1 : n, hi = all ? 6 : n;
    for (int k = lo; k <= hi; ++k) {
      for (auto& r : interlacing_records(k)) out.push_back(std::move(r));
    }
  }
  if (wanted("dfs-example")) {
    known = true;
    out.push_back(dfs_example_record());
  }
  if (!known) {
    throw Error(ErrorCode::kInvalidArgument, "unknown identity check: " + std::string(check));
  }
  return out;
}

}  // namespace treeminor
