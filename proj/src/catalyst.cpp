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

#include "treeminor/catalyst.hpp"

#include <algorithm>
#include <set>

#include "treeminor/errors.hpp"

namespace treeminor {

namespace {

__extension__ typedef __int128 Wide;

// Number of derangements of m elements, saturating at UINT64_MAX.
std::uint64_t derangement_count_saturating(int m) {
  if (m == 0) return 1;
  std::uint64_t prev = 1, cur = 0;  // !0, !1
  for (int k = 2; k <= m; ++k) {
    const Wide next = static_cast<Wide>(k - 1) * (static_cast<Wide>(prev) + cur);
    prev = cur;
    cur = next > static_cast<Wide>(UINT64_MAX) ? UINT64_MAX : static_cast<std::uint64_t>(next);
  }
  return cur;
}

template <class Number>
Number ryser_permanent(const std::vector<std::vector<int>>& a) {
  const int m = static_cast<int>(a.size());
  Number total = 0;
  std::vector<long long> row_sum(m);
  for (std::uint32_t mask = 1; mask < (1U << m); ++mask) {
    std::fill(row_sum.begin(), row_sum.end(), 0);
    for (int j = 0; j < m; ++j) {
      if (!(mask & (1U << j))) continue;
      for (int i = 0; i < m; ++i) row_sum[i] += a[i][j];
    }
    Number product = 1;
    for (int i = 0; i < m && product != 0; ++i) product *= row_sum[i];
    const int bits = __builtin_popcount(mask);
    if ((m - bits) % 2 == 0) {
      total += product;
    } else {
      total -= product;
    }
  }
  return total;
}

std::string wide_to_string(Wide x) {
  if (x == 0) return "0";
  const bool negative = x < 0;
  std::string digits;
  while (x != 0) {
    const int d = static_cast<int>(x % 10);
    digits.push_back(static_cast<char>('0' + (negative ? -d : d)));
    x /= 10;
  }
  if (negative) digits.push_back('-');
  std::reverse(digits.begin(), digits.end());
  return digits;
}

// Walks every permutation of S without fixed points in lexicographic
// one-line order and hands its images (indices into S) to leaf.
template <class Leaf>
void for_each_leggy_permutation(int m, Leaf&& leaf) {
  std::vector<int> images(m);
  std::vector<bool> used(m, false);
  auto rec = [&](auto&& self, int k) -> void {
    if (k == m) {
      leaf(images);
      return;
    }
    for (int t = 0; t < m; ++t) {
      if (used[t] || t == k) continue;
      used[t] = true;
      images[k] = t;
      self(self, k + 1);
      used[t] = false;
    }
  };
  rec(rec, 0);
}

void check_budget(const TreeMetric& metric, const SubsetS& s, std::uint64_t budget) {
  const auto count = catalyst_count(metric, s, budget);
  if (!count) {
    throw BudgetExceeded(
        "at least " + std::to_string(derangement_count_saturating(s.size())), budget);
  }
  if (*count > budget) throw BudgetExceeded(to_decimal(*count), budget);
}

Permutation permutation_from_indices(const SubsetS& s, const std::vector<int>& images) {
  std::vector<Vertex> out(images.size());
  for (std::size_t k = 0; k < images.size(); ++k) out[k] = s.members()[images[k]];
  return Permutation(s.members(), std::move(out));
}

}  // namespace

bool is_catalyst(const TreeMetric& metric, const SubsetS& s, const Catalyst& c) {
  if (c.sigma.domain() != s.members() || c.f.size() != s.members().size()) return false;
  for (std::size_t k = 0; k < c.f.size(); ++k) {
    const Vertex from = s.members()[k];
    const Vertex to = c.sigma.images()[k];
    const Arc a = c.f[k];
    if (a.tail < 1 || a.tail > metric.vertex_count() || a.head < 1 ||
        a.head > metric.vertex_count() || metric.distance(a.tail, a.head) != 1) {
      return false;
    }
    if (!metric.arc_on_path(a, from, to)) return false;
  }
  return true;
}

Arrowflow::Arrowflow(std::vector<Arc> arcs) : arcs_(std::move(arcs)) {
  std::sort(arcs_.begin(), arcs_.end());
}

bool Arrowflow::has_parallel_arrows() const {
  return std::adjacent_find(arcs_.begin(), arcs_.end()) != arcs_.end();
}

std::string_view flow_class_name(FlowClass c) {
  switch (c) {
    case FlowClass::kZeroSumParallel: return "ZERO_SUM_PARALLEL";
    case FlowClass::kZeroSumMissingPath: return "ZERO_SUM_MISSING_PATH";
    case FlowClass::kUnital: return "UNITAL";
    case FlowClass::kComposite: return "COMPOSITE";
  }
  return "UNKNOWN";
}

Arrowflow induced_arrowflow(const Catalyst& c) { return Arrowflow(c.f); }

Forest missing_forest(const Tree& tree, const Arrowflow& flow) {
  std::vector<int> used;
  used.reserve(flow.arcs().size());
  for (const Arc& a : flow.arcs()) {
    const auto index = tree.edge_index(a.tail, a.head);
    if (!index) {
      throw Error(ErrorCode::kInvalidArgument,
                  "arc (" + std::to_string(a.tail) + "," + std::to_string(a.head) +
                      ") is not supported on a tree edge");
    }
    used.push_back(*index);
  }
  return Forest::complement_of(tree, used);
}

FlowClass classify_arrowflow(const Tree& tree, const Arrowflow& flow, const SubsetS& s) {
  if (flow.size() != s.size()) {
    throw Error(ErrorCode::kInvalidArgument, "arrowflow must carry exactly m arcs");
  }
  const Forest missing = missing_forest(tree, flow);
  if (flow.has_parallel_arrows()) return FlowClass::kZeroSumParallel;
  std::vector<bool> hit(missing.component_count(), false);
  for (Vertex v : s.members()) {
    const int comp = missing.component_of(v);
    if (hit[comp]) return FlowClass::kZeroSumMissingPath;
    hit[comp] = true;
  }
  if (missing.component_count() == s.size()) return FlowClass::kUnital;
  if (missing.component_count() == s.size() + 1) return FlowClass::kComposite;
  throw Error(ErrorCode::kClassificationImpossible,
              "missing forest has " + std::to_string(missing.component_count()) +
                  " components for m = " + std::to_string(s.size()));
}

std::optional<BigInt> catalyst_count(const TreeMetric& metric, const SubsetS& s,
                                     std::uint64_t cap) {
  const int m = s.size();
  // Every fixed-point-free permutation has all legs of length >= 1.
  if (derangement_count_saturating(m) > cap) return std::nullopt;
  std::vector<std::vector<int>> a(m, std::vector<int>(m));
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) a[i][j] = metric.distance(s.members()[i], s.members()[j]);
  }
  // Bounds for Wide: m! (n-1)^m and (m (n-1))^m stay below 2^126 here.
  if (m <= 11 && metric.vertex_count() <= 64) {
    return BigInt(wide_to_string(ryser_permanent<Wide>(a)));
  }
  return ryser_permanent<BigInt>(a);
}

void enumerate_catalysts(const Tree& tree, const SubsetS& s, std::uint64_t budget,
                         const std::function<void(const Catalyst&)>& visit) {
  const TreeMetric metric(tree);
  check_budget(metric, s, budget);
  const int m = s.size();
  const auto& members = s.members();
  for_each_leggy_permutation(m, [&](const std::vector<int>& images) {
    Catalyst c{permutation_from_indices(s, images), std::vector<Arc>(m)};
    std::vector<std::vector<Arc>> choices(m);
    for (int k = 0; k < m; ++k) choices[k] = metric.path_arcs(members[k], members[images[k]]);
    std::vector<std::size_t> pick(m, 0);
    while (true) {
      for (int k = 0; k < m; ++k) c.f[k] = choices[k][pick[k]];
      visit(c);
      int k = m - 1;
      while (k >= 0 && ++pick[k] == choices[k].size()) pick[k--] = 0;
      if (k < 0) break;
    }
  });
}

BigInt catalyst_signed_sum(const TreeMetric& metric, const SubsetS& s, std::uint64_t budget) {
  check_budget(metric, s, budget);
  const int m = s.size();
  const auto& members = s.members();
  long long total = 0;
  std::vector<int> length(m);
  std::vector<int> pick(m);
  for_each_leggy_permutation(m, [&](const std::vector<int>& images) {
    for (int k = 0; k < m; ++k) length[k] = metric.distance(members[k], members[images[k]]);
    const int sign = permutation_sign(images);
    std::fill(pick.begin(), pick.end(), 0);
    long long visited = 0;
    while (true) {
      ++visited;
      int k = m - 1;
      while (k >= 0 && ++pick[k] == length[k]) pick[k--] = 0;
      if (k < 0) break;
    }
    total += sign * visited;
  });
  return total;
}

ClassTally class_tally(const Tree& tree, const SubsetS& s, const Arrowflow& flow,
                       std::uint64_t budget) {
  ClassTally tally;
  const int m = s.size();
  if (flow.size() != m) return tally;
  const TreeMetric metric(tree);
  const auto& members = s.members();

  std::vector<Arc> distinct;
  std::vector<int> multiplicity;
  for (const Arc& a : flow.arcs()) {
    if (!distinct.empty() && distinct.back() == a) {
      ++multiplicity.back();
    } else {
      distinct.push_back(a);
      multiplicity.push_back(1);
    }
  }
  for (const Arc& a : distinct) {
    if (!tree.has_edge(a.tail, a.head)) {
      throw Error(ErrorCode::kInvalidArgument, "arc not supported on a tree edge");
    }
  }

  std::vector<int> images(m);
  std::vector<bool> used(m, false);
  std::uint64_t nodes = 0;
  long long count = 0, signed_sum = 0;
  auto rec = [&](auto&& self, int k) -> void {
    if (++nodes > budget) throw BudgetExceeded(std::to_string(nodes) + "+", budget);
    if (k == m) {
      ++count;
      signed_sum += permutation_sign(images);
      return;
    }
    const Vertex from = members[k];
    for (std::size_t a = 0; a < distinct.size(); ++a) {
      if (multiplicity[a] == 0) continue;
      const Arc arc = distinct[a];
      // `from` must sit on the tail side of the arc.
      if (metric.distance(from, arc.tail) >= metric.distance(from, arc.head)) continue;
      --multiplicity[a];
      for (int t = 0; t < m; ++t) {
        if (used[t] || !metric.arc_on_path(arc, from, members[t])) continue;
        used[t] = true;
        images[k] = t;
        self(self, k + 1);
        used[t] = false;
      }
      ++multiplicity[a];
    }
  };
  rec(rec, 0);
  tally.count = count;
  tally.signed_sum = signed_sum;
  return tally;
}

BigInt class_signed_sum(const Tree& tree, const SubsetS& s, const Arrowflow& flow,
                        std::uint64_t budget) {
  return class_tally(tree, s, flow, budget).signed_sum;
}

std::map<Arrowflow, ClassTally> tally_catalyst_classes(const Tree& tree, const SubsetS& s,
                                                       std::uint64_t budget) {
  std::map<Arrowflow, ClassTally> out;
  enumerate_catalysts(tree, s, budget, [&](const Catalyst& c) {
    ClassTally& t = out[induced_arrowflow(c)];
    t.count += 1;
    t.signed_sum += c.sign();
  });
  return out;
}

std::pair<Vertex, Vertex> involution_pair(const Tree& tree, const SubsetS& s,
                                          const Catalyst& c) {
  const Arrowflow flow = induced_arrowflow(c);
  const auto& arcs = flow.arcs();
  const auto dup = std::adjacent_find(arcs.begin(), arcs.end());
  if (dup != arcs.end()) {
    std::vector<Vertex> preimages;
    for (std::size_t k = 0; k < c.f.size() && preimages.size() < 2; ++k) {
      if (c.f[k] == *dup) preimages.push_back(c.sigma.domain()[k]);
    }
    return {preimages[0], preimages[1]};
  }
  const Forest missing = missing_forest(tree, flow);
  const auto& members = s.members();
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (std::size_t j = i + 1; j < members.size(); ++j) {
      if (missing.component_of(members[i]) == missing.component_of(members[j])) {
        return {members[i], members[j]};
      }
    }
  }
  throw Error(ErrorCode::kNotZeroSum, "induced arrowflow is not zero-sum");
}

Catalyst zero_sum_involution(const Tree& tree, const SubsetS& s, const Catalyst& c) {
  const auto [i, j] = involution_pair(tree, s, c);
  Catalyst out{c.sigma.compose_transposition(i, j), c.f};
  std::swap(out.f[c.sigma.position(i)], out.f[c.sigma.position(j)]);
  return out;
}

QuotientFlow quotient_flow(const Tree& tree, const SubsetS& s, const Arrowflow& flow) {
  const FlowClass cls = classify_arrowflow(tree, flow, s);
  if (is_zero_sum(cls)) {
    throw Error(ErrorCode::kNotQuotientable, "zero-sum arrowflows have no quotient");
  }
  const int n = tree.vertex_count();
  const int m = s.size();
  const Forest missing = missing_forest(tree, flow);

  std::vector<Vertex> owner(missing.component_count(), QuotientFlow::kStar);
  for (Vertex v : s.members()) owner[missing.component_of(v)] = v;

  QuotientFlow q;
  q.base = flow;
  q.quotient_vertices = s.members();
  if (cls == FlowClass::kComposite) q.quotient_vertices.push_back(QuotientFlow::kStar);
  q.projection.assign(n + 1, 0);
  for (Vertex v = 1; v <= n; ++v) q.projection[v] = owner[missing.component_of(v)];

  std::set<Arc> distinct_images;
  std::set<Arc> distinct_base(flow.arcs().begin(), flow.arcs().end());
  for (const Arc& a : flow.arcs()) {
    const Arc image{q.projection[a.tail], q.projection[a.head]};
    q.quotient_arcs.push_back(image);
    distinct_images.insert(image);
  }
  std::sort(q.quotient_arcs.begin(), q.quotient_arcs.end());
  q.arc_map_injective = distinct_images.size() == distinct_base.size();

  auto relabel = [&](Vertex x) { return x == QuotientFlow::kStar ? m + 1 : s.index_of(x) + 1; };
  std::set<Edge> quotient_edges;
  for (const Edge& e : tree.edges()) {
    const Vertex a = q.projection[e.u], b = q.projection[e.v];
    if (a == b) continue;
    const Vertex ra = relabel(a), rb = relabel(b);
    quotient_edges.insert({std::min(ra, rb), std::max(ra, rb)});
  }
  const int k = static_cast<int>(q.quotient_vertices.size());
  q.quotient_tree = Tree::from_edge_list(
      k, std::vector<Edge>(quotient_edges.begin(), quotient_edges.end()));
  std::vector<Vertex> relabeled_s(m);
  for (int i = 0; i < m; ++i) relabeled_s[i] = i + 1;
  q.quotient_subset = SubsetS::from_members(std::move(relabeled_s), k);
  std::vector<Arc> relabeled_arcs;
  for (const Arc& a : q.quotient_arcs) relabeled_arcs.push_back({relabel(a.tail), relabel(a.head)});
  q.relabeled_flow = Arrowflow(std::move(relabeled_arcs));
  return q;
}

namespace {

std::vector<Edge> complement_edges(const Tree& tree, const Forest& f) {
  std::vector<bool> kept(tree.edges().size(), false);
  for (int index : f.kept_edges()) kept[index] = true;
  std::vector<Edge> out;
  for (std::size_t i = 0; i < kept.size(); ++i) {
    if (!kept[i]) out.push_back(tree.edges()[i]);
  }
  return out;
}

Arc oriented(const Edge& e, bool flip) { return flip ? Arc{e.v, e.u} : Arc{e.u, e.v}; }

}  // namespace

std::vector<Arrowflow> unital_arrowflows_for_forest(const Tree& tree, const SubsetS& s,
                                                    const Forest& f) {
  if (classify_forest(f, s) != ForestClass::kSRooted) {
    throw Error(ErrorCode::kWrongForestClass, "forest is not S-rooted");
  }
  const std::vector<Edge> free_edges = complement_edges(tree, f);
  const int k = static_cast<int>(free_edges.size());  // m - 1
  std::vector<Arrowflow> out;
  for (int doubled = 0; doubled < k; ++doubled) {
    for (std::uint32_t mask = 0; mask < (1U << (k - 1)); ++mask) {
      std::vector<Arc> arcs{oriented(free_edges[doubled], false),
                            oriented(free_edges[doubled], true)};
      int bit = 0;
      for (int e = 0; e < k; ++e) {
        if (e == doubled) continue;
        arcs.push_back(oriented(free_edges[e], (mask >> bit++) & 1U));
      }
      out.emplace_back(std::move(arcs));
    }
  }
  return out;
}

BigInt unital_count_for_forest(const Tree& tree, const SubsetS& s, const Forest& f) {
  return unital_arrowflows_for_forest(tree, s, f).size();
}

std::vector<Arrowflow> composite_arrowflows_for_forest(const Tree& tree, const SubsetS& s,
                                                       const Forest& f) {
  if (classify_forest(f, s) != ForestClass::kSStarRooted) {
    throw Error(ErrorCode::kWrongForestClass, "forest is not (S,*)-rooted");
  }
  const std::vector<Edge> free_edges = complement_edges(tree, f);
  const int k = static_cast<int>(free_edges.size());  // m
  std::vector<Arrowflow> out;
  for (std::uint32_t mask = 0; mask < (1U << k); ++mask) {
    std::vector<Arc> arcs;
    for (int e = 0; e < k; ++e) arcs.push_back(oriented(free_edges[e], (mask >> e) & 1U));
    out.emplace_back(std::move(arcs));
  }
  return out;
}

}  // namespace treeminor
