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

#ifndef TREEMINOR_CATALYST_HPP
#define TREEMINOR_CATALYST_HPP

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "treeminor/bigint.hpp"
#include "treeminor/forest.hpp"
#include "treeminor/linalg.hpp"
#include "treeminor/tree.hpp"

namespace treeminor {

// An S-catalyst: a permutation sigma of S together with, for every s in S,
// an arc f(s) on the tree path from s to sigma(s), oriented along it.
// f()[k] belongs to sigma.domain()[k].
struct Catalyst {
  Permutation sigma;
  std::vector<Arc> f;

  int sign() const { return sigma.sign(); }
  Arc arc_of(Vertex s) const { return f[sigma.position(s)]; }
  friend bool operator==(const Catalyst&, const Catalyst&) = default;
};

bool is_catalyst(const TreeMetric& metric, const SubsetS& s, const Catalyst& c);

// Multiset of arcs supported on tree edges, kept sorted.
class Arrowflow {
 public:
  Arrowflow() = default;
  explicit Arrowflow(std::vector<Arc> arcs);

  const std::vector<Arc>& arcs() const noexcept { return arcs_; }
  int size() const noexcept { return static_cast<int>(arcs_.size()); }
  bool has_parallel_arrows() const;

  friend bool operator==(const Arrowflow&, const Arrowflow&) = default;
  friend auto operator<=>(const Arrowflow& a, const Arrowflow& b) {
    return a.arcs_ <=> b.arcs_;
  }

 private:
  std::vector<Arc> arcs_;
};

enum class FlowClass {
  kZeroSumParallel,
  kZeroSumMissingPath,
  kUnital,
  kComposite,
};

std::string_view flow_class_name(FlowClass c);
inline bool is_zero_sum(FlowClass c) {
  return c == FlowClass::kZeroSumParallel || c == FlowClass::kZeroSumMissingPath;
}

// Arrowflow induced by a catalyst: the multiset {f(s) : s in S}.
Arrowflow induced_arrowflow(const Catalyst& c);

// Complement in the tree of the flow's underlying simple graph. Throws
// InvalidArgument if an arc is not supported on a tree edge.
Forest missing_forest(const Tree& tree, const Arrowflow& flow);

// Parallel arrows first, then a missing S-path, then the missing forest's
// class. Throws InvalidArgument unless the flow has exactly m arcs, and
// ClassificationImpossible if no class applies.
FlowClass classify_arrowflow(const Tree& tree, const Arrowflow& flow, const SubsetS& s);

// Sum over sigma in Sym(S) of prod d(s, sigma(s)): the number of catalysts.
// Returns nullopt (without finishing the computation) when the count
// provably exceeds `cap`.
std::optional<BigInt> catalyst_count(const TreeMetric& metric, const SubsetS& s,
                                     std::uint64_t cap);

// Streams every catalyst exactly once: sigma in lexicographic one-line
// order (permutations with a zero-length leg are skipped), then arc choices
// in path order with the last member varying fastest. Throws BudgetExceeded
// when the catalyst count exceeds `budget`.
void enumerate_catalysts(const Tree& tree, const SubsetS& s, std::uint64_t budget,
                         const std::function<void(const Catalyst&)>& visit);

// Sum of sgn(sigma) over all catalysts, visiting each one. Same budget
// contract as enumerate_catalysts.
BigInt catalyst_signed_sum(const TreeMetric& metric, const SubsetS& s, std::uint64_t budget);

struct ClassTally {
  BigInt count;
  BigInt signed_sum;
};

// Catalysts inducing exactly `flow`, by backtracking over (arc, target)
// choices. Throws BudgetExceeded if more than `budget` search nodes are
// visited.
ClassTally class_tally(const Tree& tree, const SubsetS& s, const Arrowflow& flow,
                       std::uint64_t budget);
BigInt class_signed_sum(const Tree& tree, const SubsetS& s, const Arrowflow& flow,
                        std::uint64_t budget);

// Buckets every catalyst by its induced arrowflow.
std::map<Arrowflow, ClassTally> tally_catalyst_classes(const Tree& tree, const SubsetS& s,
                                                       std::uint64_t budget);

// The transposition (i j), i < j, swapped by the zero-sum involution. Depends
// only on the induced arrowflow and f:
//  - parallel arrows: the lexicographically smallest duplicated arc and the
//    two smallest members of S that f sends to it;
//  - otherwise: the lexicographically smallest pair of S-members lying in a
//    common component of the missing forest.
// Throws NotZeroSum.
std::pair<Vertex, Vertex> involution_pair(const Tree& tree, const SubsetS& s,
                                          const Catalyst& c);

// (sigma o (i j), f o (i j)) for the pair above.
Catalyst zero_sum_involution(const Tree& tree, const SubsetS& s, const Catalyst& c);

// Contraction of every missing-forest component of a unital or composite
// flow. The floating component of a composite flow becomes kStar.
struct QuotientFlow {
  static constexpr Vertex kStar = 0;

  Arrowflow base;
  std::vector<Vertex> quotient_vertices;  // members of S, then kStar if composite
  std::vector<Arc> quotient_arcs;         // image of every base arc, sorted
  std::vector<Vertex> projection;         // projection[v] for v in 1..n; [0] unused
  bool arc_map_injective = false;         // on distinct base arcs

  // The same data as an ordinary instance: S-members become 1..m in
  // increasing order and kStar becomes m + 1.
  Tree quotient_tree = Tree::from_edge_list(1, {});
  SubsetS quotient_subset = SubsetS::full(1);
  Arrowflow relabeled_flow;
};

// Throws NotQuotientable for zero-sum flows.
QuotientFlow quotient_flow(const Tree& tree, const SubsetS& s, const Arrowflow& flow);

// Every unital flow whose missing forest is f: one complement edge carries
// an anti-parallel pair, the other m - 2 are oriented freely. Throws
// WrongForestClass unless f is S-rooted.
std::vector<Arrowflow> unital_arrowflows_for_forest(const Tree& tree, const SubsetS& s,
                                                    const Forest& f);
BigInt unital_count_for_forest(const Tree& tree, const SubsetS& s, const Forest& f);

// Every composite flow whose missing forest is f: the m complement edges
// oriented freely. Throws WrongForestClass unless f is (S,*)-rooted.
std::vector<Arrowflow> composite_arrowflows_for_forest(const Tree& tree, const SubsetS& s,
                                                       const Forest& f);

}  // namespace treeminor

#endif  // TREEMINOR_CATALYST_HPP
