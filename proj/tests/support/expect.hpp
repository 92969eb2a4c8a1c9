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


#ifndef TREEMINOR_TESTS_EXPECT_HPP
#define TREEMINOR_TESTS_EXPECT_HPP

#include <optional>
#include <vector>

#include "treeminor/errors.hpp"
#include "treeminor/tree.hpp"

namespace testing_util {

// Error code raised by f, or nullopt if it returned normally.
template <class F>
std::optional<treeminor::ErrorCode> code_of(F&& f) {
  try {
    f();
  } catch (const treeminor::Error& e) {
    return e.code();
  }
  return std::nullopt;
}

inline treeminor::Tree path(int n) {
  std::vector<treeminor::Edge> edges;
  for (int v = 1; v < n; ++v) edges.push_back({v, v + 1});
  return treeminor::Tree::from_edge_list(n, edges);
}

inline treeminor::Tree star_at(int n, int centre) {
  std::vector<treeminor::Edge> edges;
  for (int v = 1; v <= n; ++v)
    if (v != centre) edges.push_back({v, centre});
  return treeminor::Tree::from_edge_list(n, edges);
}

inline treeminor::SubsetS subset(std::vector<int> members, int n) {
  return treeminor::SubsetS::from_members(std::move(members), n);
}

}  // namespace testing_util

#endif  // TREEMINOR_TESTS_EXPECT_HPP
