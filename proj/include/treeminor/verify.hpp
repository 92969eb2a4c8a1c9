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


#ifndef TREEMINOR_VERIFY_HPP
#define TREEMINOR_VERIFY_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "treeminor/tree.hpp"

namespace treeminor {

struct VerifyOptions {
  bool exhaustive = false;
  bool random = false;
  int n_max = 7;
  int trials = 0;
  std::uint64_t seed = 0;
  int threads = 1;
  std::uint64_t catalyst_budget = 1'000'000;
};

struct CheckTally {
  std::uint64_t pass = 0;
  std::uint64_t fail = 0;
};

struct Counterexample {
  std::string suite;  // "exhaustive" or "random"
  int n = 0;
  std::vector<int> prufer;
  std::vector<Vertex> subset;
  std::string check;
};

struct TrialRecord {
  int trial = 0;
  int n = 0;
  std::vector<int> prufer;
  std::vector<Vertex> subset;
  std::string det;
  bool catalyst_evaluated = false;
  bool pass = false;
};

struct VerifyResult {
  VerifyOptions options;
  std::uint64_t cases = 0;
  std::uint64_t failed_cases = 0;
  std::uint64_t catalyst_evaluated = 0;
  std::map<std::string, CheckTally> checks;
  std::optional<Counterexample> first_failure;
  std::vector<TrialRecord> trials;
  bool ok() const { return failed_cases == 0; }
};

// Per (tree, S) the suite checks
//   four_way      det = theorem A = richman (= catalyst when within budget)
//   kappa         DP count = enumerated S-rooted forests
//   bdeg          (n - m) kappa = sum of bdeg over (S,*)-rooted forests
//   ck_corollary  closed form = det whenever S induces a subtree, m >= 3
// Exhaustive mode sweeps every labeled tree with 2 <= n <= n_max and every S
// with m >= 2. Random mode draws trial t from trial_seed(seed, t): n uniform
// in [2, n_max], a random tree and a random S. Output does not depend on
// `threads`. Throws InvalidArgument for n_max < 2, trials < 1 in random
// mode, or when neither mode is selected.
VerifyResult run_verify(const VerifyOptions& options);

std::string verify_to_json(const VerifyResult& result);

}  // namespace treeminor

#endif  // TREEMINOR_VERIFY_HPP
