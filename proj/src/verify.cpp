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


#include "treeminor/verify.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <exception>
#include <mutex>
#include <thread>

#include "json.hpp"
#include "treeminor/errors.hpp"
#include "treeminor/forest.hpp"
#include "treeminor/minors.hpp"

namespace treeminor {

namespace {

constexpr std::array<const char*, 4> kCheckNames{"four_way", "kappa", "bdeg", "ck_corollary"};

struct UnitResult {
  std::uint64_t cases = 0;
  std::uint64_t failed_cases = 0;
  std::uint64_t catalyst_evaluated = 0;
  std::array<CheckTally, kCheckNames.size()> checks{};
  std::optional<Counterexample> first_failure;
  std::optional<TrialRecord> trial;
};

// Runs every check on one (tree, S); returns the first failing check name,
// or empty when all pass.
std::string check_pair(const Tree& tree, const SubsetS& s, std::uint64_t budget,
                       UnitResult& unit, MinorReport* report_out) {
  std::string first_failed;
  auto record = [&](std::size_t index, bool pass) {
    if (pass) {
      ++unit.checks[index].pass;
    } else {
      ++unit.checks[index].fail;
      if (first_failed.empty()) first_failed = kCheckNames[index];
    }
  };

  const MinorReport report = cross_verify(tree, s, budget);
  if (report.value_catalyst) ++unit.catalyst_evaluated;
  record(0, report.agree);

  record(1, report.kappa == BigInt(enumerate_s_rooted(tree, s).size()));

  long long bdeg_total = 0;
  for (const Forest& f : enumerate_s_star_rooted(tree, s)) {
    bdeg_total += boundary_degree(tree, f, *floating_component(f, s));
  }
  record(2, BigInt(tree.vertex_count() - s.size()) * report.kappa == bdeg_total);

  if (s.size() >= 3) {
    if (const auto closed = minor_ck_corollary(tree, s)) record(3, *closed == report.value_det);
  }

  ++unit.cases;
  if (!first_failed.empty()) ++unit.failed_cases;
  if (report_out) *report_out = report;
  return first_failed;
}

std::vector<int> prufer_from_index(int n, std::uint64_t index) {
  std::vector<int> seq(std::max(0, n - 2));
  for (auto it = seq.rbegin(); it != seq.rend(); ++it) {
    *it = static_cast<int>(index % n) + 1;
    index /= n;
  }
  return seq;
}

template <class Work>
std::vector<UnitResult> run_units(std::size_t count, int threads, Work&& work) {
  std::vector<UnitResult> results(count);
  std::atomic<std::size_t> next{0};
  std::atomic<bool> failed{false};
  std::exception_ptr error;
  std::mutex error_mutex;
  auto worker = [&]() {
    while (!failed) {
      const std::size_t i = next++;
      if (i >= count) return;
      try {
        results[i] = work(i);
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (!error) error = std::current_exception();
        failed = true;
      }
    }
  };
  const int n_threads = std::max(1, threads);
  if (n_threads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < n_threads; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  if (error) std::rethrow_exception(error);
  return results;
}

void merge(VerifyResult& out, UnitResult& unit) {
  out.cases += unit.cases;
  out.failed_cases += unit.failed_cases;
  out.catalyst_evaluated += unit.catalyst_evaluated;
  for (std::size_t i = 0; i < kCheckNames.size(); ++i) {
    CheckTally& t = out.checks[kCheckNames[i]];
    t.pass += unit.checks[i].pass;
    t.fail += unit.checks[i].fail;
  }
  if (!out.first_failure && unit.first_failure) out.first_failure = std::move(unit.first_failure);
  if (unit.trial) out.trials.push_back(std::move(*unit.trial));
}

}  // namespace

VerifyResult run_verify(const VerifyOptions& options) {
  if (!options.exhaustive && !options.random) {
    throw Error(ErrorCode::kInvalidArgument, "select --exhaustive and/or --random");
  }
  if (options.n_max < 2) throw Error(ErrorCode::kInvalidArgument, "n_max must be >= 2");
  if (options.random && options.trials < 1) {
    throw Error(ErrorCode::kInvalidArgument, "random mode needs trials >= 1");
  }
  if (options.exhaustive && options.n_max > 8) {
    throw Error(ErrorCode::kInvalidArgument, "exhaustive sweep is limited to n_max <= 8");
  }

  VerifyResult out;
  out.options = options;
  for (const char* name : kCheckNames) out.checks[name];

  if (options.exhaustive) {
    struct TreeJob {
      int n;
      std::uint64_t index;
    };
    std::vector<TreeJob> jobs;
    for (int n = 2; n <= options.n_max; ++n) {
      std::uint64_t total = 1;
      for (int k = 0; k < n - 2; ++k) total *= static_cast<std::uint64_t>(n);
      for (std::uint64_t i = 0; i < total; ++i) jobs.push_back({n, i});
    }
    auto results = run_units(jobs.size(), options.threads, [&](std::size_t j) {
      UnitResult unit;
      const std::vector<int> prufer = prufer_from_index(jobs[j].n, jobs[j].index);
      const Tree tree = Tree::from_prufer(prufer);
      for_each_subset(jobs[j].n, 2, [&](const SubsetS& s) {
        const std::string failed = check_pair(tree, s, options.catalyst_budget, unit, nullptr);
        if (!failed.empty() && !unit.first_failure) {
          unit.first_failure = Counterexample{"exhaustive", jobs[j].n, prufer, s.members(), failed};
        }
      });
      return unit;
    });
    for (auto& unit : results) merge(out, unit);
  }

  if (options.random) {
    auto results = run_units(static_cast<std::size_t>(options.trials), options.threads,
                             [&](std::size_t t) {
      UnitResult unit;
      SplitMix64 rng(trial_seed(options.seed, t));
      const int n = rng.between(2, options.n_max);
      const Tree tree = random_tree(n, rng.next());
      const SubsetS s = random_subset(n, 2, rng);
      MinorReport report;
      const std::string failed = check_pair(tree, s, options.catalyst_budget, unit, &report);
      TrialRecord rec;
      rec.trial = static_cast<int>(t);
      rec.n = n;
      rec.prufer = n >= 2 ? to_prufer(tree) : std::vector<int>{};
      rec.subset = s.members();
      rec.det = to_decimal(report.value_det);
      rec.catalyst_evaluated = report.value_catalyst.has_value();
      rec.pass = failed.empty();
      if (!failed.empty()) {
        unit.first_failure = Counterexample{"random", n, rec.prufer, rec.subset, failed};
      }
      unit.trial = std::move(rec);
      return unit;
    });
    for (auto& unit : results) merge(out, unit);
  }
  return out;
}

std::string verify_to_json(const VerifyResult& r) {
  using Json = nlohmann::ordered_json;
  Json j;
  j["exhaustive"] = r.options.exhaustive;
  j["random"] = r.options.random;
  j["n_max"] = r.options.n_max;
  j["trials"] = r.options.random ? r.options.trials : 0;
  j["seed"] = std::to_string(r.options.seed);
  j["catalyst_budget"] = std::to_string(r.options.catalyst_budget);
  j["cases"] = r.cases;
  j["failed_cases"] = r.failed_cases;
  j["catalyst_evaluated"] = r.catalyst_evaluated;
  Json checks = Json::object();
  for (const char* name : kCheckNames) {
    const CheckTally& t = r.checks.at(name);
    checks[name] = {{"pass", t.pass}, {"fail", t.fail}};
  }
  j["checks"] = std::move(checks);
  if (r.first_failure) {
    const auto& c = *r.first_failure;
    j["first_counterexample"] = {{"suite", c.suite},   {"n", c.n},
                                 {"prufer", c.prufer}, {"subset", c.subset},
                                 {"check", c.check}};
  } else {
    j["first_counterexample"] = nullptr;
  }
  Json trials = Json::array();
  for (const auto& t : r.trials) {
    trials.push_back({{"trial", t.trial},
                      {"n", t.n},
                      {"prufer", t.prufer},
                      {"subset", t.subset},
                      {"det", t.det},
                      {"catalyst_evaluated", t.catalyst_evaluated},
                      {"pass", t.pass}});
  }
  j["trial_records"] = std::move(trials);
  j["pass"] = r.ok();
  return j.dump(2) + "\n";
}

}  // namespace treeminor
