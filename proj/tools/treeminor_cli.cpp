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


#include <chrono>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "treeminor/treeminor.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitFailure = 3;
constexpr int kExitBudget = 4;

struct TreeSource {
  std::string file;
  std::string prufer;
  int random_n = 0;
  std::uint64_t seed = 0;
};

struct Common {
  TreeSource source;
  std::string subset;
  std::string format = "json";
  std::optional<std::uint64_t> budget;
};

class StatusError : public std::exception {
 public:
  explicit StatusError(tm_status s) : status_(s), message_(tm_last_error()) {}
  tm_status status() const { return status_; }
  const char* what() const noexcept override { return message_.c_str(); }

 private:
  tm_status status_;
  std::string message_;
};

void check(tm_status s) {
  if (s != TM_OK) throw StatusError(s);
}

int exit_code_for(tm_status s) {
  switch (s) {
    case TM_ERR_BUDGET_EXCEEDED: return kExitBudget;
    case TM_ERR_NOT_A_TREE:
    case TM_ERR_VERTEX_OUT_OF_RANGE:
    case TM_ERR_VALUE_OUT_OF_RANGE:
    case TM_ERR_SUBSET_TOO_SMALL:
    case TM_ERR_PARSE:
    case TM_ERR_INVALID_ARGUMENT:
    case TM_ERR_NULL_ARGUMENT: return kExitUsage;
    default: return kExitFailure;
  }
}

struct TreeHandle {
  tm_tree* ptr = nullptr;
  ~TreeHandle() { tm_tree_free(ptr); }
};

struct OwnedString {
  char* ptr = nullptr;
  ~OwnedString() { tm_string_free(ptr); }
  std::string str() const { return ptr ? ptr : ""; }
};

std::vector<int> parse_list(const std::string& text) {
  std::vector<int> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    const auto first = item.find_first_not_of(" \t");
    if (first == std::string::npos) continue;
    std::size_t used = 0;
    int value = 0;
    try {
      value = std::stoi(item.substr(first), &used);
    } catch (const std::exception&) {
      throw CLI::ValidationError("list", "not an integer: '" + item + "'");
    }
    if (item.find_first_not_of(" \t", first + used) != std::string::npos) {
      throw CLI::ValidationError("list", "not an integer: '" + item + "'");
    }
    out.push_back(value);
  }
  return out;
}

void load_tree(const TreeSource& src, TreeHandle& tree) {
  if (!src.file.empty()) {
    std::ifstream in(src.file);
    if (!in) throw CLI::ValidationError("--tree", "cannot read " + src.file);
    std::stringstream buffer;
    buffer << in.rdbuf();
    check(tm_tree_from_text(buffer.str().c_str(), &tree.ptr));
  } else if (!src.prufer.empty() || src.random_n == 0) {
    if (src.prufer.empty()) throw CLI::ValidationError("tree", "give --tree, --prufer or --random");
    const std::vector<int> seq = src.prufer == "[]" ? std::vector<int>{} : parse_list(src.prufer);
    check(tm_tree_from_prufer(seq.data(), seq.size(), &tree.ptr));
  } else {
    check(tm_tree_random(src.random_n, src.seed, &tree.ptr));
  }
}

tm_format to_format(const std::string& name) {
  if (name == "csv") return TM_FORMAT_CSV;
  if (name == "text") return TM_FORMAT_TEXT;
  return TM_FORMAT_JSON;
}

std::uint64_t resolve_budget(const std::optional<std::uint64_t>& flag, std::uint64_t fallback) {
  if (flag) return *flag;
  if (const char* env = std::getenv("TREEMINOR_BUDGET")) {
    try {
      std::size_t used = 0;
      const unsigned long long v = std::stoull(env, &used);
      if (used == std::string(env).size()) return v;
    } catch (const std::exception&) {
    }
    throw CLI::ValidationError("TREEMINOR_BUDGET", "not a non-negative integer");
  }
  return fallback;
}

void add_tree_source(CLI::App* cmd, Common& c) {
  auto* file = cmd->add_option("--tree", c.source.file, "Tree file: n, then one 'u v' per line");
  auto* prufer = cmd->add_option("--prufer", c.source.prufer, "Comma-separated Prufer sequence");
  auto* random = cmd->add_option("--random", c.source.random_n, "Random tree on N vertices")
                     ->check(CLI::PositiveNumber);
  cmd->add_option("--seed", c.source.seed, "Seed for --random");
  file->excludes(prufer)->excludes(random);
  prufer->excludes(random);
}

void add_format(CLI::App* cmd, std::string& format) {
  cmd->add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"json", "csv", "text"}));
}

std::vector<int> subset_of(const Common& c) { return parse_list(c.subset); }

int run_compute(const Common& c, const std::string& method) {
  TreeHandle tree;
  load_tree(c.source, tree);
  const std::vector<int> s = subset_of(c);
  const std::uint64_t budget = resolve_budget(c.budget, tm_default_catalyst_budget());
  OwnedString out;
  if (method == "all") {
    int agree = 0;
    check(tm_cross_verify(tree.ptr, s.data(), s.size(), budget, to_format(c.format), &out.ptr,
                          &agree));
    std::cout << out.str();
    if (!agree) {
      std::cerr << "error: routes disagree\n";
      return kExitFailure;
    }
    return kExitOk;
  }
  tm_method m = TM_METHOD_DET;
  if (method == "theorem-a") m = TM_METHOD_THEOREM_A;
  if (method == "richman") m = TM_METHOD_RICHMAN;
  if (method == "catalyst") m = TM_METHOD_CATALYST;
  if (method == "ck-corollary") m = TM_METHOD_CK_COROLLARY;
  check(tm_minor(tree.ptr, s.data(), s.size(), m, budget, &out.ptr));
  const std::string value = out.str();
  const int n = tm_tree_vertex_count(tree.ptr);
  if (c.format == "json") {
    nlohmann::ordered_json j;
    j["n"] = n;
    j["subset"] = s;
    j["method"] = method;
    j["value"] = value.empty() ? nlohmann::ordered_json(nullptr) : nlohmann::ordered_json(value);
    std::cout << j.dump(2) << '\n';
  } else if (c.format == "csv") {
    std::cout << "n,subset,method,value\n" << n << ",\"";
    for (std::size_t i = 0; i < s.size(); ++i) std::cout << (i ? "," : "") << s[i];
    std::cout << "\"," << method << ',' << value << '\n';
  } else {
    std::cout << (value.empty() ? "absent" : value) << '\n';
  }
  return kExitOk;
}

int run_verify(tm_verify_options o, const std::optional<int>& n_max,
               const std::optional<std::uint64_t>& budget) {
  o.n_max = n_max ? *n_max : (o.exhaustive ? 7 : 9);
  o.catalyst_budget = resolve_budget(budget, 1'000'000);
  if (!o.random) o.trials = 0;
  OwnedString out;
  int pass = 0;
  check(tm_verify(&o, &out.ptr, &pass));
  std::cout << out.str();
  return pass ? kExitOk : kExitFailure;
}

int run_forests(const Common& c, const std::string& kind) {
  TreeHandle tree;
  load_tree(c.source, tree);
  const std::vector<int> s = subset_of(c);
  OwnedString out;
  check(tm_forests(tree.ptr, s.data(), s.size(),
                   kind == "s-rooted" ? TM_FORESTS_S_ROOTED : TM_FORESTS_S_STAR,
                   to_format(c.format), &out.ptr));
  std::cout << out.str();
  return kExitOk;
}

int run_catalysts(const Common& c, bool classify) {
  TreeHandle tree;
  load_tree(c.source, tree);
  const std::vector<int> s = subset_of(c);
  OwnedString out;
  check(tm_catalysts(tree.ptr, s.data(), s.size(),
                     resolve_budget(c.budget, tm_default_catalyst_budget()), classify ? 1 : 0,
                     to_format(c.format), &out.ptr));
  std::cout << out.str();
  return kExitOk;
}

int run_identities(const std::string& which, int n, const std::string& format) {
  OwnedString out;
  int all_pass = 0;
  check(tm_identities(which.c_str(), n, to_format(format), &out.ptr, &all_pass));
  std::cout << out.str();
  return all_pass ? kExitOk : kExitFailure;
}

int run_bench(const Common& c, int repeat) {
  TreeHandle tree;
  load_tree(c.source, tree);
  const std::vector<int> s = subset_of(c);
  const std::uint64_t budget = resolve_budget(c.budget, tm_default_catalyst_budget());
  const std::vector<std::pair<std::string, tm_method>> routes{
      {"det", TM_METHOD_DET},
      {"theorem-a", TM_METHOD_THEOREM_A},
      {"richman", TM_METHOD_RICHMAN},
      {"catalyst", TM_METHOD_CATALYST}};
  nlohmann::ordered_json j;
  j["n"] = tm_tree_vertex_count(tree.ptr);
  j["subset"] = s;
  j["repeat"] = repeat;
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  std::ostringstream text, csv;
  csv << "route,value,seconds_per_call\n";
  for (const auto& [name, method] : routes) {
    std::string value;
    double seconds = 0;
    bool skipped = false;
    for (int r = 0; r < repeat && !skipped; ++r) {
      OwnedString out;
      const auto start = std::chrono::steady_clock::now();
      const tm_status status = tm_minor(tree.ptr, s.data(), s.size(), method, budget, &out.ptr);
      seconds += std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
      if (status == TM_ERR_BUDGET_EXCEEDED) {
        skipped = true;
      } else {
        check(status);
        value = out.str();
      }
    }
    nlohmann::ordered_json row;
    row["route"] = name;
    row["value"] = skipped ? nlohmann::ordered_json(nullptr) : nlohmann::ordered_json(value);
    row["seconds_per_call"] = skipped ? nlohmann::ordered_json(nullptr)
                                      : nlohmann::ordered_json(seconds / repeat);
    rows.push_back(row);
    csv << name << ',' << (skipped ? "" : value) << ','
        << (skipped ? "" : std::to_string(seconds / repeat)) << '\n';
    text << name << "  " << (skipped ? "over budget" : value + "  " +
                                                         std::to_string(seconds / repeat) + " s")
         << '\n';
  }
  j["routes"] = rows;
  if (c.format == "json") {
    std::cout << j.dump(2) << '\n';
  } else if (c.format == "csv") {
    std::cout << csv.str();
  } else {
    std::cout << text.str();
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Principal minors of tree distance matrices"};
  app.set_version_flag("--version", tm_version());
  app.require_subcommand(1);

  Common compute_opts, forest_opts, catalyst_opts, bench_opts;
  std::string method = "all", kind = "s-rooted", identity_check = "all";
  std::string identity_format = "json";
  bool classify = false;
  int identity_n = 6, repeat = 3;
  tm_verify_options verify_opts{0, 0, 0, 100, 0, 1, 0};
  std::optional<int> verify_n_max;
  std::optional<std::uint64_t> verify_budget;

  auto* compute = app.add_subcommand("compute", "Evaluate det D[S] by one or all routes");
  add_tree_source(compute, compute_opts);
  compute->add_option("--subset", compute_opts.subset, "Comma-separated vertices")->required();
  compute->add_option("--method", method, "Route")
      ->check(CLI::IsMember({"det", "theorem-a", "richman", "catalyst", "ck-corollary", "all"}));
  compute->add_option("--budget", compute_opts.budget, "Catalyst work budget");
  add_format(compute, compute_opts.format);

  auto* verify = app.add_subcommand("verify", "Exhaustive and seeded random invariant sweeps");
  verify->add_flag("--exhaustive", verify_opts.exhaustive, "Every labeled tree up to --n-max");
  verify->add_flag("--random", verify_opts.random, "Seeded random trials");
  verify->add_option("--n-max", verify_n_max, "Largest tree size")->check(CLI::Range(2, 64));
  verify->add_option("--trials", verify_opts.trials, "Random trials");
  verify->add_option("--seed", verify_opts.seed, "Master seed");
  verify->add_option("--threads", verify_opts.threads, "Worker threads")
      ->check(CLI::Range(1, 256));
  verify->add_option("--budget", verify_budget, "Catalyst work budget per case");

  auto* forests = app.add_subcommand("forests", "List S-rooted or (S,*)-rooted forests");
  add_tree_source(forests, forest_opts);
  forests->add_option("--subset", forest_opts.subset, "Comma-separated vertices")->required();
  forests->add_option("--kind", kind, "Forest family")
      ->check(CLI::IsMember({"s-rooted", "s-star"}));
  add_format(forests, forest_opts.format);

  catalyst_opts.format = "text";
  auto* catalysts = app.add_subcommand("catalysts", "Dump every S-catalyst");
  add_tree_source(catalysts, catalyst_opts);
  catalysts->add_option("--subset", catalyst_opts.subset, "Comma-separated vertices")->required();
  catalysts->add_flag("--classify", classify, "Group catalysts by induced arrowflow");
  catalysts->add_option("--budget", catalyst_opts.budget, "Catalyst work budget");
  add_format(catalysts, catalyst_opts.format);

  auto* identities = app.add_subcommand("identities", "Run the auxiliary identity checks");
  identities->add_option("--check", identity_check, "Which check")
      ->check(CLI::IsMember(
          {"all", "derangements", "network", "binomial", "beads", "interlacing", "dfs-example"}));
  identities->add_option("--n", identity_n, "Parameter for a single check");
  add_format(identities, identity_format);

  bench_opts.format = "text";
  auto* bench = app.add_subcommand("bench", "Time each route");
  add_tree_source(bench, bench_opts);
  bench->add_option("--subset", bench_opts.subset, "Comma-separated vertices")->required();
  bench->add_option("--budget", bench_opts.budget, "Catalyst work budget");
  bench->add_option("--repeat", repeat, "Calls per route")->check(CLI::PositiveNumber);
  add_format(bench, bench_opts.format);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*compute) return run_compute(compute_opts, method);
    if (*verify) return run_verify(verify_opts, verify_n_max, verify_budget);
    if (*forests) return run_forests(forest_opts, kind);
    if (*catalysts) return run_catalysts(catalyst_opts, classify);
    if (*identities) return run_identities(identity_check, identity_n, identity_format);
    if (*bench) return run_bench(bench_opts, repeat);
  } catch (const StatusError& e) {
    std::cerr << "error: " << tm_status_name(e.status()) << ": " << e.what() << '\n';
    return exit_code_for(e.status());
  } catch (const CLI::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
