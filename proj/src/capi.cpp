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


#include "treeminor/treeminor.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

#include "treeminor/catalyst.hpp"
#include "treeminor/errors.hpp"
#include "treeminor/minors.hpp"
#include "treeminor/report.hpp"
#include "treeminor/tree.hpp"
#include "treeminor/verify.hpp"

struct tm_tree {
  treeminor::Tree tree;
};

namespace {

using namespace treeminor;

thread_local std::string last_error;

tm_status fail(tm_status status, const std::string& message) {
  last_error = message;
  return status;
}

template <class Body>
tm_status guarded(Body&& body) {
  try {
    last_error.clear();
    body();
    return TM_OK;
  } catch (const Error& e) {
    return fail(static_cast<tm_status>(static_cast<int>(e.code())), e.what());
  } catch (const std::bad_alloc&) {
    return fail(TM_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(TM_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(TM_ERR_INTERNAL, "unknown failure");
  }
}

char* duplicate(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

OutputFormat to_format(tm_format f) {
  switch (f) {
    case TM_FORMAT_JSON: return OutputFormat::kJson;
    case TM_FORMAT_CSV: return OutputFormat::kCsv;
    case TM_FORMAT_TEXT: return OutputFormat::kText;
  }
  throw Error(ErrorCode::kInvalidArgument, "unknown format");
}

SubsetS make_subset(const tm_tree* tree, const int* subset, size_t m) {
  if (m > 0 && !subset) throw Error(ErrorCode::kInvalidArgument, "subset pointer is NULL");
  return SubsetS::from_members(std::vector<Vertex>(subset, subset + m),
                               tree->tree.vertex_count());
}

}  // namespace

extern "C" {

const char* tm_version(void) { return "0.1.0"; }

const char* tm_status_name(tm_status status) {
  switch (status) {
    case TM_OK: return "OK";
    case TM_ERR_NULL_ARGUMENT: return "NullArgument";
    case TM_ERR_INTERNAL: return "Internal";
    default: break;
  }
  const int code = static_cast<int>(status);
  if (code >= 1 && code <= static_cast<int>(ErrorCode::kIdentityViolation)) {
    return error_code_name(static_cast<ErrorCode>(code)).data();
  }
  return "Unknown";
}

const char* tm_last_error(void) { return last_error.c_str(); }

uint64_t tm_default_catalyst_budget(void) { return kDefaultCatalystBudget; }

void tm_string_free(char* s) { std::free(s); }

tm_status tm_tree_from_edges(int n, const int* edge_pairs, size_t edge_count, tm_tree** out) {
  if (!out || (edge_count > 0 && !edge_pairs)) return fail(TM_ERR_NULL_ARGUMENT, "NULL argument");
  *out = nullptr;
  return guarded([&] {
    std::vector<Edge> edges(edge_count);
    for (size_t i = 0; i < edge_count; ++i) edges[i] = {edge_pairs[2 * i], edge_pairs[2 * i + 1]};
    *out = new tm_tree{Tree::from_edge_list(n, edges)};
  });
}

tm_status tm_tree_from_prufer(const int* seq, size_t length, tm_tree** out) {
  if (!out || (length > 0 && !seq)) return fail(TM_ERR_NULL_ARGUMENT, "NULL argument");
  *out = nullptr;
  return guarded([&] {
    *out = new tm_tree{Tree::from_prufer(std::span<const int>(seq, length))};
  });
}

tm_status tm_tree_random(int n, uint64_t seed, tm_tree** out) {
  if (!out) return fail(TM_ERR_NULL_ARGUMENT, "NULL argument");
  *out = nullptr;
  return guarded([&] { *out = new tm_tree{random_tree(n, seed)}; });
}

tm_status tm_tree_from_text(const char* text, tm_tree** out) {
  if (!out || !text) return fail(TM_ERR_NULL_ARGUMENT, "NULL argument");
  *out = nullptr;
  return guarded([&] { *out = new tm_tree{parse_tree_text(text)}; });
}

void tm_tree_free(tm_tree* tree) { delete tree; }

int tm_tree_vertex_count(const tm_tree* tree) { return tree ? tree->tree.vertex_count() : 0; }

tm_status tm_tree_to_prufer(const tm_tree* tree, int* out, size_t capacity, size_t* written) {
  if (!tree || !written || (capacity > 0 && !out)) {
    return fail(TM_ERR_NULL_ARGUMENT, "NULL argument");
  }
  return guarded([&] {
    const std::vector<int> seq = to_prufer(tree->tree);
    *written = seq.size();
    for (size_t i = 0; i < seq.size() && i < capacity; ++i) out[i] = seq[i];
  });
}

tm_status tm_tree_to_text(const tm_tree* tree, char** out) {
  if (!tree || !out) return fail(TM_ERR_NULL_ARGUMENT, "NULL argument");
  *out = nullptr;
  return guarded([&] { *out = duplicate(format_tree_text(tree->tree)); });
}

tm_status tm_minor(const tm_tree* tree, const int* subset, size_t m, tm_method method,
                   uint64_t budget, char** out_decimal) {
  if (!tree || !out_decimal) return fail(TM_ERR_NULL_ARGUMENT, "NULL argument");
  *out_decimal = nullptr;
  return guarded([&] {
    const SubsetS s = make_subset(tree, subset, m);
    const Tree& t = tree->tree;
    std::string value;
    switch (method) {
      case TM_METHOD_DET: value = to_decimal(minor_determinant(t, s)); break;
      case TM_METHOD_THEOREM_A: value = to_decimal(minor_theorem_a(t, s)); break;
      case TM_METHOD_RICHMAN: value = to_decimal(minor_richman(t, s)); break;
      case TM_METHOD_CATALYST:
        value = to_decimal(catalyst_signed_sum(TreeMetric(t), s, budget));
        break;
      case TM_METHOD_CK_COROLLARY: {
        const auto v = minor_ck_corollary(t, s);
        value = v ? to_decimal(*v) : std::string();
        break;
      }
      default: throw Error(ErrorCode::kInvalidArgument, "unknown method");
    }
    *out_decimal = duplicate(value);
  });
}

tm_status tm_cross_verify(const tm_tree* tree, const int* subset, size_t m, uint64_t budget,
                          tm_format format, char** out, int* agree) {
  if (!tree || !out) return fail(TM_ERR_NULL_ARGUMENT, "NULL argument");
  *out = nullptr;
  return guarded([&] {
    const MinorReport r = cross_verify(tree->tree, make_subset(tree, subset, m), budget);
    *out = duplicate(format_minor_report(r, to_format(format)));
    if (agree) *agree = r.agree ? 1 : 0;
  });
}

tm_status tm_forests(const tm_tree* tree, const int* subset, size_t m, tm_forest_kind kind,
                     tm_format format, char** out) {
  if (!tree || !out) return fail(TM_ERR_NULL_ARGUMENT, "NULL argument");
  *out = nullptr;
  return guarded([&] {
    const ForestKind k = kind == TM_FORESTS_S_ROOTED ? ForestKind::kSRooted : ForestKind::kSStar;
    *out = duplicate(format_forests(tree->tree, make_subset(tree, subset, m), k,
                                    to_format(format)));
  });
}

tm_status tm_catalysts(const tm_tree* tree, const int* subset, size_t m, uint64_t budget,
                       int classify, tm_format format, char** out) {
  if (!tree || !out) return fail(TM_ERR_NULL_ARGUMENT, "NULL argument");
  *out = nullptr;
  return guarded([&] {
    *out = duplicate(format_catalysts(tree->tree, make_subset(tree, subset, m), budget,
                                      classify != 0, to_format(format)));
  });
}

tm_status tm_identities(const char* check, int n, tm_format format, char** out, int* all_pass) {
  if (!check || !out) return fail(TM_ERR_NULL_ARGUMENT, "NULL argument");
  *out = nullptr;
  return guarded([&] {
    const auto records = run_identity_checks(check, n);
    bool ok = true;
    for (const auto& r : records) ok = ok && r.pass;
    *out = duplicate(format_identity_records(records, to_format(format)));
    if (all_pass) *all_pass = ok ? 1 : 0;
  });
}

tm_status tm_verify(const tm_verify_options* options, char** out_json, int* pass) {
  if (!options || !out_json) return fail(TM_ERR_NULL_ARGUMENT, "NULL argument");
  *out_json = nullptr;
  return guarded([&] {
    VerifyOptions o;
    o.exhaustive = options->exhaustive != 0;
    o.random = options->random != 0;
    o.n_max = options->n_max;
    o.trials = options->trials;
    o.seed = options->seed;
    o.threads = options->threads;
    o.catalyst_budget = options->catalyst_budget;
    const VerifyResult r = run_verify(o);
    *out_json = duplicate(verify_to_json(r));
    if (pass) *pass = r.ok() ? 1 : 0;
  });
}

}  // extern "C"
