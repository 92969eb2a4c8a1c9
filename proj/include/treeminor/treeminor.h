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


#ifndef TREEMINOR_TREEMINOR_H
#define TREEMINOR_TREEMINOR_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  ifdef TREEMINOR_BUILDING_LIBRARY
#    define TM_API __declspec(dllexport)
#  else
#    define TM_API __declspec(dllimport)
#  endif
#else
#  define TM_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef struct tm_tree tm_tree;

typedef enum tm_status {
  TM_OK = 0,
  TM_ERR_NOT_A_TREE = 1,
  TM_ERR_VERTEX_OUT_OF_RANGE = 2,
  TM_ERR_VALUE_OUT_OF_RANGE = 3,
  TM_ERR_SUBSET_TOO_SMALL = 4,
  TM_ERR_BUDGET_EXCEEDED = 5,
  TM_ERR_WRONG_FOREST_CLASS = 6,
  TM_ERR_NOT_ZERO_SUM = 7,
  TM_ERR_NOT_QUOTIENTABLE = 8,
  TM_ERR_CLASSIFICATION_IMPOSSIBLE = 9,
  TM_ERR_PARSE = 10,
  TM_ERR_INVALID_ARGUMENT = 11,
  TM_ERR_IDENTITY_VIOLATION = 12,
  TM_ERR_NULL_ARGUMENT = 100,
  TM_ERR_INTERNAL = 101
} tm_status;

typedef enum tm_method {
  TM_METHOD_DET = 0,
  TM_METHOD_THEOREM_A = 1,
  TM_METHOD_RICHMAN = 2,
  TM_METHOD_CATALYST = 3,
  TM_METHOD_CK_COROLLARY = 4
} tm_method;

typedef enum tm_format {
  TM_FORMAT_JSON = 0,
  TM_FORMAT_CSV = 1,
  TM_FORMAT_TEXT = 2
} tm_format;

typedef enum tm_forest_kind {
  TM_FORESTS_S_ROOTED = 0,
  TM_FORESTS_S_STAR = 1
} tm_forest_kind;

typedef struct tm_verify_options {
  int exhaustive;
  int random;
  int n_max;
  int trials;
  uint64_t seed;
  int threads;
  uint64_t catalyst_budget;
} tm_verify_options;

/* Strings returned through char** are owned by the caller; release them
   with tm_string_free. On failure *out is left NULL and tm_last_error()
   describes the problem for the calling thread. */

TM_API const char* tm_version(void);
TM_API const char* tm_status_name(tm_status status);
TM_API const char* tm_last_error(void);
TM_API uint64_t tm_default_catalyst_budget(void);
TM_API void tm_string_free(char* s);

/* edge_pairs holds 2 * edge_count vertex labels u0 v0 u1 v1 ... */
TM_API tm_status tm_tree_from_edges(int n, const int* edge_pairs, size_t edge_count,
                                    tm_tree** out);
TM_API tm_status tm_tree_from_prufer(const int* seq, size_t length, tm_tree** out);
TM_API tm_status tm_tree_random(int n, uint64_t seed, tm_tree** out);
/* "n" on the first line, then one "u v" per line; '#' starts a comment. */
TM_API tm_status tm_tree_from_text(const char* text, tm_tree** out);
TM_API void tm_tree_free(tm_tree* tree);

TM_API int tm_tree_vertex_count(const tm_tree* tree);
/* Writes up to capacity entries; *written receives n - 2. */
TM_API tm_status tm_tree_to_prufer(const tm_tree* tree, int* out, size_t capacity,
                                   size_t* written);
TM_API tm_status tm_tree_to_text(const tm_tree* tree, char** out);

/* Decimal value of det D[S] by one route. TM_METHOD_CK_COROLLARY yields an
   empty string when S does not induce a subtree. */
TM_API tm_status tm_minor(const tm_tree* tree, const int* subset, size_t m, tm_method method,
                          uint64_t budget, char** out_decimal);

/* All routes; *agree (optional) receives 1 when every present value matches. */
TM_API tm_status tm_cross_verify(const tm_tree* tree, const int* subset, size_t m,
                                 uint64_t budget, tm_format format, char** out, int* agree);

TM_API tm_status tm_forests(const tm_tree* tree, const int* subset, size_t m,
                            tm_forest_kind kind, tm_format format, char** out);

TM_API tm_status tm_catalysts(const tm_tree* tree, const int* subset, size_t m,
                              uint64_t budget, int classify, tm_format format, char** out);

/* check: derangements, network, binomial, beads, interlacing, dfs-example
   or all. *all_pass (optional) receives 1 when every record passes. */
TM_API tm_status tm_identities(const char* check, int n, tm_format format, char** out,
                               int* all_pass);

TM_API tm_status tm_verify(const tm_verify_options* options, char** out_json, int* pass);

#ifdef __cplusplus
}
#endif

#endif /* TREEMINOR_TREEMINOR_H */
