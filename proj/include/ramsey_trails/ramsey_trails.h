// Copyright 2026 The ramsey-trails Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

/*
 * C interface to the ramsey-trails library.
 *
 * Every function returns an rt_status. Results come back through out
 * parameters; objects are opaque handles released with the matching
 * rt_*_free. Strings returned through char** are heap copies owned by the
 * caller and released with rt_string_free. On failure, rt_last_error()
 * holds a message for the calling thread until its next library call.
 */
#ifndef RAMSEY_TRAILS_H_
#define RAMSEY_TRAILS_H_

#include <stddef.h>
#include <stdint.h>

#if defined(RT_BUILDING_LIBRARY)
#define RT_API __attribute__((visibility("default")))
#else
#define RT_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum rt_status {
  RT_OK = 0,
  RT_ERR_NULL_ARGUMENT = 1,
  RT_ERR_INVALID_ARGUMENT = 2,
  RT_ERR_OUT_OF_RANGE = 3,
  RT_ERR_GRAPH6_HEADER = 4,
  RT_ERR_GRAPH6_CHARACTER = 5,
  RT_ERR_GRAPH6_LENGTH = 6,
  RT_ERR_GRAPH6_PADDING = 7,
  RT_ERR_JSON = 8,
  RT_ERR_NOT_EULERIAN = 9,
  RT_ERR_CONSTRUCTION = 10,
  RT_ERR_ABORTED = 11,
  RT_ERR_INTERNAL = 12
} rt_status;

typedef enum rt_side { RT_SIDE_G = 0, RT_SIDE_CO_G = 1 } rt_side;

typedef enum rt_evidence {
  RT_EVIDENCE_AUTO = -1,  /* exhaustive for k <= 30, structural above */
  RT_EVIDENCE_EXHAUSTIVE = 0,
  RT_EVIDENCE_STRUCTURAL = 1
} rt_evidence;

typedef enum rt_certificate_status {
  RT_CERTIFICATE_VALID = 0,
  RT_CERTIFICATE_FALSE = 1,
  RT_CERTIFICATE_MALFORMED = 2
} rt_certificate_status;

typedef struct rt_graph rt_graph;
typedef struct rt_trail rt_trail;
typedef struct rt_table rt_table;
typedef struct rt_certificate rt_certificate;
typedef struct rt_trace rt_trace;

RT_API const char* rt_version(void);
RT_API const char* rt_status_name(rt_status status);
RT_API const char* rt_last_error(void);
RT_API void rt_string_free(char* s);

/* Graphs: simple undirected, vertices 0..n-1, 1 <= n <= 4096. */
RT_API rt_status rt_graph_new(int n, rt_graph** out);
RT_API rt_status rt_graph_from_graph6(const char* text, rt_graph** out);
RT_API rt_status rt_graph_to_graph6(const rt_graph* g, char** out);
RT_API rt_status rt_graph_clone(const rt_graph* g, rt_graph** out);
RT_API rt_status rt_graph_complement(const rt_graph* g, rt_graph** out);
RT_API void rt_graph_free(rt_graph* g);
RT_API rt_status rt_graph_order(const rt_graph* g, int* out);
RT_API rt_status rt_graph_edge_count(const rt_graph* g, int* out);
RT_API rt_status rt_graph_add_edge(rt_graph* g, int u, int v);
RT_API rt_status rt_graph_remove_edge(rt_graph* g, int u, int v);
RT_API rt_status rt_graph_has_edge(const rt_graph* g, int u, int v, int* out);

/* Trails: vertex sequences, vertices counted with multiplicity. */
RT_API void rt_trail_free(rt_trail* t);
RT_API rt_status rt_trail_vertex_count(const rt_trail* t, int* out);
/* Copies min(capacity, vertex count) vertices into buf. */
RT_API rt_status rt_trail_copy_vertices(const rt_trail* t, int* buf, size_t capacity);
/* {"schema_version","vertex_count","vertices"} */
RT_API rt_status rt_trail_to_json(const rt_trail* t, char** out);

/* Exact trail search; graphs with at most 64 vertices. prune = 0 runs the
   plain depth-first search without bounds or shortcuts. */
RT_API rt_status rt_longest_trail(const rt_graph* g, int prune, rt_trail** out);
/* *out is NULL when g has no trail with k vertices. */
RT_API rt_status rt_trail_with_vertices(const rt_graph* g, int k, rt_trail** out);
RT_API rt_status rt_t_value(const rt_graph* g, int* out);
RT_API rt_status rt_eulerian_trail(const rt_graph* g, rt_trail** out);

/* Enumeration of isomorphism classes, 1 <= n <= 9. The visitor gets one
   graph6 string per class in canonical order; a nonzero return stops the
   walk with RT_ERR_ABORTED. jobs <= 0 uses every available core. */
typedef int (*rt_graph6_visitor)(const char* graph6, void* user);
RT_API rt_status rt_enumerate(int n, int jobs, rt_graph6_visitor visit, void* user);

/* value(n) = min over graphs on n vertices of t(G), 2 <= n <= 9. */
RT_API rt_status rt_value(int n, int jobs, int* out);

/* R(T_k, T_k) for every k settled by value(2..max_n). cache_dir may be
   NULL to disable the on-disk value cache. */
RT_API rt_status rt_ramsey_table(int max_n, int jobs, const char* cache_dir, rt_table** out);
RT_API void rt_table_free(rt_table* t);
RT_API rt_status rt_table_max_n(const rt_table* t, int* out);
RT_API rt_status rt_table_value(const rt_table* t, int n, int* out);
/* Largest k with a known R(T_k, T_k). */
RT_API rt_status rt_table_resolved_up_to(const rt_table* t, int* out);
/* RT_ERR_OUT_OF_RANGE when k is not settled by this table. */
RT_API rt_status rt_table_ramsey(const rt_table* t, int k, int* out);
RT_API rt_status rt_table_to_json(const rt_table* t, char** out);

/* Closed-form lower bound ceil((1 + sqrt(16k - 7)) / 2), k >= 2. */
RT_API rt_status rt_lb_formula(int k, int* out);
/* n with n(n-1)/2 = m, not necessarily integral. */
RT_API rt_status rt_complete_graph_order(uint64_t m, double* out);

/* Lower-bound witnesses. */
RT_API rt_status rt_witness(int k, rt_evidence evidence, rt_certificate** out);
RT_API rt_status rt_certificate_from_json(const char* json, rt_certificate** out);
RT_API void rt_certificate_free(rt_certificate* c);
RT_API rt_status rt_certificate_k(const rt_certificate* c, int* out);
RT_API rt_status rt_certificate_bound(const rt_certificate* c, int* out);
RT_API rt_status rt_certificate_evidence(const rt_certificate* c, rt_evidence* out);
RT_API rt_status rt_certificate_graph(const rt_certificate* c, rt_graph** out);
RT_API rt_status rt_certificate_construction(const rt_certificate* c, char** out);
RT_API rt_status rt_certificate_to_json(const rt_certificate* c, char** out);
/* detail may be NULL; otherwise receives an explanation (empty when valid). */
RT_API rt_status rt_certificate_check(const rt_certificate* c, rt_certificate_status* status, char** detail);

/* Constructive upper bound: a trail with exactly g's order k vertices in g
   or its complement, 2 <= k <= 64. base_threshold <= 0 selects the default. */
RT_API rt_status rt_find_trail(const rt_graph* g, int base_threshold, rt_trace** out);
RT_API rt_status rt_trace_from_json(const char* json, rt_trace** out);
RT_API void rt_trace_free(rt_trace* t);
RT_API rt_status rt_trace_side(const rt_trace* t, rt_side* out);
RT_API rt_status rt_trace_trail(const rt_trace* t, rt_trail** out);
RT_API rt_status rt_trace_fallback_used(const rt_trace* t, int* out);
RT_API rt_status rt_trace_to_json(const rt_trace* t, char** out);
/* *ok = 1 when the trace holds for g; message may be NULL. */
RT_API rt_status rt_trace_validate(const rt_graph* g, const rt_trace* t, int* ok, char** message);

#ifdef __cplusplus
}
#endif

#endif /* RAMSEY_TRAILS_H_ */
