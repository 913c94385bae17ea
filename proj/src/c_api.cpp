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

#include "ramsey_trails/ramsey_trails.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>

#include "ramsey_trails/enumerator.hpp"
#include "ramsey_trails/graph.hpp"
#include "ramsey_trails/graph6.hpp"
#include "ramsey_trails/lower_bound.hpp"
#include "ramsey_trails/prover.hpp"
#include "ramsey_trails/serialize.hpp"
#include "ramsey_trails/trail_solver.hpp"
#include "ramsey_trails/version.hpp"

namespace rt = ramsey_trails;

struct rt_graph {
  rt::Graph g;
};
struct rt_trail {
  rt::Trail t;
};
struct rt_table {
  rt::RamseyTable t;
};
struct rt_certificate {
  rt::WitnessCertificate c;
};
struct rt_trace {
  rt::ProofTrace t;
};

namespace {

thread_local std::string last_error;

struct Aborted {};

rt_status fail(rt_status status, std::string message) {
  last_error = std::move(message);
  return status;
}

rt_status graph6_status(rt::Graph6ErrorKind kind) {
  switch (kind) {
    case rt::Graph6ErrorKind::MalformedHeader: return RT_ERR_GRAPH6_HEADER;
    case rt::Graph6ErrorKind::InvalidCharacter: return RT_ERR_GRAPH6_CHARACTER;
    case rt::Graph6ErrorKind::LengthMismatch: return RT_ERR_GRAPH6_LENGTH;
    case rt::Graph6ErrorKind::NonzeroPadding: return RT_ERR_GRAPH6_PADDING;
  }
  return RT_ERR_INTERNAL;
}

// Runs body, translating exceptions into status codes.
template <typename F>
rt_status guard(F&& body) {
  last_error.clear();
  try {
    body();
    return RT_OK;
  } catch (const Aborted&) {
    return fail(RT_ERR_ABORTED, "stopped by callback");
  } catch (const rt::Graph6Error& e) {
    return fail(graph6_status(e.kind()), e.what());
  } catch (const rt::SerializationError& e) {
    return fail(RT_ERR_JSON, e.what());
  } catch (const rt::NotEulerianError& e) {
    return fail(RT_ERR_NOT_EULERIAN, e.what());
  } catch (const rt::ConstructionError& e) {
    return fail(RT_ERR_CONSTRUCTION, e.what());
  } catch (const std::out_of_range& e) {
    return fail(RT_ERR_OUT_OF_RANGE, e.what());
  } catch (const std::invalid_argument& e) {
    return fail(RT_ERR_INVALID_ARGUMENT, e.what());
  } catch (const std::bad_alloc&) {
    return fail(RT_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(RT_ERR_INTERNAL, e.what());
  }
}

char* copy_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

template <typename... P>
bool any_null(const P*... p) {
  return ((p == nullptr) || ...);
}

#define RT_REQUIRE(...) \
  if (any_null(__VA_ARGS__)) return fail(RT_ERR_NULL_ARGUMENT, "null argument")

}  // namespace

extern "C" {

const char* rt_version(void) { return rt::kVersion; }

const char* rt_status_name(rt_status status) {
  switch (status) {
    case RT_OK: return "ok";
    case RT_ERR_NULL_ARGUMENT: return "null argument";
    case RT_ERR_INVALID_ARGUMENT: return "invalid argument";
    case RT_ERR_OUT_OF_RANGE: return "out of range";
    case RT_ERR_GRAPH6_HEADER: return "graph6: malformed header";
    case RT_ERR_GRAPH6_CHARACTER: return "graph6: invalid character";
    case RT_ERR_GRAPH6_LENGTH: return "graph6: length mismatch";
    case RT_ERR_GRAPH6_PADDING: return "graph6: nonzero padding";
    case RT_ERR_JSON: return "malformed JSON document";
    case RT_ERR_NOT_EULERIAN: return "graph is not Eulerian";
    case RT_ERR_CONSTRUCTION: return "construction failed";
    case RT_ERR_ABORTED: return "aborted";
    case RT_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

const char* rt_last_error(void) { return last_error.c_str(); }

void rt_string_free(char* s) { std::free(s); }

rt_status rt_graph_new(int n, rt_graph** out) {
  RT_REQUIRE(out);
  return guard([&] { *out = new rt_graph{rt::Graph(n)}; });
}

rt_status rt_graph_from_graph6(const char* text, rt_graph** out) {
  RT_REQUIRE(text, out);
  return guard([&] { *out = new rt_graph{rt::decode_graph6(text)}; });
}

rt_status rt_graph_to_graph6(const rt_graph* g, char** out) {
  RT_REQUIRE(g, out);
  return guard([&] { *out = copy_string(rt::encode_graph6(g->g)); });
}

rt_status rt_graph_clone(const rt_graph* g, rt_graph** out) {
  RT_REQUIRE(g, out);
  return guard([&] { *out = new rt_graph{g->g}; });
}

rt_status rt_graph_complement(const rt_graph* g, rt_graph** out) {
  RT_REQUIRE(g, out);
  return guard([&] { *out = new rt_graph{g->g.complement()}; });
}

void rt_graph_free(rt_graph* g) { delete g; }

rt_status rt_graph_order(const rt_graph* g, int* out) {
  RT_REQUIRE(g, out);
  *out = g->g.order();
  return RT_OK;
}

rt_status rt_graph_edge_count(const rt_graph* g, int* out) {
  RT_REQUIRE(g, out);
  *out = g->g.edge_count();
  return RT_OK;
}

rt_status rt_graph_add_edge(rt_graph* g, int u, int v) {
  RT_REQUIRE(g);
  return guard([&] { g->g.add_edge(u, v); });
}

rt_status rt_graph_remove_edge(rt_graph* g, int u, int v) {
  RT_REQUIRE(g);
  return guard([&] { g->g.remove_edge(u, v); });
}

rt_status rt_graph_has_edge(const rt_graph* g, int u, int v, int* out) {
  RT_REQUIRE(g, out);
  return guard([&] {
    const int n = g->g.order();
    if (u < 0 || v < 0 || u >= n || v >= n) throw std::out_of_range("vertex id out of range");
    *out = u != v && g->g.has_edge(u, v) ? 1 : 0;
  });
}

void rt_trail_free(rt_trail* t) { delete t; }

rt_status rt_trail_vertex_count(const rt_trail* t, int* out) {
  RT_REQUIRE(t, out);
  *out = t->t.vertex_count();
  return RT_OK;
}

rt_status rt_trail_copy_vertices(const rt_trail* t, int* buf, size_t capacity) {
  RT_REQUIRE(t);
  if (capacity > 0) RT_REQUIRE(buf);
  auto vs = t->t.vertices();
  for (size_t i = 0; i < vs.size() && i < capacity; ++i) buf[i] = vs[i];
  return RT_OK;
}

rt_status rt_trail_to_json(const rt_trail* t, char** out) {
  RT_REQUIRE(t, out);
  return guard([&] { *out = copy_string(rt::to_json(rt::TrailResult{t->t.vertex_count(), t->t})); });
}

rt_status rt_longest_trail(const rt_graph* g, int prune, rt_trail** out) {
  RT_REQUIRE(g, out);
  return guard([&] {
    rt::SearchOptions options;
    options.prune = prune != 0;
    options.reduce_starts = prune != 0;
    *out = new rt_trail{rt::longest_trail(g->g, options).witness};
  });
}

rt_status rt_trail_with_vertices(const rt_graph* g, int k, rt_trail** out) {
  RT_REQUIRE(g, out);
  return guard([&] {
    auto t = rt::trail_with_vertices(g->g, k);
    *out = t ? new rt_trail{std::move(*t)} : nullptr;
  });
}

rt_status rt_t_value(const rt_graph* g, int* out) {
  RT_REQUIRE(g, out);
  return guard([&] { *out = rt::t_value(g->g); });
}

rt_status rt_eulerian_trail(const rt_graph* g, rt_trail** out) {
  RT_REQUIRE(g, out);
  return guard([&] { *out = new rt_trail{rt::eulerian_trail(g->g)}; });
}

rt_status rt_enumerate(int n, int jobs, rt_graph6_visitor visit, void* user) {
  if (visit == nullptr) return fail(RT_ERR_NULL_ARGUMENT, "null argument");
  return guard([&] {
    for (rt::CanonicalCode code : rt::enumerate_codes(n, jobs)) {
      const std::string text = rt::encode_graph6(rt::graph_from_code(n, code));
      if (visit(text.c_str(), user) != 0) throw Aborted{};
    }
  });
}

rt_status rt_value(int n, int jobs, int* out) {
  RT_REQUIRE(out);
  return guard([&] { *out = rt::value(n, jobs); });
}

rt_status rt_ramsey_table(int max_n, int jobs, const char* cache_dir, rt_table** out) {
  RT_REQUIRE(out);
  return guard([&] {
    std::optional<rt::ValueCache> cache;
    if (cache_dir != nullptr) cache.emplace(cache_dir);
    *out = new rt_table{rt::ramsey_table(max_n, jobs, cache ? &*cache : nullptr)};
  });
}

void rt_table_free(rt_table* t) { delete t; }

rt_status rt_table_max_n(const rt_table* t, int* out) {
  RT_REQUIRE(t, out);
  *out = t->t.max_n;
  return RT_OK;
}

rt_status rt_table_value(const rt_table* t, int n, int* out) {
  RT_REQUIRE(t, out);
  auto it = t->t.values.find(n);
  if (it == t->t.values.end()) return fail(RT_ERR_OUT_OF_RANGE, "value(" + std::to_string(n) + ") not in table");
  *out = it->second;
  return RT_OK;
}

rt_status rt_table_resolved_up_to(const rt_table* t, int* out) {
  RT_REQUIRE(t, out);
  *out = t->t.resolved_up_to();
  return RT_OK;
}

rt_status rt_table_ramsey(const rt_table* t, int k, int* out) {
  RT_REQUIRE(t, out);
  auto it = t->t.ramsey.find(k);
  if (it == t->t.ramsey.end()) {
    return fail(RT_ERR_OUT_OF_RANGE, "R(T_" + std::to_string(k) + ") unresolved at max_n " + std::to_string(t->t.max_n));
  }
  *out = it->second;
  return RT_OK;
}

rt_status rt_table_to_json(const rt_table* t, char** out) {
  RT_REQUIRE(t, out);
  return guard([&] { *out = copy_string(rt::to_json(t->t)); });
}

rt_status rt_lb_formula(int k, int* out) {
  RT_REQUIRE(out);
  return guard([&] { *out = rt::lb_formula(k); });
}

rt_status rt_complete_graph_order(uint64_t m, double* out) {
  RT_REQUIRE(out);
  return guard([&] { *out = rt::complete_graph_order(m); });
}

rt_status rt_witness(int k, rt_evidence evidence, rt_certificate** out) {
  RT_REQUIRE(out);
  return guard([&] {
    rt::Evidence ev = rt::default_evidence(k);
    if (evidence == RT_EVIDENCE_EXHAUSTIVE) {
      ev = rt::Evidence::Exhaustive;
    } else if (evidence == RT_EVIDENCE_STRUCTURAL) {
      ev = rt::Evidence::Structural;
    } else if (evidence != RT_EVIDENCE_AUTO) {
      throw std::invalid_argument("unknown evidence kind");
    }
    *out = new rt_certificate{rt::witness(k, ev)};
  });
}

rt_status rt_certificate_from_json(const char* json, rt_certificate** out) {
  RT_REQUIRE(json, out);
  return guard([&] { *out = new rt_certificate{rt::certificate_from_json(json)}; });
}

void rt_certificate_free(rt_certificate* c) { delete c; }

rt_status rt_certificate_k(const rt_certificate* c, int* out) {
  RT_REQUIRE(c, out);
  *out = c->c.k;
  return RT_OK;
}

rt_status rt_certificate_bound(const rt_certificate* c, int* out) {
  RT_REQUIRE(c, out);
  *out = c->c.bound;
  return RT_OK;
}

rt_status rt_certificate_evidence(const rt_certificate* c, rt_evidence* out) {
  RT_REQUIRE(c, out);
  *out = c->c.evidence == rt::Evidence::Exhaustive ? RT_EVIDENCE_EXHAUSTIVE : RT_EVIDENCE_STRUCTURAL;
  return RT_OK;
}

rt_status rt_certificate_graph(const rt_certificate* c, rt_graph** out) {
  RT_REQUIRE(c, out);
  return guard([&] { *out = new rt_graph{c->c.graph}; });
}

rt_status rt_certificate_construction(const rt_certificate* c, char** out) {
  RT_REQUIRE(c, out);
  return guard([&] { *out = copy_string(c->c.construction); });
}

rt_status rt_certificate_to_json(const rt_certificate* c, char** out) {
  RT_REQUIRE(c, out);
  return guard([&] { *out = copy_string(rt::to_json(c->c)); });
}

rt_status rt_certificate_check(const rt_certificate* c, rt_certificate_status* status, char** detail) {
  RT_REQUIRE(c, status);
  return guard([&] {
    const rt::CertificateCheck check = rt::check_certificate(c->c);
    switch (check.status) {
      case rt::CertificateStatus::Valid: *status = RT_CERTIFICATE_VALID; break;
      case rt::CertificateStatus::False: *status = RT_CERTIFICATE_FALSE; break;
      case rt::CertificateStatus::Malformed: *status = RT_CERTIFICATE_MALFORMED; break;
    }
    if (detail != nullptr) *detail = copy_string(check.detail);
  });
}

rt_status rt_find_trail(const rt_graph* g, int base_threshold, rt_trace** out) {
  RT_REQUIRE(g, out);
  return guard([&] {
    rt::ProverOptions options;
    if (base_threshold > 0) options.base_threshold = base_threshold;
    *out = new rt_trace{rt::find_trail(g->g, options)};
  });
}

rt_status rt_trace_from_json(const char* json, rt_trace** out) {
  RT_REQUIRE(json, out);
  return guard([&] { *out = new rt_trace{rt::trace_from_json(json)}; });
}

void rt_trace_free(rt_trace* t) { delete t; }

rt_status rt_trace_side(const rt_trace* t, rt_side* out) {
  RT_REQUIRE(t, out);
  *out = t->t.side == rt::Side::G ? RT_SIDE_G : RT_SIDE_CO_G;
  return RT_OK;
}

rt_status rt_trace_trail(const rt_trace* t, rt_trail** out) {
  RT_REQUIRE(t, out);
  return guard([&] { *out = new rt_trail{t->t.trail}; });
}

rt_status rt_trace_fallback_used(const rt_trace* t, int* out) {
  RT_REQUIRE(t, out);
  *out = t->t.fallback_used ? 1 : 0;
  return RT_OK;
}

rt_status rt_trace_to_json(const rt_trace* t, char** out) {
  RT_REQUIRE(t, out);
  return guard([&] { *out = copy_string(rt::to_json(t->t)); });
}

rt_status rt_trace_validate(const rt_graph* g, const rt_trace* t, int* ok, char** message) {
  RT_REQUIRE(g, t, ok);
  return guard([&] {
    const rt::TraceCheck check = rt::validate_trace(g->g, t->t);
    *ok = check.ok ? 1 : 0;
    if (message != nullptr) *message = copy_string(check.message);
  });
}

}  // extern "C"
