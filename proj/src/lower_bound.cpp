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

#include "ramsey_trails/lower_bound.hpp"

#include <cmath>
#include <sstream>
#include <vector>

#include "ramsey_trails/graph6.hpp"

namespace ramsey_trails {

std::uint64_t isqrt(std::uint64_t x) {
  auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(x)));
  while (r * r > x) --r;
  while ((r + 1) * (r + 1) <= x) ++r;
  return r;
}

double complete_graph_order(std::uint64_t m) {
  return (1.0 + std::sqrt(1.0 + 8.0 * static_cast<double>(m))) / 2.0;
}

std::optional<std::uint64_t> complete_graph_order_exact(std::uint64_t m) {
  const std::uint64_t d = 1 + 8 * m;
  const std::uint64_t s = isqrt(d);
  if (s * s != d) return std::nullopt;
  return (1 + s) / 2;
}

int lb_formula(int k) {
  if (k < 2) throw std::out_of_range("lb_formula needs k >= 2");
  if (k <= 6) return k;
  // smallest c with 2c - 1 >= sqrt(16k - 7)
  const auto d = static_cast<std::uint64_t>(16) * static_cast<std::uint64_t>(k) - 7;
  auto c = static_cast<std::uint64_t>(isqrt(d) / 2);
  while ((2 * c - 1) * (2 * c - 1) < d || c == 0) ++c;
  return static_cast<int>(c);
}

int witness_order(int k) {
  if (k < 7) throw std::out_of_range("witness_order needs k >= 7");
  const long limit = 2L * k - 2;
  long n = 1;
  while ((n + 1) * n / 2 <= limit) ++n;
  return static_cast<int>(n);
}

const char* to_string(Evidence e) { return e == Evidence::Exhaustive ? "exhaustive" : "structural"; }

std::optional<Evidence> evidence_from_string(const std::string& s) {
  if (s == "exhaustive") return Evidence::Exhaustive;
  if (s == "structural") return Evidence::Structural;
  return std::nullopt;
}

Evidence default_evidence(int k) { return k <= 30 ? Evidence::Exhaustive : Evidence::Structural; }

const char* to_string(CertificateStatus s) {
  switch (s) {
    case CertificateStatus::Valid: return "valid";
    case CertificateStatus::False: return "false";
    case CertificateStatus::Malformed: return "malformed";
  }
  return "?";
}

WitnessCertificate witness_small(int k) {
  if (k < 2 || k > 6) throw std::out_of_range("witness_small needs 2 <= k <= 6");
  WitnessCertificate c;
  c.k = k;
  c.evidence = Evidence::Exhaustive;
  switch (k) {
    case 2:
      c.graph = Graph(1);
      c.construction = "complete";
      break;
    case 3:
      c.graph = Graph::complete(2);
      c.construction = "complete";
      break;
    case 4: {
      const Edge e[] = {{0, 2}};
      c.graph = Graph::from_edges(3, e);
      c.construction = "figure";
      break;
    }
    case 5: {
      const Edge e[] = {{0, 3}, {2, 3}, {1, 3}};
      c.graph = Graph::from_edges(4, e);
      c.construction = "figure";
      break;
    }
    default: {
      // triangle on {0,1,4} with pendant edges {4,3} and {1,2}
      const Edge e[] = {{0, 4}, {0, 1}, {1, 4}, {3, 4}, {1, 2}};
      c.graph = Graph::from_edges(5, e);
      c.construction = "figure";
      break;
    }
  }
  c.bound = c.graph.order() + 1;
  return c;
}

namespace {

int odd_vertex_count(const Graph& g) {
  int odd = 0;
  for (Vertex v = 0; v < g.order(); ++v) odd += g.degree(v) & 1;
  return odd;
}

std::string describe(const Graph& g) {
  std::ostringstream os;
  os << "n=" << g.order() << " edges=" << g.edge_count() << " odd=" << odd_vertex_count(g);
  if (g.order() <= 62) os << " graph6=" << encode_graph6(g);
  return os.str();
}

// Cases |E| = 2k-3 and |E| = 2k-2: Hamiltonian cycle C plus a trail T from
// the even remainder, then two cycle edges removed to leave exactly four
// odd vertices.
Graph cycle_plus_trail(int k, int n, std::string& construction) {
  Graph cycle = Graph::cycle(n);
  Graph remainder = Graph::complete(n);
  for (const Edge& e : cycle.edges()) remainder.remove_edge(e.u, e.v);
  const bool even = n % 2 == 0;
  if (even) {
    for (Vertex i = 0; i < n / 2; ++i) remainder.remove_edge(i, i + n / 2);
  }
  const int needed = k + 1 - n;
  if (needed < 0) {
    throw ConstructionError("k=" + std::to_string(k) + " n=" + std::to_string(n) +
                            ": cycle alone exceeds k+1 edges");
  }

  Trail prefix;
  EulerClass cls = euler_classify(remainder);
  if (cls.kind == EulerKind::Eulerian && remainder.edge_count() >= needed) {
    prefix = eulerian_trail(remainder).prefix(needed + 1);
  } else {
    // The even-order remainder splits into two triangles at n = 6. Any trail
    // of the required length outside C serves the same purpose.
    Graph outside = Graph::complete(n);
    for (const Edge& e : cycle.edges()) outside.remove_edge(e.u, e.v);
    std::optional<Trail> t = outside.fits_word() ? trail_with_vertices(outside, needed + 1) : std::nullopt;
    if (!t) {
      throw ConstructionError("k=" + std::to_string(k) + ": remainder " + describe(remainder) + " (" +
                              (cls.connected ? "connected" : "disconnected") + ") has no trail with " +
                              std::to_string(needed) + " edges");
    }
    prefix = *t;
    construction += "+solver-trail";
  }

  Graph s = cycle;
  for (const Edge& e : prefix.edges()) s.add_edge(e.u, e.v);
  if (s.edge_count() != k + 1 || euler_classify(s).kind == EulerKind::Neither) {
    throw ConstructionError("k=" + std::to_string(k) + ": S = C + T is not an Euler graph with k+1 edges: " +
                            describe(s));
  }
  for (Vertex a = 0; a < n; ++a) {
    for (Vertex b = a + 1; b < n; ++b) {
      Graph trimmed = s;
      trimmed.remove_edge(a, (a + 1) % n);
      trimmed.remove_edge(b, (b + 1) % n);
      if (odd_vertex_count(trimmed) == 4) return trimmed;
    }
  }
  throw ConstructionError("k=" + std::to_string(k) + ": no pair of cycle edges leaves four odd vertices in " +
                          describe(s));
}

}  // namespace

WitnessCertificate witness_large(int k, Evidence evidence) {
  if (k < 7) throw std::out_of_range("witness_large needs k >= 7");
  const int n = witness_order(k);
  if (n > kMaxVertices) throw std::out_of_range("witness order exceeds vertex cap");
  const long total = static_cast<long>(n) * (n - 1) / 2;

  WitnessCertificate c;
  c.k = k;
  c.evidence = evidence;
  c.bound = n + 1;
  if (total <= 2L * k - 4) {
    c.construction = "lemma5-case1";
    Graph g(n);
    const long half = (total + 1) / 2;
    long taken = 0;
    for (Vertex u = 0; u < n && taken < half; ++u) {
      for (Vertex v = u + 1; v < n && taken < half; ++v, ++taken) g.add_edge(u, v);
    }
    c.graph = std::move(g);
  } else {
    const bool case2 = total == 2L * k - 3;
    const bool even = n % 2 == 0;
    if (case2) {
      c.construction = even ? "lemma5-case2-2" : "lemma5-case2-1";
    } else {
      c.construction = even ? "lemma5-case3-even" : "lemma5-case3-odd";
    }
    c.graph = cycle_plus_trail(k, n, c.construction);
  }
  return c;
}

WitnessCertificate witness(int k, Evidence evidence) {
  WitnessCertificate c = k <= 6 ? witness_small(k) : witness_large(k, evidence);
  c.evidence = evidence;
  return c;
}

bool structural_bound_holds(const Graph& g, int k) {
  for (const Component& c : edge_components(g)) {
    if (component_trail_bound(c) > k - 2) return false;
  }
  return true;
}

CertificateCheck check_certificate(const WitnessCertificate& c, const SearchOptions& options) {
  if (c.k < 2) return {CertificateStatus::Malformed, "k must be at least 2"};
  if (c.bound != c.graph.order() + 1) {
    return {CertificateStatus::Malformed, "bound " + std::to_string(c.bound) + " does not match witness order " +
                                              std::to_string(c.graph.order())};
  }
  const Graph co = c.graph.complement();
  if (c.evidence == Evidence::Exhaustive) {
    if (!c.graph.fits_word()) return {CertificateStatus::Malformed, "exhaustive evidence needs at most 64 vertices"};
    const int in_graph = longest_trail(c.graph, options).best_vertex_count;
    const int in_complement = longest_trail(co, options).best_vertex_count;
    const std::string sizes = "longest trails: " + std::to_string(in_graph) + " vertices in the graph, " +
                              std::to_string(in_complement) + " in the complement";
    if (in_graph >= c.k || in_complement >= c.k) return {CertificateStatus::False, sizes};
    return {CertificateStatus::Valid, sizes};
  }
  if (!structural_bound_holds(c.graph, c.k)) {
    return {CertificateStatus::False, "a component of the graph admits a trail with k-1 edges"};
  }
  if (!structural_bound_holds(co, c.k)) {
    return {CertificateStatus::False, "a component of the complement admits a trail with k-1 edges"};
  }
  return {CertificateStatus::Valid, "every component on both sides is limited to k-2 trail edges"};
}

}  // namespace ramsey_trails
