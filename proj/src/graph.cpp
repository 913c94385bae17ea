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

#include "ramsey_trails/graph.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <string>

namespace ramsey_trails {

Graph::Graph(int n) : n_(n) {
  if (n < 1 || n > kMaxVertices) {
    throw std::out_of_range("graph order " + std::to_string(n) + " outside 1.." +
                            std::to_string(kMaxVertices));
  }
  words_ = (n + 63) / 64;
  bits_.assign(static_cast<std::size_t>(n) * words_, 0);
}

Graph Graph::from_edges(int n, std::span<const Edge> edges) {
  Graph g(n);
  for (const Edge& e : edges) g.add_edge(e.u, e.v);
  return g;
}

Graph Graph::complete(int n) { return Graph(n).complement(); }

Graph Graph::path(int n) {
  Graph g(n);
  for (Vertex i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
  return g;
}

Graph Graph::cycle(int n) {
  if (n < 3) throw std::invalid_argument("cycle needs at least 3 vertices");
  Graph g = path(n);
  g.add_edge(n - 1, 0);
  return g;
}

Graph Graph::star(int leaves) {
  Graph g(leaves + 1);
  for (Vertex i = 1; i <= leaves; ++i) g.add_edge(0, i);
  return g;
}

Graph Graph::complete_bipartite(int a, int b) {
  Graph g(a + b);
  for (Vertex i = 0; i < a; ++i)
    for (Vertex j = a; j < a + b; ++j) g.add_edge(i, j);
  return g;
}

void Graph::check_pair(Vertex a, Vertex b) const {
  if (a < 0 || b < 0 || a >= n_ || b >= n_) throw std::out_of_range("vertex id out of range");
  if (a == b) throw std::invalid_argument("self-loops are not allowed");
}

void Graph::add_edge(Vertex a, Vertex b) {
  check_pair(a, b);
  bits_[static_cast<std::size_t>(a) * words_ + (b >> 6)] |= std::uint64_t{1} << (b & 63);
  bits_[static_cast<std::size_t>(b) * words_ + (a >> 6)] |= std::uint64_t{1} << (a & 63);
}

void Graph::remove_edge(Vertex a, Vertex b) {
  check_pair(a, b);
  bits_[static_cast<std::size_t>(a) * words_ + (b >> 6)] &= ~(std::uint64_t{1} << (b & 63));
  bits_[static_cast<std::size_t>(b) * words_ + (a >> 6)] &= ~(std::uint64_t{1} << (a & 63));
}

int Graph::degree(Vertex v) const {
  int d = 0;
  for (std::uint64_t w : row(v)) d += std::popcount(w);
  return d;
}

std::vector<Vertex> Graph::neighbors(Vertex v) const {
  std::vector<Vertex> out;
  auto r = row(v);
  for (int w = 0; w < words_; ++w) {
    for (std::uint64_t bits = r[w]; bits != 0; bits &= bits - 1) {
      out.push_back(w * 64 + std::countr_zero(bits));
    }
  }
  return out;
}

int Graph::edge_count() const {
  long total = 0;
  for (std::uint64_t w : bits_) total += std::popcount(w);
  return static_cast<int>(total / 2);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  for (Vertex u = 0; u < n_; ++u) {
    for (Vertex v : neighbors(u)) {
      if (u < v) out.push_back({u, v});
    }
  }
  return out;
}

Graph Graph::complement() const {
  Graph g(n_);
  for (Vertex v = 0; v < n_; ++v) {
    std::size_t base = static_cast<std::size_t>(v) * words_;
    for (int w = 0; w < words_; ++w) {
      std::uint64_t valid = ~std::uint64_t{0};
      int hi = n_ - w * 64;
      if (hi < 64) valid = (std::uint64_t{1} << hi) - 1;
      g.bits_[base + w] = ~bits_[base + w] & valid;
    }
    g.bits_[base + (v >> 6)] &= ~(std::uint64_t{1} << (v & 63));
  }
  return g;
}

Graph Graph::induced(std::span<const Vertex> vertices) const {
  Graph g(static_cast<int>(vertices.size()));
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    for (std::size_t j = i + 1; j < vertices.size(); ++j) {
      if (has_edge(vertices[i], vertices[j])) g.add_edge(static_cast<Vertex>(i), static_cast<Vertex>(j));
    }
  }
  return g;
}

std::vector<Component> edge_components(const Graph& g) {
  const int n = g.order();
  std::vector<char> seen(n, 0);
  std::vector<Component> out;
  std::vector<Vertex> stack;
  for (Vertex s = 0; s < n; ++s) {
    if (seen[s] || g.degree(s) == 0) continue;
    Component c;
    long degree_sum = 0;
    seen[s] = 1;
    stack.push_back(s);
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      c.vertices.push_back(v);
      int d = g.degree(v);
      degree_sum += d;
      if (d % 2 != 0) ++c.odd_vertices;
      for (Vertex w : g.neighbors(v)) {
        if (!seen[w]) {
          seen[w] = 1;
          stack.push_back(w);
        }
      }
    }
    std::sort(c.vertices.begin(), c.vertices.end());
    c.edges = static_cast<int>(degree_sum / 2);
    out.push_back(std::move(c));
  }
  return out;
}

int component_trail_bound(const Component& c) {
  return c.edges - std::max(0, c.odd_vertices / 2 - 1);
}

int trail_edge_upper_bound(const Graph& g) {
  int best = 0;
  for (const Component& c : edge_components(g)) best = std::max(best, component_trail_bound(c));
  return best;
}

EulerClass euler_classify(const Graph& g) {
  auto comps = edge_components(g);
  EulerClass out;
  out.connected = comps.size() <= 1;
  for (const Component& c : comps) out.odd_vertices += c.odd_vertices;
  if (!out.connected) {
    out.kind = EulerKind::Neither;
  } else if (out.odd_vertices == 0) {
    out.kind = EulerKind::Eulerian;
  } else if (out.odd_vertices == 2) {
    out.kind = EulerKind::SemiEulerian;
  } else {
    out.kind = EulerKind::Neither;
  }
  return out;
}

const char* to_string(EulerKind kind) {
  switch (kind) {
    case EulerKind::Eulerian: return "Eulerian";
    case EulerKind::SemiEulerian: return "SemiEulerian";
    case EulerKind::Neither: return "Neither";
  }
  return "?";
}

}  // namespace ramsey_trails
