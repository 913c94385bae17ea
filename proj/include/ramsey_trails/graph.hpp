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

#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <vector>

namespace ramsey_trails {

using Vertex = int;

// Graphs of this size and below keep each adjacency row in a single word;
// the exact searches (solver, enumerator, prover) require it.
inline constexpr int kWordVertices = 64;
// Hard cap for the general representation (lower-bound witnesses grow past 64).
inline constexpr int kMaxVertices = 4096;

// Unordered vertex pair, stored with the smaller endpoint first.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  static constexpr Edge of(Vertex a, Vertex b) {
    return a < b ? Edge{a, b} : Edge{b, a};
  }
  constexpr bool touches(Vertex x) const { return u == x || v == x; }
  auto operator<=>(const Edge&) const = default;
};

// Simple undirected graph on vertices 0..order()-1 with bit-row adjacency.
class Graph {
 public:
  // Edgeless graph on n vertices; throws std::out_of_range unless
  // 1 <= n <= kMaxVertices.
  explicit Graph(int n);

  static Graph from_edges(int n, std::span<const Edge> edges);
  static Graph complete(int n);
  static Graph path(int n);
  static Graph cycle(int n);
  static Graph star(int leaves);
  static Graph complete_bipartite(int a, int b);

  int order() const { return n_; }
  bool fits_word() const { return n_ <= kWordVertices; }

  bool has_edge(Vertex a, Vertex b) const {
    return ((bits_[static_cast<std::size_t>(a) * words_ + (b >> 6)] >> (b & 63)) & 1U) != 0;
  }
  void add_edge(Vertex a, Vertex b);
  void remove_edge(Vertex a, Vertex b);

  std::span<const std::uint64_t> row(Vertex v) const {
    return {bits_.data() + static_cast<std::size_t>(v) * words_, static_cast<std::size_t>(words_)};
  }
  // Single-word row; only meaningful when fits_word().
  std::uint64_t row64(Vertex v) const { return bits_[static_cast<std::size_t>(v) * words_]; }

  int degree(Vertex v) const;
  std::vector<Vertex> neighbors(Vertex v) const;
  int edge_count() const;
  // All edges in lexicographic order.
  std::vector<Edge> edges() const;

  Graph complement() const;
  // Subgraph induced on `vertices`, relabelled 0..size-1 in the given order.
  Graph induced(std::span<const Vertex> vertices) const;

  bool operator==(const Graph& other) const = default;

 private:
  void check_pair(Vertex a, Vertex b) const;

  int n_ = 0;
  int words_ = 0;
  std::vector<std::uint64_t> bits_;
};

inline Graph complement(const Graph& g) { return g.complement(); }

// Connected component that carries at least one edge.
struct Component {
  std::vector<Vertex> vertices;
  int edges = 0;
  int odd_vertices = 0;
};

// Components with at least one edge, ordered by smallest vertex.
std::vector<Component> edge_components(const Graph& g);

// Edges a single trail inside one component can use at most:
// |E_c| - max(0, odd_c/2 - 1).
int component_trail_bound(const Component& c);

// Maximum of component_trail_bound over all edge-bearing components.
int trail_edge_upper_bound(const Graph& g);

enum class EulerKind { Eulerian, SemiEulerian, Neither };

// Classification of the edge-bearing part of a graph; isolated vertices are
// ignored. An edgeless graph counts as (trivially) Eulerian.
struct EulerClass {
  EulerKind kind = EulerKind::Neither;
  bool connected = true;
  int odd_vertices = 0;

  bool operator==(const EulerClass&) const = default;
};

EulerClass euler_classify(const Graph& g);

const char* to_string(EulerKind kind);

}  // namespace ramsey_trails
