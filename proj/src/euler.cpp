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

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "ramsey_trails/trail_solver.hpp"

namespace ramsey_trails {

namespace {

Trail hierholzer(const Graph& g, Vertex start) {
  const int n = g.order();
  // adjacency[v] = (neighbour, edge id), neighbours ascending
  std::vector<std::vector<std::pair<Vertex, int>>> adjacency(static_cast<std::size_t>(n));
  int next_id = 0;
  for (const Edge& e : g.edges()) {
    adjacency[e.u].push_back({e.v, next_id});
    adjacency[e.v].push_back({e.u, next_id});
    ++next_id;
  }
  for (auto& a : adjacency) std::sort(a.begin(), a.end());

  std::vector<char> used(static_cast<std::size_t>(next_id), 0);
  std::vector<std::size_t> cursor(static_cast<std::size_t>(n), 0);
  std::vector<Vertex> stack{start};
  std::vector<Vertex> circuit;
  while (!stack.empty()) {
    Vertex v = stack.back();
    auto& adj = adjacency[v];
    auto& c = cursor[v];
    while (c < adj.size() && used[adj[c].second]) ++c;
    if (c == adj.size()) {
      circuit.push_back(v);
      stack.pop_back();
    } else {
      used[adj[c].second] = 1;
      stack.push_back(adj[c].first);
    }
  }
  std::reverse(circuit.begin(), circuit.end());
  return Trail(std::move(circuit));
}

}  // namespace

Trail eulerian_trail(const Graph& g) {
  EulerClass cls = euler_classify(g);
  if (cls.kind == EulerKind::Neither) {
    throw NotEulerianError(std::string("graph is not Eulerian or semi-Eulerian (") +
                           (cls.connected ? "connected" : "disconnected") + ", " +
                           std::to_string(cls.odd_vertices) + " odd vertices)");
  }
  for (Vertex v = 0; v < g.order(); ++v) {
    int d = g.degree(v);
    if (cls.kind == EulerKind::Eulerian ? d > 0 : d % 2 == 1) return hierholzer(g, v);
  }
  return Trail({0});
}

Trail eulerian_trail(const Graph& g, Vertex start) {
  if (start < 0 || start >= g.order()) throw std::out_of_range("start vertex out of range");
  EulerClass cls = euler_classify(g);
  if (cls.kind == EulerKind::Neither) return eulerian_trail(g);  // throws
  if (g.edge_count() == 0) return Trail({start});
  int d = g.degree(start);
  bool ok = cls.kind == EulerKind::Eulerian ? d > 0 : d % 2 == 1;
  if (!ok) throw NotEulerianError("no Euler trail starts at vertex " + std::to_string(start));
  return hierholzer(g, start);
}

}  // namespace ramsey_trails
