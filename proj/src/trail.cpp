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

#include "ramsey_trails/trail.hpp"

#include <algorithm>
#include <stdexcept>

namespace ramsey_trails {

std::vector<Edge> Trail::edges() const {
  std::vector<Edge> out;
  for (std::size_t i = 0; i + 1 < vertices_.size(); ++i) {
    out.push_back(Edge::of(vertices_[i], vertices_[i + 1]));
  }
  return out;
}

Trail Trail::prefix(int count) const {
  count = std::clamp(count, 0, vertex_count());
  return Trail(std::vector<Vertex>(vertices_.begin(), vertices_.begin() + count));
}

Trail Trail::reversed() const { return Trail(std::vector<Vertex>(vertices_.rbegin(), vertices_.rend())); }

Trail Trail::rotated(int index) const {
  if (!is_closed()) throw std::logic_error("rotated() needs a closed trail");
  const int cycle_len = vertex_count() - 1;
  if (index < 0 || index > cycle_len) throw std::out_of_range("rotation index");
  std::vector<Vertex> out;
  out.reserve(vertices_.size());
  for (int i = 0; i <= cycle_len; ++i) out.push_back(vertices_[static_cast<std::size_t>((index + i) % cycle_len)]);
  return Trail(std::move(out));
}

std::optional<std::string> trail_violation(const Graph& g, const Trail& t) {
  if (t.empty()) return "trail has no vertices";
  for (Vertex v : t.vertices()) {
    if (v < 0 || v >= g.order()) return "vertex " + std::to_string(v) + " out of range";
  }
  std::vector<Edge> edges;
  for (int i = 0; i + 1 < t.vertex_count(); ++i) {
    Vertex a = t[i];
    Vertex b = t[i + 1];
    if (a == b) return "step " + std::to_string(i) + " repeats vertex " + std::to_string(a);
    if (!g.has_edge(a, b)) {
      return "edge {" + std::to_string(a) + "," + std::to_string(b) + "} not in graph";
    }
    edges.push_back(Edge::of(a, b));
  }
  std::sort(edges.begin(), edges.end());
  auto dup = std::adjacent_find(edges.begin(), edges.end());
  if (dup != edges.end()) {
    return "edge {" + std::to_string(dup->u) + "," + std::to_string(dup->v) + "} used twice";
  }
  return std::nullopt;
}

}  // namespace ramsey_trails
