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

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ramsey_trails/graph.hpp"

namespace ramsey_trails {

// Walk v_1 e_1 v_2 ... v_m stored by its vertex sequence; e_i = {v_i, v_{i+1}}.
// Vertices are counted with multiplicity. Whether the edges are pairwise
// distinct (and present) is a property relative to a graph, see
// trail_violation().
class Trail {
 public:
  Trail() = default;
  explicit Trail(std::vector<Vertex> vertices) : vertices_(std::move(vertices)) {}

  std::span<const Vertex> vertices() const { return vertices_; }
  int vertex_count() const { return static_cast<int>(vertices_.size()); }
  int edge_count() const { return vertices_.empty() ? 0 : vertex_count() - 1; }
  bool empty() const { return vertices_.empty(); }
  Vertex front() const { return vertices_.front(); }
  Vertex back() const { return vertices_.back(); }
  Vertex operator[](int i) const { return vertices_[static_cast<std::size_t>(i)]; }

  // A circuit: at least one edge and v_1 = v_m.
  bool is_closed() const { return vertices_.size() > 1 && front() == back(); }

  std::vector<Edge> edges() const;

  // First `count` vertices (count is clamped to vertex_count()).
  Trail prefix(int count) const;
  Trail reversed() const;
  // Closed trails only: the same circuit entered at position `index`.
  Trail rotated(int index) const;

  bool operator==(const Trail&) const = default;

 private:
  std::vector<Vertex> vertices_;
};

// First violated trail property of `t` in `g`, or nullopt when `t` is a
// trail of `g`.
std::optional<std::string> trail_violation(const Graph& g, const Trail& t);

inline bool is_trail_in(const Graph& g, const Trail& t) { return !trail_violation(g, t).has_value(); }

}  // namespace ramsey_trails
