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
#include <stdexcept>

#include "ramsey_trails/graph.hpp"
#include "ramsey_trails/trail.hpp"

namespace ramsey_trails {

class NotEulerianError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Trail through every edge exactly once (Hierholzer, neighbours in ascending
// order). Closed when the graph is Eulerian, otherwise it runs between the
// two odd vertices starting at the smaller one. Edgeless graphs give the
// one-vertex trail at vertex 0. Throws NotEulerianError for anything else.
Trail eulerian_trail(const Graph& g);

// Same, starting from `start`. For Eulerian graphs `start` must carry an
// edge; for semi-Eulerian graphs it must be one of the odd vertices.
Trail eulerian_trail(const Graph& g, Vertex start);

struct SearchOptions {
  // Component bound cut-off, Euler completion, early stop at the global
  // ceiling and skipping of repeated (end vertex, used edges) states.
  // Disabling gives a plain exhaustive depth-first search.
  bool prune = true;
  // Skip start vertices that are twins of an already tried start.
  bool reduce_starts = true;
};

struct TrailResult {
  int best_vertex_count = 1;
  Trail witness;
};

// Exact longest trail (vertex count with multiplicity). Requires
// g.order() <= 64. Deterministic: the first optimal trail in ascending
// start/neighbour order is returned.
TrailResult longest_trail(const Graph& g, const SearchOptions& options = {});

// Some trail with at least k vertices, truncated to exactly k; stops at the
// first one found.
std::optional<Trail> trail_with_vertices(const Graph& g, int k, const SearchOptions& options = {});

inline bool has_trail_with_k(const Graph& g, int k, const SearchOptions& options = {}) {
  return trail_with_vertices(g, k, options).has_value();
}

// max(longest_trail(g), longest_trail(complement(g))).
int t_value(const Graph& g, const SearchOptions& options = {});

}  // namespace ramsey_trails
