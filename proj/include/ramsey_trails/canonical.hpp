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

#include <cstdint>

#include "ramsey_trails/graph.hpp"

namespace ramsey_trails {

// Upper-triangle adjacency bits in graph6 order packed most significant
// first; numeric order equals lexicographic order of the bit strings.
using CanonicalCode = std::uint64_t;

inline constexpr int kMaxCanonicalOrder = 11;

// Code of the graph under its own labelling.
CanonicalCode labelled_code(const Graph& g);

// Minimum labelled code over all relabellings that list vertices in
// colour-refinement order (degree, then iterated neighbour-colour
// multisets). Isomorphic graphs, and only those, share a code.
CanonicalCode canonical_code(const Graph& g);

// The relabelling attaining canonical_code: perm[p] is the vertex placed at
// position p.
std::vector<Vertex> canonical_labelling(const Graph& g);

Graph graph_from_code(int n, CanonicalCode code);

}  // namespace ramsey_trails
