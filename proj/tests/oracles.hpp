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

// Independent reference implementations used to check the library. They
// share only the Graph container with the code under test.
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ramsey_trails/graph.hpp"

namespace oracle {

using ramsey_trails::Graph;

// Number of vertex pairs on n vertices.
inline int pair_count(int n) { return n * (n - 1) / 2; }

// Graph on n vertices whose edge set is the given subset of pairs, pairs
// listed column by column: (0,1), (0,2), (1,2), (0,3), ...
Graph labelled_graph(int n, std::uint64_t mask);

// Maximum vertex count (with multiplicity) of a trail in g, by memoised
// search over (current vertex, used edge set). Small graphs only.
int longest_trail(const Graph& g);

// Whether some trail uses every edge exactly once (closed: and returns to
// its start). Same memoised search.
bool covering_trail(const Graph& g, bool closed);

// Minimum over all vertex permutations of the pair bitstring read as a
// binary number, first pair most significant.
std::uint64_t canonical(const Graph& g);

// graph6 text written straight from the format description.
std::string graph6(const Graph& g);

}  // namespace oracle
