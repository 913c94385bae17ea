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

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "ramsey_trails/graph.hpp"
#include "ramsey_trails/trail.hpp"

namespace ramsey_trails {

// Which graph of the complementary pair holds a trail.
enum class Side { G, CoG };

inline Side flip(Side s) { return s == Side::G ? Side::CoG : Side::G; }
const char* to_string(Side s);  // "G" / "co-G"
std::optional<Side> side_from_string(const std::string& s);

// Steps of the inductive k-vertex trail construction.
enum class CaseLabel {
  Base,              // exact search, k at or below the base threshold
  ExtendEndpoint,    // an unused edge at u_1 or u_{k-1} extends S
  Case1,             // S is a path
  Case2,             // S is a circuit and some w in W touches it
  Case2_1,           // circuit, |U| >= |W|
  Case2_2,           // circuit, |U| < |W|
  Case3_1,           // |U| = k - 2
  Case3_2,           // |U| <= floor(k/2)
  Case3_3,           // recursion on the subgraph induced by W
  Case3_3_1,         // T in the same graph as S: detour u_i -> T -> u_i
  Case3_3_1_Lemma7,  // T in the same graph, bipartite trail in the other
  Case3_3_2,         // T in the other graph: 4- or 6-cycle spliced into S
  Case3_3_2_Lemma7,  // T in the other graph: X + u_1 + T' + u_{k-1}
  Fallback,          // exact search after a failed step
};

const char* to_string(CaseLabel label);
std::optional<CaseLabel> case_label_from_string(const std::string& s);

struct FallbackEvent {
  CaseLabel label = CaseLabel::Base;  // step that failed
  int order = 0;                      // size of the (sub)graph it failed on
  std::string reason;
};

struct ProofTrace {
  int k = 0;
  Side side = Side::G;
  Trail trail;  // exactly k vertices, counted with multiplicity
  std::vector<CaseLabel> case_path;
  bool fallback_used = false;
  std::vector<FallbackEvent> fallback_events;
};

struct ProverOptions {
  // Orders at or below this are settled by exact search on both sides.
  int base_threshold = 10;
  // Re-check Conditions 1 and 2 against the adjacency before dispatching.
  bool verify_conditions = true;
};

// Finds a trail with exactly k = g.order() vertices in g or its complement
// (2 <= k <= 64) by induction on k: drop the highest vertex, extend the
// trail S found for the rest, or build a long trail in the other graph from
// the structure S leaves behind. A step that does not go through as planned
// is replaced by exact search and reported in fallback_events.
ProofTrace find_trail(const Graph& g, const ProverOptions& options = {});

struct TraceCheck {
  bool ok = false;
  std::string message;  // first violated property when !ok
};

// Independent re-check of a trace: order, vertex count, trail validity in
// the claimed side, label consistency.
TraceCheck validate_trace(const Graph& g, const ProofTrace& trace);

// Bipartite graph with parts A (three vertices) and B, each b in B joined to
// exactly two vertices of A.
struct BipartiteInstance {
  std::array<Vertex, 3> a{};
  std::vector<Vertex> b;
  std::vector<std::array<Vertex, 2>> links;  // links[i]: the A-neighbours of b[i]

  // Empty when the invariants hold, otherwise the first violation.
  std::optional<std::string> violation() const;
};

// Trail with exactly 2|B| edges covering every edge once, both endpoints in
// A. Throws std::invalid_argument when the instance is malformed.
Trail bipartite_trail(const BipartiteInstance& inst);

}  // namespace ramsey_trails
