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
#include <optional>
#include <stdexcept>
#include <string>

#include "ramsey_trails/graph.hpp"
#include "ramsey_trails/trail_solver.hpp"

namespace ramsey_trails {

// Vertices of a complete graph with m edges: (1 + sqrt(1 + 8m)) / 2.
double complete_graph_order(std::uint64_t m);
// The same value when it is an integer (m triangular), computed exactly.
std::optional<std::uint64_t> complete_graph_order_exact(std::uint64_t m);

std::uint64_t isqrt(std::uint64_t x);

// Closed-form lower bound on R(T_k, T_k): k for k <= 6, otherwise
// ceil((1 + sqrt(16k - 7)) / 2), evaluated in integers.
int lb_formula(int k);

// Largest n with n(n-1)/2 <= 2k - 2: the order of the k >= 7 witness.
int witness_order(int k);

enum class Evidence { Exhaustive, Structural };

const char* to_string(Evidence e);
std::optional<Evidence> evidence_from_string(const std::string& s);

// Exhaustive up to k = 30, structural above.
Evidence default_evidence(int k);

// A graph on bound - 1 vertices such that neither it nor its complement has
// a trail with k vertices, hence R(T_k, T_k) >= bound.
struct WitnessCertificate {
  int k = 0;
  Graph graph{1};
  int bound = 0;
  Evidence evidence = Evidence::Exhaustive;
  // How the graph was built, e.g. "figure", "lemma5-case1", "lemma5-case2-2".
  // A "+solver-trail" suffix marks a remainder trail taken from the exact
  // solver because the remainder graph was not connected.
  std::string construction;
};

// Construction failure with the partial state in the message.
class ConstructionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

WitnessCertificate witness_small(int k);
WitnessCertificate witness_large(int k, Evidence evidence);
WitnessCertificate witness(int k, Evidence evidence);
inline WitnessCertificate witness(int k) { return witness(k, default_evidence(k)); }

// Every edge-bearing component c satisfies |E_c| - max(0, odd_c/2 - 1) <= k - 2.
bool structural_bound_holds(const Graph& g, int k);

enum class CertificateStatus { Valid, False, Malformed };

const char* to_string(CertificateStatus s);

struct CertificateCheck {
  CertificateStatus status = CertificateStatus::Malformed;
  std::string detail;

  bool valid() const { return status == CertificateStatus::Valid; }
};

// Exhaustive evidence computes the exact longest trail on both sides (with
// the given search options); structural evidence re-checks the component
// bound on both sides.
CertificateCheck check_certificate(const WitnessCertificate& c, const SearchOptions& options = {});

}  // namespace ramsey_trails
