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

#include <gtest/gtest.h>

#include <cmath>

#include "oracles.hpp"
#include "ramsey_trails/graph6.hpp"
#include "ramsey_trails/lower_bound.hpp"

namespace ramsey_trails {
namespace {

// ceil((1 + sqrt(16k - 7)) / 2) by direct search over n.
int formula_oracle(int k) {
  if (k <= 6) return k;
  long n = 1;
  while ((2 * n - 1) * (2 * n - 1) < 16L * k - 7) ++n;
  return static_cast<int>(n);
}

TEST(CompleteGraphOrder, Examples) {
  EXPECT_DOUBLE_EQ(complete_graph_order(10), 5.0);
  EXPECT_DOUBLE_EQ(complete_graph_order(0), 1.0);
  const double n = complete_graph_order(2 * 7 - 3);
  EXPECT_NEAR(n, (1 + std::sqrt(89.0)) / 2, 1e-12);
  EXPECT_GT(n, 5.0);
  EXPECT_EQ(complete_graph_order_exact(45), 10U);
  EXPECT_FALSE(complete_graph_order_exact(11).has_value());
}

TEST(LbFormula, Examples) {
  EXPECT_EQ(lb_formula(5), 5);
  EXPECT_EQ(lb_formula(7), 6);
  EXPECT_EQ(lb_formula(9), 7);
  EXPECT_THROW(lb_formula(1), std::out_of_range);
}

TEST(LbFormula, MatchesOracle) {
  for (int k = 2; k <= 10000; ++k) ASSERT_EQ(lb_formula(k), formula_oracle(k)) << k;
  for (int k : {1 << 20, (1 << 24) + 3, 123456789}) EXPECT_EQ(lb_formula(k), formula_oracle(k)) << k;
}

TEST(LbFormula, AgreesWithWitnessOrder) {
  for (int k = 7; k <= 10000; ++k) ASSERT_EQ(witness_order(k) + 1, lb_formula(k)) << k;
}

TEST(WitnessSmall, Shapes) {
  const WitnessCertificate w4 = witness(4);
  EXPECT_EQ(w4.graph.order(), 3);
  EXPECT_EQ(w4.graph.edge_count(), 1);
  const WitnessCertificate w5 = witness(5);
  EXPECT_EQ(w5.graph.order(), 4);
  EXPECT_EQ(w5.graph.edge_count(), 3);
  // complement: triangle plus an isolated vertex
  const Graph c5 = w5.graph.complement();
  EXPECT_EQ(c5.edge_count(), 3);
  int isolated = 0;
  for (Vertex v = 0; v < 4; ++v) isolated += c5.degree(v) == 0 ? 1 : 0;
  EXPECT_EQ(isolated, 1);
  const WitnessCertificate w6 = witness(6);
  EXPECT_EQ(w6.graph.order(), 5);
  EXPECT_EQ(w6.graph.edge_count(), 5);
  EXPECT_EQ(euler_classify(w6.graph).odd_vertices, 4);
  EXPECT_EQ(euler_classify(w6.graph.complement()).odd_vertices, 4);
}

TEST(WitnessLarge, Cases) {
  const WitnessCertificate w7 = witness(7);
  EXPECT_EQ(w7.graph.order(), 5);
  EXPECT_EQ(w7.graph.edge_count(), 5);
  EXPECT_EQ(w7.construction, "lemma5-case1");
  const WitnessCertificate w8 = witness(8);
  EXPECT_EQ(w8.graph.order(), 5);
  EXPECT_EQ(w8.construction, "lemma5-case1");
  const WitnessCertificate w9 = witness(9);
  EXPECT_EQ(w9.graph.order(), 6);
  EXPECT_EQ(w9.construction.rfind("lemma5-case2-2", 0), 0U);
  EXPECT_EQ(witness(12).construction, "lemma5-case2-1");
  EXPECT_EQ(witness(15).construction, "lemma5-case3-even");
  EXPECT_EQ(witness(19).construction, "lemma5-case3-odd");
  EXPECT_EQ(witness(24).construction, "lemma5-case2-2");
}

TEST(WitnessLarge, FrozenGraphs) {
  const char* expected[] = {"@", "A_", "BO", "CF", "Dgs", "D{_", "D{_", "E\\m?", "E}q?", "E}q?", "F]{KG"};
  for (int k = 2; k <= 12; ++k) EXPECT_EQ(encode_graph6(witness(k).graph), expected[k - 2]) << k;
}

TEST(CheckCertificate, SmallWitnessesAgainstNaiveSearch) {
  for (int k = 2; k <= 18; ++k) {
    const WitnessCertificate w = witness(k);
    EXPECT_EQ(w.bound, w.graph.order() + 1);
    if (w.graph.edge_count() <= 22 && w.graph.complement().edge_count() <= 22) {
      EXPECT_LT(oracle::longest_trail(w.graph), k) << k;
      EXPECT_LT(oracle::longest_trail(w.graph.complement()), k) << k;
    }
    SearchOptions plain;
    plain.prune = false;
    plain.reduce_starts = false;
    EXPECT_TRUE(check_certificate(w, plain).valid()) << k << ": " << check_certificate(w, plain).detail;
  }
}

TEST(CheckCertificate, ExhaustiveThroughThirty) {
  for (int k = 2; k <= 30; ++k) {
    const CertificateCheck c = check_certificate(witness(k, Evidence::Exhaustive));
    EXPECT_TRUE(c.valid()) << k << ": " << c.detail;
  }
}

TEST(CheckCertificate, StructuralSamples) {
  for (int k : {31, 100, 1000, 5000, 10000}) {
    const WitnessCertificate w = witness(k);
    EXPECT_EQ(w.evidence, Evidence::Structural);
    EXPECT_TRUE(check_certificate(w).valid()) << k;
    EXPECT_TRUE(structural_bound_holds(w.graph, k));
    EXPECT_TRUE(structural_bound_holds(w.graph.complement(), k));
  }
}

TEST(CheckCertificate, CompleteGraphIsFalse) {
  for (int k = 3; k <= 9; ++k) {
    WitnessCertificate fake{k, Graph::complete(k), k + 1, Evidence::Exhaustive, "fake"};
    EXPECT_EQ(check_certificate(fake).status, CertificateStatus::False) << k;
    fake.evidence = Evidence::Structural;
    EXPECT_EQ(check_certificate(fake).status, CertificateStatus::False) << k;
  }
}

TEST(CheckCertificate, Malformed) {
  WitnessCertificate w = witness(6);
  w.bound = 9;
  EXPECT_EQ(check_certificate(w).status, CertificateStatus::Malformed);
  w = witness(6);
  w.k = 1;
  EXPECT_EQ(check_certificate(w).status, CertificateStatus::Malformed);
  w = witness(2000, Evidence::Exhaustive);
  EXPECT_EQ(check_certificate(w).status, CertificateStatus::Malformed);
}

TEST(Evidence, Strings) {
  EXPECT_STREQ(to_string(Evidence::Exhaustive), "exhaustive");
  EXPECT_EQ(evidence_from_string("structural"), Evidence::Structural);
  EXPECT_FALSE(evidence_from_string("proof").has_value());
  EXPECT_EQ(default_evidence(30), Evidence::Exhaustive);
  EXPECT_EQ(default_evidence(31), Evidence::Structural);
}

}  // namespace
}  // namespace ramsey_trails
