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

#include <string>
#include <vector>

#include "oracles.hpp"
#include "ramsey_trails/graph.hpp"
#include "ramsey_trails/graph6.hpp"
#include "ramsey_trails/trail.hpp"

namespace ramsey_trails {
namespace {

TEST(Graph, RejectsBadOrderAndPairs) {
  EXPECT_THROW(Graph(0), std::out_of_range);
  EXPECT_THROW(Graph(kMaxVertices + 1), std::out_of_range);
  Graph g(3);
  EXPECT_THROW(g.add_edge(1, 1), std::invalid_argument);
  EXPECT_THROW(g.add_edge(0, 3), std::out_of_range);
  EXPECT_THROW(g.add_edge(-1, 2), std::out_of_range);
}

TEST(Graph, AddRemoveIsSymmetric) {
  Graph g(4);
  g.add_edge(2, 0);
  EXPECT_TRUE(g.has_edge(0, 2));
  EXPECT_TRUE(g.has_edge(2, 0));
  g.add_edge(0, 2);
  EXPECT_EQ(g.edge_count(), 1);
  g.remove_edge(0, 2);
  EXPECT_EQ(g.edge_count(), 0);
}

TEST(Graph, EdgesAreLexicographic) {
  Graph g(4);
  g.add_edge(3, 1);
  g.add_edge(2, 0);
  g.add_edge(1, 0);
  EXPECT_EQ(g.edges(), (std::vector<Edge>{{0, 1}, {0, 2}, {1, 3}}));
}

TEST(Graph, ComplementOfTriangleIsEmpty) {
  EXPECT_EQ(complement(Graph::complete(3)), Graph(3));
}

TEST(Graph, ComplementOfSingleEdgeOnThreeIsPath) {
  Graph g(3);
  g.add_edge(0, 2);
  EXPECT_EQ(complement(g).edges(), (std::vector<Edge>{{0, 1}, {1, 2}}));
}

TEST(Graph, ComplementOfP4) {
  EXPECT_EQ(complement(Graph::path(4)).edges(), (std::vector<Edge>{{0, 2}, {0, 3}, {1, 3}}));
}

TEST(Graph, MultiwordRows) {
  Graph g(130);
  g.add_edge(1, 129);
  g.add_edge(64, 63);
  EXPECT_TRUE(g.has_edge(129, 1));
  EXPECT_EQ(g.degree(64), 1);
  EXPECT_EQ(g.neighbors(1), std::vector<Vertex>{129});
  Graph c = g.complement();
  EXPECT_EQ(c.edge_count(), 130 * 129 / 2 - 2);
  EXPECT_FALSE(c.has_edge(129, 129));
  EXPECT_EQ(c.complement(), g);
}

TEST(Graph, InducedRelabelsInGivenOrder) {
  Graph g = Graph::path(5);  // 0-1-2-3-4
  std::vector<Vertex> keep{3, 2, 0};
  Graph h = g.induced(keep);
  EXPECT_EQ(h.edges(), (std::vector<Edge>{{0, 1}}));
}

TEST(Graph, ExhaustiveInvariantsUpToSix) {
  for (int n = 1; n <= 6; ++n) {
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << oracle::pair_count(n)); ++mask) {
      Graph g = oracle::labelled_graph(n, mask);
      int degree_sum = 0;
      for (Vertex v = 0; v < n; ++v) degree_sum += g.degree(v);
      ASSERT_EQ(degree_sum % 2, 0);
      ASSERT_EQ(degree_sum, 2 * g.edge_count());
      ASSERT_EQ(g.complement().complement(), g);
      ASSERT_EQ(g.edge_count() + g.complement().edge_count(), n * (n - 1) / 2);
    }
  }
}

TEST(EulerClassify, Examples) {
  EXPECT_EQ(euler_classify(Graph::complete(5)).kind, EulerKind::Eulerian);
  EXPECT_EQ(euler_classify(Graph::path(4)).kind, EulerKind::SemiEulerian);
  Graph fig4 = Graph::from_edges(5, std::vector<Edge>{{0, 4}, {0, 1}, {1, 4}, {3, 4}, {1, 2}});
  EulerClass c = euler_classify(fig4);
  EXPECT_EQ(c.kind, EulerKind::Neither);
  EXPECT_EQ(c.odd_vertices, 4);
  EXPECT_EQ(euler_classify(fig4.complement()).odd_vertices, 4);
}

TEST(EulerClassify, IsolatedVerticesIgnored) {
  Graph g(5);
  g.add_edge(0, 1);
  g.add_edge(1, 2);
  EXPECT_EQ(euler_classify(g).kind, EulerKind::SemiEulerian);
  EXPECT_EQ(euler_classify(Graph(3)).kind, EulerKind::Eulerian);
  Graph two(4);
  two.add_edge(0, 1);
  two.add_edge(2, 3);
  EXPECT_FALSE(euler_classify(two).connected);
  EXPECT_EQ(euler_classify(two).kind, EulerKind::Neither);
}

TEST(EulerClassify, AgreesWithCoveringTrailSearch) {
  for (int n = 2; n <= 6; ++n) {
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << oracle::pair_count(n)); ++mask) {
      Graph g = oracle::labelled_graph(n, mask);
      EulerClass c = euler_classify(g);
      if (!c.connected || g.edge_count() == 0) continue;
      const bool closed = oracle::covering_trail(g, true);
      const bool open = oracle::covering_trail(g, false);
      ASSERT_EQ(c.kind == EulerKind::Eulerian, closed) << oracle::graph6(g);
      ASSERT_EQ(c.kind != EulerKind::Neither, open) << oracle::graph6(g);
    }
  }
}

TEST(TrailBound, Examples) {
  EXPECT_EQ(trail_edge_upper_bound(Graph::star(4)), 3);
  EXPECT_EQ(trail_edge_upper_bound(Graph::complete(4)), 5);
  EXPECT_EQ(trail_edge_upper_bound(Graph::complete(5)), 10);
  EXPECT_EQ(trail_edge_upper_bound(Graph::cycle(6)), 6);
  EXPECT_EQ(trail_edge_upper_bound(Graph(4)), 0);
}

TEST(Graph6, KnownStrings) {
  EXPECT_EQ(encode_graph6(Graph::complete(3)), "Bw");
  EXPECT_EQ(encode_graph6(Graph(2)), "A?");
  EXPECT_EQ(encode_graph6(Graph(1)), "@");
  EXPECT_EQ(encode_graph6(Graph::path(4)), "Ch");
  EXPECT_EQ(encode_graph6(Graph::complete(5)), "D~{");
  EXPECT_EQ(encode_graph6(Graph::cycle(6)), "EhEG");
}

TEST(Graph6, LongForm) {
  Graph g(63);
  g.add_edge(0, 62);
  const std::string text = encode_graph6(g);
  EXPECT_EQ(text.substr(0, 4), "~??~");
  EXPECT_EQ(text, oracle::graph6(g));
  EXPECT_EQ(decode_graph6(text), g);
}

TEST(Graph6, MatchesReferenceAndRoundTripsUpToSix) {
  for (int n = 1; n <= 6; ++n) {
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << oracle::pair_count(n)); ++mask) {
      Graph g = oracle::labelled_graph(n, mask);
      const std::string text = encode_graph6(g);
      ASSERT_EQ(text, oracle::graph6(g));
      ASSERT_EQ(decode_graph6(text), g);
    }
  }
}

Graph6ErrorKind error_kind(std::string_view text) {
  try {
    decode_graph6(text);
  } catch (const Graph6Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no error for " << text;
  return Graph6ErrorKind::MalformedHeader;
}

TEST(Graph6, DistinctErrors) {
  EXPECT_EQ(error_kind(""), Graph6ErrorKind::MalformedHeader);
  EXPECT_EQ(error_kind("?"), Graph6ErrorKind::MalformedHeader);
  EXPECT_EQ(error_kind("~~??????????"), Graph6ErrorKind::MalformedHeader);
  EXPECT_EQ(error_kind("B\x7f"), Graph6ErrorKind::InvalidCharacter);
  EXPECT_EQ(error_kind("B "), Graph6ErrorKind::InvalidCharacter);
  EXPECT_EQ(error_kind("B"), Graph6ErrorKind::LengthMismatch);
  EXPECT_EQ(error_kind("Bww"), Graph6ErrorKind::LengthMismatch);
  EXPECT_EQ(error_kind("Bx"), Graph6ErrorKind::NonzeroPadding);
}

TEST(Trail, Accessors) {
  Trail t({0, 1, 2, 0});
  EXPECT_EQ(t.vertex_count(), 4);
  EXPECT_EQ(t.edge_count(), 3);
  EXPECT_TRUE(t.is_closed());
  EXPECT_EQ(t.rotated(1), Trail({1, 2, 0, 1}));
  EXPECT_EQ(t.reversed(), Trail({0, 2, 1, 0}));
  EXPECT_EQ(t.prefix(2), Trail({0, 1}));
  EXPECT_EQ(t.prefix(9), t);
  EXPECT_FALSE(Trail({3}).is_closed());
}

TEST(Trail, Violations) {
  Graph k3 = Graph::complete(3);
  EXPECT_TRUE(is_trail_in(k3, Trail({0, 1, 2, 0})));
  EXPECT_TRUE(is_trail_in(k3, Trail({2})));
  EXPECT_FALSE(is_trail_in(k3, Trail({0, 1, 0})));      // repeated edge
  EXPECT_FALSE(is_trail_in(k3, Trail({0, 0})));         // loop
  EXPECT_FALSE(is_trail_in(k3, Trail({0, 3})));         // out of range
  EXPECT_FALSE(is_trail_in(Graph::path(3), Trail({0, 2})));  // missing edge
  EXPECT_FALSE(is_trail_in(k3, Trail()));
}

}  // namespace
}  // namespace ramsey_trails
