// Copyright 2026 The Indeque Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include "indeque/gen.hpp"
#include "indeque/graph.hpp"
#include "support/oracles.hpp"

namespace indeque {
namespace {

TEST(VertexSet, SortsAndRejectsDuplicates) {
  VertexSet s{3, 1, 2};
  EXPECT_EQ(s.members(), (std::vector<Vertex>{1, 2, 3}));
  EXPECT_TRUE(s.contains(2));
  EXPECT_FALSE(s.contains(0));
  EXPECT_THROW(VertexSet({1, 1}), GraphError);
  EXPECT_THROW(VertexSet({-1}), GraphError);
}

TEST(Graph, BuildsSortedAdjacency) {
  Graph g(4, {{2, 0}, {0, 1}, {3, 0}});
  EXPECT_EQ(g.n(), 4);
  EXPECT_EQ(g.m(), 3);
  EXPECT_EQ(std::vector<Vertex>(g.neighbors(0).begin(), g.neighbors(0).end()),
            (std::vector<Vertex>{1, 2, 3}));
  EXPECT_TRUE(g.has_edge(2, 0));
  EXPECT_FALSE(g.has_edge(1, 2));
  EXPECT_EQ(g.max_degree(), 3);
  EXPECT_EQ(g.edges(), (std::vector<Edge>{{0, 1}, {0, 2}, {0, 3}}));
}

TEST(Graph, RejectsBadEdges) {
  EXPECT_THROW(Graph(2, {{0, 2}}), GraphError);
  EXPECT_THROW(Graph(2, {{1, 1}}), GraphError);
  EXPECT_THROW(Graph(2, {{0, 1}, {1, 0}}), GraphError);
}

TEST(Subgraph, InducedKeepsOrderAndMaps) {
  const Graph c = gen::cycle(5);
  Subgraph sub = induced_subgraph(c, VertexSet{1, 2, 4});
  EXPECT_EQ(sub.graph.n(), 3);
  EXPECT_EQ(sub.graph.edges(), (std::vector<Edge>{{0, 1}}));
  EXPECT_EQ(sub.to_parent, (std::vector<Vertex>{1, 2, 4}));
  EXPECT_EQ(sub.to_child, (std::vector<Vertex>{-1, 0, 1, -1, 2}));
}

TEST(Subgraph, RemoveVerticesIsComplementOfInduced) {
  const Graph g = testing::random_gnp(9, 0.4, 11);
  Subgraph a = remove_vertices(g, VertexSet{0, 4, 8});
  Subgraph b = induced_subgraph(g, VertexSet{1, 2, 3, 5, 6, 7});
  EXPECT_EQ(a.graph, b.graph);
  EXPECT_EQ(a.to_parent, b.to_parent);
  for (std::size_t i = 0; i < a.to_parent.size(); ++i) {
    EXPECT_EQ(a.to_child[static_cast<std::size_t>(a.to_parent[i])], static_cast<Vertex>(i));
  }
}

TEST(Subgraph, RejectsUnknownVertex) {
  EXPECT_THROW(induced_subgraph(gen::path(3), VertexSet{5}), GraphError);
}

TEST(Graph, DisjointUnionShiftsIds) {
  Graph u = disjoint_union(gen::path(2), gen::cycle(3));
  EXPECT_EQ(u.n(), 5);
  EXPECT_EQ(u.edges(), (std::vector<Edge>{{0, 1}, {2, 3}, {2, 4}, {3, 4}}));
}

TEST(Graph, ConnectedComponentsOrderedBySmallestMember) {
  Graph g(6, {{4, 5}, {0, 3}});
  auto comps = connected_components(g);
  ASSERT_EQ(comps.size(), 4u);
  EXPECT_EQ(comps[0], (VertexSet{0, 3}));
  EXPECT_EQ(comps[1], (VertexSet{1}));
  EXPECT_EQ(comps[2], (VertexSet{2}));
  EXPECT_EQ(comps[3], (VertexSet{4, 5}));
}

TEST(Verify, AcceptsOppositePairOfC4) {
  auto v = verify_indeque(gen::cycle(4), VertexSet{0, 2});
  ASSERT_TRUE(v.accepted());
  EXPECT_EQ(v.certificate->components.size(), 2u);
}

TEST(Verify, RejectsInducedPathWithWitness) {
  auto v = verify_indeque(gen::path(3), VertexSet{0, 1, 2});
  ASSERT_FALSE(v.accepted());
  EXPECT_EQ(*v.witness, (Edge{0, 2}));
}

TEST(Verify, AcceptsCliqueAndEmptySet) {
  EXPECT_TRUE(is_indeque(gen::complete(5), VertexSet{0, 1, 2, 3, 4}));
  EXPECT_TRUE(is_indeque(gen::complete(5), VertexSet{}));
}

// Every induced component must be complete: compare with a direct pairwise
// check on random sets.
TEST(Verify, MatchesPairwiseDefinition) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 500; ++trial) {
    const Graph g = testing::random_gnp(8, 0.35, static_cast<std::uint64_t>(trial));
    std::vector<Vertex> pick;
    for (Vertex v = 0; v < g.n(); ++v) {
      if (rng() & 1u) pick.push_back(v);
    }
    const VertexSet s(pick);
    bool expected = true;
    for (const auto& comp : connected_components(induced_subgraph(g, s).graph)) {
      for (Vertex a : comp) {
        for (Vertex b : comp) {
          if (a < b && !g.has_edge(pick[static_cast<std::size_t>(a)], pick[static_cast<std::size_t>(b)])) {
            expected = false;
          }
        }
      }
    }
    EXPECT_EQ(is_indeque(g, s), expected) << "trial " << trial;
  }
}

TEST(Format, RoundTripIsByteExact) {
  const std::string text = "5 4\n0 1\n0 4\n1 2\n3 4\n";
  EXPECT_EQ(emit_graph(parse_graph(text)), text);
  EXPECT_EQ(emit_graph(parse_graph("5 4\n4 3\n1 0\n2 1\n0 4\n")), text);
}

TEST(Format, EmptyGraph) {
  EXPECT_EQ(parse_graph("0 0\n").n(), 0);
  EXPECT_EQ(emit_graph(Graph(0, {})), "0 0\n");
}

ParseErrorKind kind_of(std::string_view text) {
  try {
    parse_graph(text);
  } catch (const ParseError& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no error for " << text;
  return ParseErrorKind::kMalformedSet;
}

TEST(Format, DistinctErrorKinds) {
  EXPECT_EQ(kind_of(""), ParseErrorKind::kMalformedHeader);
  EXPECT_EQ(kind_of("x 1\n0 1\n"), ParseErrorKind::kMalformedHeader);
  EXPECT_EQ(kind_of("3 1\n0\n"), ParseErrorKind::kMalformedEdge);
  EXPECT_EQ(kind_of("3 1\n0 3\n"), ParseErrorKind::kVertexOutOfRange);
  EXPECT_EQ(kind_of("3 1\n1 1\n"), ParseErrorKind::kSelfLoop);
  EXPECT_EQ(kind_of("3 2\n0 1\n1 0\n"), ParseErrorKind::kDuplicateEdge);
  EXPECT_EQ(kind_of("3 2\n0 1\n"), ParseErrorKind::kEdgeCountMismatch);
}

TEST(Format, ErrorsCarryLineNumbers) {
  try {
    parse_graph("3 2\n0 1\n0 7\n");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 3);
  }
}

TEST(Format, VertexSetRoundTrip) {
  VertexSet s = parse_vertex_set("4\n0\n2\n", 5);
  EXPECT_EQ(s, (VertexSet{0, 2, 4}));
  EXPECT_EQ(emit_vertex_set(s), "0\n2\n4\n");
  EXPECT_THROW(parse_vertex_set("1 2\n"), ParseError);
  EXPECT_THROW(parse_vertex_set("7\n", 5), ParseError);
  EXPECT_THROW(parse_vertex_set("1\n1\n"), ParseError);
}

}  // namespace
}  // namespace indeque
