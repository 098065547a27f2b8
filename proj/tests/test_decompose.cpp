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

#include <functional>

#include "indeque/decompose.hpp"
#include "indeque/gen.hpp"
#include "support/oracles.hpp"

namespace indeque {
namespace {

// Two triangles sharing vertex 2.
Graph bowtie() { return Graph(5, {{0, 1}, {0, 2}, {1, 2}, {2, 3}, {2, 4}, {3, 4}}); }

TEST(Blocks, BowtieHasOneCutVertex) {
  auto bd = block_decompose(bowtie());
  ASSERT_EQ(bd.blocks.size(), 2u);
  EXPECT_EQ(bd.blocks[0], (VertexSet{0, 1, 2}));
  EXPECT_EQ(bd.blocks[1], (VertexSet{2, 3, 4}));
  EXPECT_EQ(bd.cut_vertices, (VertexSet{2}));
  EXPECT_EQ(bd.leaf_blocks, (std::vector<int>{0, 1}));
  EXPECT_EQ(bd.vertex_blocks[2], (std::vector<int>{0, 1}));
}

TEST(Blocks, PathGivesBridgesAndInnerCuts) {
  auto bd = block_decompose(gen::path(4));
  ASSERT_EQ(bd.blocks.size(), 3u);
  EXPECT_EQ(bd.cut_vertices, (VertexSet{1, 2}));
  EXPECT_EQ(bd.leaf_blocks, (std::vector<int>{0, 2}));
  EXPECT_EQ(bd.block_cuts[1], (std::vector<Vertex>{1, 2}));
}

TEST(Blocks, IsolatedVertexIsSingletonBlock) {
  auto bd = block_decompose(Graph(3, {{0, 1}}));
  ASSERT_EQ(bd.blocks.size(), 2u);
  EXPECT_EQ(bd.blocks[1], (VertexSet{2}));
  EXPECT_TRUE(bd.cut_vertices.empty());
}

// Every edge lies in exactly one block, and blocks meet only at cut vertices.
TEST(Blocks, PartitionEdgesOnRandomGraphs) {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const Graph g = testing::random_gnp(10, 0.25, seed);
    auto bd = block_decompose(g);
    for (auto [u, w] : g.edges()) {
      int owners = 0;
      for (const auto& b : bd.blocks) owners += b.contains(u) && b.contains(w);
      EXPECT_EQ(owners, 1);
    }
    for (Vertex v = 0; v < g.n(); ++v) {
      EXPECT_EQ(bd.vertex_blocks[static_cast<std::size_t>(v)].size() > 1,
                bd.cut_vertices.contains(v));
    }
  }
}

TEST(SeriesParallel, SingleEdge) {
  auto rec = recognize_sp(gen::path(2), 0, 1);
  ASSERT_TRUE(rec.ok());
  EXPECT_EQ(rec.tree->top().kind, SPKind::kEdge);
}

TEST(SeriesParallel, CycleWithAdjacentTerminals) {
  auto rec = recognize_sp(gen::cycle(5), 0, 1);
  ASSERT_TRUE(rec.ok());
  EXPECT_EQ(rec.tree->top().kind, SPKind::kParallel);
  EXPECT_EQ(sp_tree_edges(*rec.tree), gen::cycle(5).edges());
}

TEST(SeriesParallel, ThetaBetweenBranchVertices) {
  auto rec = recognize_sp(gen::theta(), 0, 1);
  ASSERT_TRUE(rec.ok());
  FlatTree flat = flatten(*rec.tree);
  const FlatNode& root = flat.at(flat.root);
  EXPECT_EQ(root.kind, SPKind::kParallel);
  EXPECT_EQ(root.children.size(), 3u);
}

TEST(SeriesParallel, K4FailsWithResidual) {
  auto rec = recognize_sp(gen::complete(4), 0, 1);
  EXPECT_FALSE(rec.ok());
  EXPECT_FALSE(rec.residual.empty());
}

TEST(SeriesParallel, RejectsEqualTerminals) {
  EXPECT_FALSE(recognize_sp(gen::cycle(4), 2, 2).ok());
}

TEST(SeriesParallel, SeriesChildrenRunFromSToT) {
  auto rec = recognize_sp(gen::path(4), 0, 3);
  ASSERT_TRUE(rec.ok());
  FlatTree flat = flatten(*rec.tree);
  const FlatNode& root = flat.at(flat.root);
  ASSERT_EQ(root.kind, SPKind::kSeries);
  ASSERT_EQ(root.children.size(), 3u);
  for (std::size_t i = 0; i < 3; ++i) {
    EXPECT_EQ(flat.at(root.children[i]).s, static_cast<Vertex>(i));
    EXPECT_EQ(flat.at(root.children[i]).t, static_cast<Vertex>(i + 1));
  }
}

TEST(SeriesParallel, ParallelEdgeChildComesFirst) {
  auto rec = recognize_sp(gen::cycle(4), 0, 1);
  ASSERT_TRUE(rec.ok());
  FlatTree flat = flatten(*rec.tree);
  const FlatNode& root = flat.at(flat.root);
  ASSERT_EQ(root.kind, SPKind::kParallel);
  EXPECT_EQ(flat.at(root.children.front()).kind, SPKind::kEdge);
}

// Structural invariants of decomposition trees from random series-parallel
// graphs: leaves realize the edge set, series nodes share the middle vertex,
// parallel nodes share both terminals.
TEST(SeriesParallel, TreeInvariantsOnRandomGraphs) {
  for (int n = 2; n <= 20; ++n) {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
      const Graph g = gen::random_sp(n, 0.5, seed);
      auto report = analyze_k4_minor_free(g);
      ASSERT_TRUE(report.k4_minor_free);
      for (const auto& b : report.blocks) {
        if (!b.tree) continue;
        const SPTree& t = *b.tree;
        EXPECT_EQ(sp_tree_edges(t), b.sub.graph.edges());
        for (const auto& node : t.nodes) {
          if (node.kind == SPKind::kSeries) {
            EXPECT_EQ(t.at(node.left).s, node.s);
            EXPECT_EQ(t.at(node.left).t, node.shared);
            EXPECT_EQ(t.at(node.right).s, node.shared);
            EXPECT_EQ(t.at(node.right).t, node.t);
          } else if (node.kind == SPKind::kParallel) {
            EXPECT_EQ(t.at(node.left).s, node.s);
            EXPECT_EQ(t.at(node.right).t, node.t);
          }
        }
      }
    }
  }
}

TEST(K4MinorFree, FixtureVerdicts) {
  EXPECT_TRUE(is_k4_minor_free(gen::cycle(6)));
  EXPECT_TRUE(is_k4_minor_free(gen::theta()));
  EXPECT_TRUE(is_k4_minor_free(bowtie()));
  EXPECT_TRUE(is_k4_minor_free(Graph(0, {})));
  EXPECT_FALSE(is_k4_minor_free(gen::complete(4)));
  EXPECT_FALSE(is_k4_minor_free(gen::hypercube_q3()));
  // Wheel W5: the hub with a 5-cycle contracts onto K4.
  Graph wheel(6, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {0, 5},
                  {1, 2}, {2, 3}, {3, 4}, {4, 5}, {1, 5}});
  EXPECT_FALSE(is_k4_minor_free(wheel));
}

TEST(K4MinorFree, AgreesWithBranchSetSearch) {
  int disagreements = 0;
  for (int i = 0; i < 600; ++i) {
    const Graph g = testing::random_gnp(4 + i % 6, 0.2 + 0.05 * (i % 8), 1000 + i);
    disagreements += is_k4_minor_free(g) == testing::has_k4_minor_brute(g);
  }
  EXPECT_EQ(disagreements, 0);
}

TEST(Reroot, PathBecomesFirstParallelChild) {
  auto rec = recognize_sp(gen::cycle(6), 0, 1);
  ASSERT_TRUE(rec.ok());
  SPTree t = reroot_sp(*rec.tree, {2, 3, 4});
  EXPECT_EQ(t.top().kind, SPKind::kParallel);
  EXPECT_EQ(sp_tree_edges(t), gen::cycle(6).edges());
  EXPECT_EQ(VertexSet({t.top().s, t.top().t}), (VertexSet{2, 4}));
}

TEST(Reroot, RejectsMissingEdge) {
  auto rec = recognize_sp(gen::cycle(6), 0, 1);
  ASSERT_TRUE(rec.ok());
  EXPECT_THROW(reroot_sp(*rec.tree, {0, 3}), SPError);
}

}  // namespace
}  // namespace indeque
