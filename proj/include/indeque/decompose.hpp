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

// Block decomposition and series-parallel recognition.

#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include "indeque/graph.hpp"

namespace indeque {

/// Blocks of a graph. Isolated vertices form singleton blocks so that every
/// vertex lies in at least one block.
struct BlockDecomposition {
  std::vector<VertexSet> blocks;  // sorted lexicographically
  VertexSet cut_vertices;
  std::vector<std::vector<Vertex>> block_cuts;  // per block: its cut vertices
  std::vector<std::vector<int>> vertex_blocks;  // per vertex: blocks containing it
  std::vector<int> leaf_blocks;                 // blocks with at most one cut vertex
};

BlockDecomposition block_decompose(const Graph& g);

enum class SPKind { kEdge, kSeries, kParallel };

struct SPNode {
  SPKind kind = SPKind::kEdge;
  Vertex s = -1;
  Vertex t = -1;
  int left = -1;
  int right = -1;
  Vertex shared = -1;  // series nodes only: left.t == right.s == shared
};

/// Binary decomposition tree stored as an arena. Vertex ids refer to the
/// graph that was recognized.
struct SPTree {
  std::vector<SPNode> nodes;
  int root = -1;

  [[nodiscard]] const SPNode& at(int i) const { return nodes[static_cast<std::size_t>(i)]; }
  [[nodiscard]] const SPNode& top() const { return at(root); }
};

/// Edges realized by the tree, normalized (u < w) and sorted.
std::vector<Edge> sp_tree_edges(const SPTree& tree);
/// Vertices touched by the tree, sorted.
VertexSet sp_tree_vertices(const SPTree& tree);

struct SPRecognition {
  std::optional<SPTree> tree;
  /// On failure: the edges of the irreducible remainder (may be parallel).
  std::vector<Edge> residual;

  [[nodiscard]] bool ok() const { return tree.has_value(); }
};

/// Series/parallel reduction with s and t kept as terminals.
SPRecognition recognize_sp(const Graph& block, Vertex s, Vertex t);

/// Tree with k-ary series chains and parallel bundles collapsed. Series
/// children are listed in order from s to t. Parallel children keep the
/// terminals of the node; an edge child, if any, is listed first.
struct FlatNode {
  SPKind kind = SPKind::kEdge;
  Vertex s = -1;
  Vertex t = -1;
  std::vector<int> children;
};

struct FlatTree {
  std::vector<FlatNode> nodes;
  int root = -1;

  [[nodiscard]] const FlatNode& at(int i) const { return nodes[static_cast<std::size_t>(i)]; }
};

FlatTree flatten(const SPTree& tree);

struct BlockSP {
  Subgraph sub;                 // the block as a standalone graph
  std::optional<SPTree> tree;   // in sub ids; absent for singleton blocks
  std::vector<Edge> residual;   // in sub ids, when recognition failed
};

struct K4Report {
  bool k4_minor_free = true;
  BlockDecomposition decomposition;
  std::vector<BlockSP> blocks;  // parallel to decomposition.blocks
};

/// Every block is recognized with its lexicographically smallest edge as
/// terminal pair.
K4Report analyze_k4_minor_free(const Graph& g);
bool is_k4_minor_free(const Graph& g);

class SPError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class NotK4MinorFree : public std::runtime_error {
 public:
  NotK4MinorFree() : std::runtime_error("not_k4_minor_free") {}
};

/// Re-expresses the tree with root Parallel(path, rest) where `path` is a
/// path of the realized graph whose internal vertices have degree 2 there.
/// Throws SPError when the path is not in the graph or the rest is not
/// series-parallel between the path ends.
SPTree reroot_sp(const SPTree& tree, const std::vector<Vertex>& path);

}  // namespace indeque
