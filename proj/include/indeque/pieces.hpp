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

// Structural patterns inside 2-connected series-parallel blocks: degree-2
// chains, the six Γ shapes, triangle-strings, rings and kites.
//
// Every matcher takes the host graph plus a vertex set and reports vertices
// in host ids. Matches are checked against the host edges before they are
// returned.

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "indeque/graph.hpp"

namespace indeque {

/// Maximal path whose internal vertices have degree 2 in the block.
struct ZeroSeriesPiece {
  std::vector<Vertex> path;

  [[nodiscard]] Vertex s() const { return path.front(); }
  [[nodiscard]] Vertex t() const { return path.back(); }
  [[nodiscard]] std::vector<Vertex> internal() const {
    return {path.begin() + 1, path.end() - 1};
  }
};

/// Two or more degree-2 chains sharing both ends.
struct ZeroParallelPiece {
  Vertex s = -1;
  Vertex t = -1;
  std::vector<ZeroSeriesPiece> pieces;
  VertexSet vertices;
};

class PieceError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Chains are anchored at block vertices whose block degree is not 2. When
/// the block is a cycle the anchors are r and its two cycle neighbours,
/// where r is the smallest vertex with neighbours outside the block, or the
/// smallest vertex when there is none. Throws PieceError unless the block
/// is 2-connected (a single edge is accepted).
std::vector<ZeroSeriesPiece> find_zero_series_pieces(const Graph& g, const VertexSet& block);
std::vector<ZeroParallelPiece> find_zero_parallel_pieces(const Graph& g, const VertexSet& block);

struct GammaShape {
  int index = 0;  // 1..6
  Vertex s = -1;  // for Γ4 and Γ5, the terminal adjacent to v
  Vertex t = -1;
  Vertex v = -1;
  Vertex w = -1;  // -1 when the template has no such role
  Vertex u = -1;
  bool chord = false;  // s-t edge present (always true for Γ1, Γ2, Γ4, Γ6)
};

/// Matches the graph (vertices, edges) against template i with s, t, v
/// pinned up to exchanging s and t.
std::optional<GammaShape> match_gamma(int i, const VertexSet& vertices,
                                      const std::vector<Edge>& edges, Vertex s, Vertex t,
                                      Vertex v);
/// Same, on the subgraph of g induced by `vertices`.
std::optional<GammaShape> matches_gamma(int i, const Graph& g, const VertexSet& vertices,
                                        Vertex s, Vertex t, Vertex v);
/// First template (in index order) matching the piece.
std::optional<GammaShape> classify_gamma(const Graph& g, const ZeroParallelPiece& q, Vertex v);

struct Triangle {
  Vertex x = -1;
  Vertex y = -1;
  Vertex apex = -1;
};

struct TriangleString {
  Vertex s = -1;
  Vertex t = -1;
  std::vector<Triangle> chain;          // in order of the decomposition
  std::vector<Edge> parallel_k2_edges;  // closing edges that are not triangle bases
  std::optional<GammaShape> gamma_substitution;
  VertexSet vertices;
  bool closed = false;  // s and t adjacent

  [[nodiscard]] VertexSet apexes() const;
};

/// Matches g[sub] as a triangle-string with terminals s and t.
std::optional<TriangleString> match_triangle_string(const Graph& g, const VertexSet& sub,
                                                    Vertex s, Vertex t);

struct Ring {
  int gamma = 0;  // 0 = plain, otherwise the Γ index
  Vertex s = -1;
  Vertex t = -1;
  std::vector<TriangleString> strings;  // two strings; one for Γ rings
  std::optional<GammaShape> shape;      // Γ rings: the substituted piece
  VertexSet vertices;
};

struct Kite {
  ZeroSeriesPiece path_part;  // ends at the joint
  TriangleString string_part;
  Vertex joint = -1;
};

/// Contra-pair shapes the block analysis can report.
enum class Pattern {
  kAdjacentDeg2,   // two adjacent degree-2 vertices
  kRing,           // two strings in parallel
  kStringPath,     // a string in parallel with a 2-edge chain
  kKite,           // a string with a chain of 1 or 2 edges at one end
  kWholeGamma,     // the block is a single Γ shape
  kGammaRing,      // a Γ shape in parallel with a string
  kPendantString,  // an edge at the anchor in parallel with a string
  kParallelPaths,  // two or more 2-edge chains between the same ends
};

std::string_view to_string(Pattern p);

struct Candidate {
  Pattern pattern = Pattern::kAdjacentDeg2;
  int gamma = 0;  // ring tag or Γ index
  VertexSet x;    // to delete
  VertexSet s;    // to keep
  std::optional<Ring> ring;
  std::optional<Kite> kite;
};

/// Result of decomposing one block around its anchor. The anchor is the
/// cut vertex v when given, else the smallest vertex of block degree >= 3,
/// else the smallest vertex.
struct BlockAnalysis {
  VertexSet block;
  std::optional<Vertex> v;
  Vertex anchor = -1;
  Vertex partner = -1;
  bool decomposed = false;
  std::vector<Candidate> candidates;     // post-order
  std::vector<TriangleString> strings;   // every string node, post-order
};

/// `block` must be a 2-connected series-parallel block of g whose only
/// vertex with neighbours outside the block is v (if any).
BlockAnalysis analyze_block(const Graph& g, const VertexSet& block, std::optional<Vertex> v);

/// The block is exactly one Γ shape containing v.
std::optional<Candidate> find_whole_gamma(const Graph& g, const VertexSet& block, Vertex v);
/// The block is a Γi shape (i >= 2) containing v in parallel with a string.
std::optional<Candidate> find_gamma_ring(const Graph& g, const VertexSet& block, Vertex v);

/// Triangle-rings first, then Γ rings at v, then ring-like string/chain
/// pairs.
std::optional<Ring> find_ring(const Graph& g, const VertexSet& block, std::optional<Vertex> v);
/// A kite whose joint is not v. Blocks that are not 2-connected are read as
/// 2-terminal graphs between the first vertex pair that decomposes.
std::optional<Kite> find_kite(const Graph& g, const VertexSet& block, std::optional<Vertex> v);

/// JSON dump of every block's pieces, Γ matches, strings, rings, kites and
/// candidates.
std::string piece_report_json(const Graph& g);

}  // namespace indeque
