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

#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace indeque {

using Vertex = int;
using Edge = std::pair<Vertex, Vertex>;

/// Thrown when an operation is handed a vertex id outside 0..n-1 or an
/// otherwise malformed argument.
class GraphError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Sorted, duplicate-free list of vertex ids.
class VertexSet {
 public:
  VertexSet() = default;
  /// Sorts `members`; throws GraphError on duplicates or negative ids.
  explicit VertexSet(std::vector<Vertex> members);
  VertexSet(std::initializer_list<Vertex> members)
      : VertexSet(std::vector<Vertex>(members)) {}

  [[nodiscard]] std::size_t size() const { return members_.size(); }
  [[nodiscard]] bool empty() const { return members_.empty(); }
  [[nodiscard]] bool contains(Vertex v) const;
  [[nodiscard]] const std::vector<Vertex>& members() const { return members_; }
  [[nodiscard]] auto begin() const { return members_.begin(); }
  [[nodiscard]] auto end() const { return members_.end(); }
  [[nodiscard]] Vertex operator[](std::size_t i) const { return members_[i]; }

  friend bool operator==(const VertexSet&, const VertexSet&) = default;

 private:
  std::vector<Vertex> members_;
};

/// Simple undirected graph on vertices 0..n-1 with sorted adjacency lists.
/// Immutable once built.
class Graph {
 public:
  Graph() = default;
  /// Builds from an edge list. Edges may be given in either orientation;
  /// throws GraphError on out-of-range ids, self-loops or duplicate edges.
  Graph(int n, const std::vector<Edge>& edges, std::string name = {});

  [[nodiscard]] int n() const { return static_cast<int>(adj_.size()); }
  [[nodiscard]] int m() const { return m_; }
  [[nodiscard]] std::span<const Vertex> neighbors(Vertex v) const {
    return adj_[static_cast<std::size_t>(v)];
  }
  [[nodiscard]] int degree(Vertex v) const {
    return static_cast<int>(adj_[static_cast<std::size_t>(v)].size());
  }
  [[nodiscard]] int max_degree() const;
  [[nodiscard]] bool has_edge(Vertex u, Vertex w) const;
  /// All edges (u, w) with u < w in lexicographic order.
  [[nodiscard]] std::vector<Edge> edges() const;
  [[nodiscard]] const std::string& name() const { return name_; }
  [[nodiscard]] bool valid_vertex(Vertex v) const { return v >= 0 && v < n(); }

  friend bool operator==(const Graph& a, const Graph& b) { return a.adj_ == b.adj_; }

 private:
  std::vector<std::vector<Vertex>> adj_;
  int m_ = 0;
  std::string name_;
};

/// A graph together with the order-preserving map from its ids back to the
/// ids of the graph it was cut out of.
struct Subgraph {
  Graph graph;
  std::vector<Vertex> to_parent;  // new id -> parent id
  std::vector<Vertex> to_child;   // parent id -> new id, or -1
};

Subgraph induced_subgraph(const Graph& g, const VertexSet& s);
/// Induced subgraph on V(g) minus `removed`.
Subgraph remove_vertices(const Graph& g, const VertexSet& removed);
/// Disjoint union; the vertices of `b` are shifted by a.n().
Graph disjoint_union(const Graph& a, const Graph& b);

/// Connected components as sorted vertex sets, ordered by smallest member.
std::vector<VertexSet> connected_components(const Graph& g);

// ---------------------------------------------------------------------------
// Indeque verification

/// Vertex set whose induced subgraph is a disjoint union of cliques, with its
/// component partition.
struct IndequeCertificate {
  VertexSet set;
  std::vector<VertexSet> components;
};

struct IndequeVerdict {
  std::optional<IndequeCertificate> certificate;
  /// Two vertices in one component of G[S] that are not adjacent.
  std::optional<Edge> witness;

  [[nodiscard]] bool accepted() const { return certificate.has_value(); }
};

IndequeVerdict verify_indeque(const Graph& g, const VertexSet& s);
inline bool is_indeque(const Graph& g, const VertexSet& s) {
  return verify_indeque(g, s).accepted();
}

// ---------------------------------------------------------------------------
// Text formats

enum class ParseErrorKind {
  kMalformedHeader,
  kMalformedEdge,
  kVertexOutOfRange,
  kSelfLoop,
  kDuplicateEdge,
  kEdgeCountMismatch,
  kMalformedSet,
};

std::string_view to_string(ParseErrorKind kind);

class ParseError : public std::runtime_error {
 public:
  ParseError(ParseErrorKind kind, int line, const std::string& detail);
  [[nodiscard]] ParseErrorKind kind() const { return kind_; }
  [[nodiscard]] int line() const { return line_; }

 private:
  ParseErrorKind kind_;
  int line_;
};

/// Edge-list format: `n m` header then m lines `u v`.
Graph parse_graph(std::string_view text);
/// Canonical form: edges with u < v, sorted, `\n` terminated.
std::string emit_graph(const Graph& g);

/// One decimal id per line. Ids are checked against `n` when n >= 0.
VertexSet parse_vertex_set(std::string_view text, int n = -1);
std::string emit_vertex_set(const VertexSet& s);

Graph read_graph_file(const std::string& path);
VertexSet read_vertex_set_file(const std::string& path, int n = -1);
void write_text_file(const std::string& path, std::string_view text);

}  // namespace indeque
