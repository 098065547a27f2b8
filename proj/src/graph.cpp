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

#include "indeque/graph.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>

namespace indeque {

VertexSet::VertexSet(std::vector<Vertex> members) : members_(std::move(members)) {
  std::sort(members_.begin(), members_.end());
  if (std::adjacent_find(members_.begin(), members_.end()) != members_.end()) {
    throw GraphError("vertex set contains a duplicate id");
  }
  if (!members_.empty() && members_.front() < 0) {
    throw GraphError("vertex set contains a negative id");
  }
}

bool VertexSet::contains(Vertex v) const {
  return std::binary_search(members_.begin(), members_.end(), v);
}

Graph::Graph(int n, const std::vector<Edge>& edges, std::string name)
    : name_(std::move(name)) {
  if (n < 0) throw GraphError("negative vertex count");
  adj_.assign(static_cast<std::size_t>(n), {});
  for (auto [u, w] : edges) {
    if (u < 0 || u >= n || w < 0 || w >= n) {
      throw GraphError("edge (" + std::to_string(u) + "," + std::to_string(w) +
                       ") out of range");
    }
    if (u == w) throw GraphError("self-loop at " + std::to_string(u));
    adj_[static_cast<std::size_t>(u)].push_back(w);
    adj_[static_cast<std::size_t>(w)].push_back(u);
  }
  for (std::size_t v = 0; v < adj_.size(); ++v) {
    auto& a = adj_[v];
    std::sort(a.begin(), a.end());
    auto dup = std::adjacent_find(a.begin(), a.end());
    if (dup != a.end()) {
      throw GraphError("duplicate edge (" + std::to_string(v) + "," +
                       std::to_string(*dup) + ")");
    }
  }
  m_ = static_cast<int>(edges.size());
}

int Graph::max_degree() const {
  int best = 0;
  for (const auto& a : adj_) best = std::max(best, static_cast<int>(a.size()));
  return best;
}

bool Graph::has_edge(Vertex u, Vertex w) const {
  if (!valid_vertex(u) || !valid_vertex(w)) return false;
  const auto& a = adj_[static_cast<std::size_t>(u)];
  return std::binary_search(a.begin(), a.end(), w);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(static_cast<std::size_t>(m_));
  for (Vertex u = 0; u < n(); ++u) {
    for (Vertex w : neighbors(u)) {
      if (u < w) out.emplace_back(u, w);
    }
  }
  return out;
}

Subgraph induced_subgraph(const Graph& g, const VertexSet& s) {
  Subgraph sub;
  sub.to_child.assign(static_cast<std::size_t>(g.n()), -1);
  sub.to_parent.reserve(s.size());
  for (Vertex v : s) {
    if (!g.valid_vertex(v)) {
      throw GraphError("vertex " + std::to_string(v) + " not in graph");
    }
    sub.to_child[static_cast<std::size_t>(v)] = static_cast<Vertex>(sub.to_parent.size());
    sub.to_parent.push_back(v);
  }
  std::vector<Edge> edges;
  for (Vertex v : s) {
    for (Vertex w : g.neighbors(v)) {
      if (v < w && sub.to_child[static_cast<std::size_t>(w)] >= 0) {
        edges.emplace_back(sub.to_child[static_cast<std::size_t>(v)],
                           sub.to_child[static_cast<std::size_t>(w)]);
      }
    }
  }
  sub.graph = Graph(static_cast<int>(s.size()), edges);
  return sub;
}

Subgraph remove_vertices(const Graph& g, const VertexSet& removed) {
  std::vector<Vertex> keep;
  keep.reserve(static_cast<std::size_t>(g.n()));
  for (Vertex v = 0; v < g.n(); ++v) {
    if (!removed.contains(v)) keep.push_back(v);
  }
  return induced_subgraph(g, VertexSet(std::move(keep)));
}

Graph disjoint_union(const Graph& a, const Graph& b) {
  auto edges = a.edges();
  for (auto [u, w] : b.edges()) edges.emplace_back(u + a.n(), w + a.n());
  return Graph(a.n() + b.n(), edges);
}

std::vector<VertexSet> connected_components(const Graph& g) {
  std::vector<int> comp(static_cast<std::size_t>(g.n()), -1);
  std::vector<VertexSet> out;
  std::vector<Vertex> stack;
  for (Vertex r = 0; r < g.n(); ++r) {
    if (comp[static_cast<std::size_t>(r)] >= 0) continue;
    std::vector<Vertex> members;
    comp[static_cast<std::size_t>(r)] = static_cast<int>(out.size());
    stack.push_back(r);
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      members.push_back(v);
      for (Vertex w : g.neighbors(v)) {
        if (comp[static_cast<std::size_t>(w)] < 0) {
          comp[static_cast<std::size_t>(w)] = static_cast<int>(out.size());
          stack.push_back(w);
        }
      }
    }
    out.emplace_back(std::move(members));
  }
  return out;
}

IndequeVerdict verify_indeque(const Graph& g, const VertexSet& s) {
  for (Vertex v : s) {
    if (!g.valid_vertex(v)) {
      throw GraphError("vertex " + std::to_string(v) + " not in graph");
    }
  }
  std::vector<char> in(static_cast<std::size_t>(g.n()), 0);
  for (Vertex v : s) in[static_cast<std::size_t>(v)] = 1;
  std::vector<char> seen(static_cast<std::size_t>(g.n()), 0);
  std::vector<VertexSet> components;
  std::vector<Vertex> stack;

  IndequeVerdict verdict;
  for (Vertex r : s) {
    if (seen[static_cast<std::size_t>(r)]) continue;
    std::vector<Vertex> members;
    long long inner_degree = 0;
    seen[static_cast<std::size_t>(r)] = 1;
    stack.push_back(r);
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      members.push_back(v);
      for (Vertex w : g.neighbors(v)) {
        if (!in[static_cast<std::size_t>(w)]) continue;
        ++inner_degree;
        if (!seen[static_cast<std::size_t>(w)]) {
          seen[static_cast<std::size_t>(w)] = 1;
          stack.push_back(w);
        }
      }
    }
    const auto k = static_cast<long long>(members.size());
    VertexSet comp(std::move(members));
    if (inner_degree != k * (k - 1)) {
      // Smallest member missing a neighbour, then its smallest non-neighbour.
      for (Vertex u : comp) {
        for (Vertex w : comp) {
          if (w != u && !g.has_edge(u, w)) {
            verdict.witness = Edge{u, w};
            return verdict;
          }
        }
      }
    }
    components.push_back(std::move(comp));
  }
  std::sort(components.begin(), components.end(),
            [](const VertexSet& a, const VertexSet& b) { return a[0] < b[0]; });
  verdict.certificate = IndequeCertificate{s, std::move(components)};
  return verdict;
}

// ---------------------------------------------------------------------------

std::string_view to_string(ParseErrorKind kind) {
  switch (kind) {
    case ParseErrorKind::kMalformedHeader: return "malformed_header";
    case ParseErrorKind::kMalformedEdge: return "malformed_edge";
    case ParseErrorKind::kVertexOutOfRange: return "vertex_out_of_range";
    case ParseErrorKind::kSelfLoop: return "self_loop";
    case ParseErrorKind::kDuplicateEdge: return "duplicate_edge";
    case ParseErrorKind::kEdgeCountMismatch: return "edge_count_mismatch";
    case ParseErrorKind::kMalformedSet: return "malformed_set";
  }
  return "unknown";
}

ParseError::ParseError(ParseErrorKind kind, int line, const std::string& detail)
    : std::runtime_error(std::string(to_string(kind)) + " (line " +
                         std::to_string(line) + "): " + detail),
      kind_(kind),
      line_(line) {}

namespace {

// Splits into lines, dropping a trailing '\r' and ignoring blank lines.
std::vector<std::pair<int, std::string_view>> content_lines(std::string_view text) {
  std::vector<std::pair<int, std::string_view>> out;
  int number = 0;
  while (!text.empty()) {
    auto pos = text.find('\n');
    std::string_view line = text.substr(0, pos);
    text = pos == std::string_view::npos ? std::string_view{} : text.substr(pos + 1);
    ++number;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.find_first_not_of(" \t") == std::string_view::npos) continue;
    out.emplace_back(number, line);
  }
  return out;
}

// Parses whitespace-separated non-negative integers; nullopt on junk.
std::optional<std::vector<long long>> parse_ints(std::string_view line) {
  std::vector<long long> values;
  std::size_t i = 0;
  while (i < line.size()) {
    if (line[i] == ' ' || line[i] == '\t') {
      ++i;
      continue;
    }
    long long value = 0;
    auto [ptr, ec] = std::from_chars(line.data() + i, line.data() + line.size(), value);
    if (ec != std::errc{} || value < 0) return std::nullopt;
    std::size_t next = static_cast<std::size_t>(ptr - line.data());
    if (next < line.size() && line[next] != ' ' && line[next] != '\t') return std::nullopt;
    values.push_back(value);
    i = next;
  }
  return values;
}

}  // namespace

Graph parse_graph(std::string_view text) {
  auto lines = content_lines(text);
  if (lines.empty()) throw ParseError(ParseErrorKind::kMalformedHeader, 1, "empty input");
  auto header = parse_ints(lines[0].second);
  if (!header || header->size() != 2 || (*header)[0] > 100'000'000) {
    throw ParseError(ParseErrorKind::kMalformedHeader, lines[0].first,
                     "expected `n m`");
  }
  const auto n = static_cast<int>((*header)[0]);
  const auto m = (*header)[1];
  if (static_cast<long long>(lines.size()) - 1 != m) {
    throw ParseError(ParseErrorKind::kEdgeCountMismatch, lines[0].first,
                     "header announces " + std::to_string(m) + " edges, found " +
                         std::to_string(lines.size() - 1));
  }
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(m));
  std::vector<Edge> sorted;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    auto [number, line] = lines[i];
    auto values = parse_ints(line);
    if (!values || values->size() != 2) {
      throw ParseError(ParseErrorKind::kMalformedEdge, number, "expected `u v`");
    }
    long long u = (*values)[0];
    long long w = (*values)[1];
    if (u >= n || w >= n) {
      throw ParseError(ParseErrorKind::kVertexOutOfRange, number,
                       "vertex id must be < " + std::to_string(n));
    }
    if (u == w) {
      throw ParseError(ParseErrorKind::kSelfLoop, number, "self-loop at " + std::to_string(u));
    }
    edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(w));
    sorted.emplace_back(static_cast<Vertex>(std::min(u, w)), static_cast<Vertex>(std::max(u, w)));
  }
  std::vector<std::size_t> order(sorted.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return sorted[a] < sorted[b]; });
  for (std::size_t i = 1; i < order.size(); ++i) {
    if (sorted[order[i]] == sorted[order[i - 1]]) {
      const auto [u, w] = sorted[order[i]];
      throw ParseError(ParseErrorKind::kDuplicateEdge,
                       lines[std::max(order[i], order[i - 1]) + 1].first,
                       "edge " + std::to_string(u) + " " + std::to_string(w) +
                           " listed twice");
    }
  }
  return Graph(n, edges);
}

std::string emit_graph(const Graph& g) {
  std::ostringstream out;
  out << g.n() << ' ' << g.m() << '\n';
  for (auto [u, w] : g.edges()) out << u << ' ' << w << '\n';
  return out.str();
}

VertexSet parse_vertex_set(std::string_view text, int n) {
  std::vector<Vertex> ids;
  for (auto [number, line] : content_lines(text)) {
    auto values = parse_ints(line);
    if (!values || values->size() != 1) {
      throw ParseError(ParseErrorKind::kMalformedSet, number, "expected one id per line");
    }
    if (n >= 0 && (*values)[0] >= n) {
      throw ParseError(ParseErrorKind::kVertexOutOfRange, number,
                       "vertex id must be < " + std::to_string(n));
    }
    ids.push_back(static_cast<Vertex>((*values)[0]));
  }
  try {
    return VertexSet(std::move(ids));
  } catch (const GraphError& e) {
    throw ParseError(ParseErrorKind::kMalformedSet, 0, e.what());
  }
}

std::string emit_vertex_set(const VertexSet& s) {
  std::string out;
  for (Vertex v : s) {
    out += std::to_string(v);
    out += '\n';
  }
  return out;
}

namespace {
std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}
}  // namespace

Graph read_graph_file(const std::string& path) { return parse_graph(slurp(path)); }

VertexSet read_vertex_set_file(const std::string& path, int n) {
  return parse_vertex_set(slurp(path), n);
}

void write_text_file(const std::string& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << text;
}

}  // namespace indeque
