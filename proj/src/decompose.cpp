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

#include "indeque/decompose.hpp"

#include <algorithm>
#include <deque>
#include <map>

namespace indeque {

namespace {

std::size_t idx(Vertex v) { return static_cast<std::size_t>(v); }

}  // namespace

BlockDecomposition block_decompose(const Graph& g) {
  const int n = g.n();
  std::vector<int> disc(idx(n), -1);
  std::vector<int> low(idx(n), 0);
  std::vector<Edge> edge_stack;
  std::vector<std::vector<Vertex>> raw_blocks;

  struct Frame {
    Vertex v;
    Vertex parent;
    std::size_t next;
  };
  std::vector<Frame> stack;
  int time = 0;

  for (Vertex r = 0; r < n; ++r) {
    if (disc[idx(r)] >= 0) continue;
    if (g.degree(r) == 0) {
      disc[idx(r)] = time++;
      raw_blocks.push_back({r});
      continue;
    }
    disc[idx(r)] = low[idx(r)] = time++;
    stack.push_back({r, -1, 0});
    while (!stack.empty()) {
      Frame& f = stack.back();
      auto nbrs = g.neighbors(f.v);
      if (f.next < nbrs.size()) {
        Vertex w = nbrs[f.next++];
        if (w == f.parent) continue;
        if (disc[idx(w)] < 0) {
          edge_stack.emplace_back(f.v, w);
          disc[idx(w)] = low[idx(w)] = time++;
          stack.push_back({w, f.v, 0});
        } else if (disc[idx(w)] < disc[idx(f.v)]) {
          edge_stack.emplace_back(f.v, w);
          low[idx(f.v)] = std::min(low[idx(f.v)], disc[idx(w)]);
        }
        continue;
      }
      const Vertex w = f.v;
      const Vertex v = f.parent;
      stack.pop_back();
      if (v < 0) continue;
      low[idx(v)] = std::min(low[idx(v)], low[idx(w)]);
      if (low[idx(w)] >= disc[idx(v)]) {
        std::vector<Vertex> members;
        while (true) {
          Edge e = edge_stack.back();
          edge_stack.pop_back();
          members.push_back(e.first);
          members.push_back(e.second);
          if (e == Edge{v, w}) break;
        }
        std::sort(members.begin(), members.end());
        members.erase(std::unique(members.begin(), members.end()), members.end());
        raw_blocks.push_back(std::move(members));
      }
    }
  }

  std::sort(raw_blocks.begin(), raw_blocks.end());
  BlockDecomposition out;
  out.vertex_blocks.assign(idx(n), {});
  for (std::size_t b = 0; b < raw_blocks.size(); ++b) {
    for (Vertex v : raw_blocks[b]) out.vertex_blocks[idx(v)].push_back(static_cast<int>(b));
    out.blocks.emplace_back(std::move(raw_blocks[b]));
  }
  std::vector<Vertex> cuts;
  for (Vertex v = 0; v < n; ++v) {
    if (out.vertex_blocks[idx(v)].size() >= 2) cuts.push_back(v);
  }
  out.cut_vertices = VertexSet(cuts);
  out.block_cuts.assign(out.blocks.size(), {});
  for (Vertex c : cuts) {
    for (int b : out.vertex_blocks[idx(c)]) out.block_cuts[static_cast<std::size_t>(b)].push_back(c);
  }
  for (std::size_t b = 0; b < out.blocks.size(); ++b) {
    if (out.block_cuts[b].size() <= 1) out.leaf_blocks.push_back(static_cast<int>(b));
  }
  return out;
}

// ---------------------------------------------------------------------------

std::vector<Edge> sp_tree_edges(const SPTree& tree) {
  std::vector<Edge> out;
  for (const auto& node : tree.nodes) {
    if (node.kind == SPKind::kEdge) {
      out.emplace_back(std::min(node.s, node.t), std::max(node.s, node.t));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

VertexSet sp_tree_vertices(const SPTree& tree) {
  std::vector<Vertex> vs;
  for (auto [u, w] : sp_tree_edges(tree)) {
    vs.push_back(u);
    vs.push_back(w);
  }
  std::sort(vs.begin(), vs.end());
  vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
  return VertexSet(std::move(vs));
}

namespace {

// Reduction on the multigraph shadow of an edge list. Vertices without
// edges are ignored.
SPRecognition reduce(int n, const std::vector<Edge>& edges, Vertex s, Vertex t) {
  SPRecognition result;
  SPTree tree;
  std::vector<std::map<Vertex, int>> nb(idx(n));

  auto make = [&](SPKind kind, Vertex a, Vertex b, int left, int right, Vertex shared) {
    tree.nodes.push_back({kind, a, b, left, right, shared});
    return static_cast<int>(tree.nodes.size()) - 1;
  };
  auto attach = [&](Vertex a, Vertex b, int node) {
    auto it = nb[idx(a)].find(b);
    if (it != nb[idx(a)].end()) {
      node = make(SPKind::kParallel, a, b, it->second, node, -1);
    }
    nb[idx(a)][b] = node;
    nb[idx(b)][a] = node;
  };

  for (auto [u, w] : edges) attach(u, w, make(SPKind::kEdge, u, w, -1, -1, -1));

  std::deque<Vertex> work;
  for (Vertex v = 0; v < n; ++v) {
    if (v != s && v != t && nb[idx(v)].size() == 2) work.push_back(v);
  }
  while (!work.empty()) {
    Vertex v = work.front();
    work.pop_front();
    if (v == s || v == t || nb[idx(v)].size() != 2) continue;
    auto it = nb[idx(v)].begin();
    auto [x, ex] = *it++;
    auto [y, ey] = *it;
    nb[idx(v)].clear();
    nb[idx(x)].erase(v);
    nb[idx(y)].erase(v);
    attach(x, y, make(SPKind::kSeries, x, y, ex, ey, v));
    if (x != s && x != t && nb[idx(x)].size() == 2) work.push_back(x);
    if (y != s && y != t && nb[idx(y)].size() == 2) work.push_back(y);
  }

  bool ok = nb[idx(s)].size() == 1 && nb[idx(s)].count(t) == 1;
  for (Vertex v = 0; v < n && ok; ++v) {
    if (v != s && v != t && !nb[idx(v)].empty()) ok = false;
  }
  if (!ok) {
    for (Vertex v = 0; v < n; ++v) {
      for (auto [w, node] : nb[idx(v)]) {
        if (v < w) result.residual.emplace_back(v, w);
      }
    }
    return result;
  }

  // Orient top-down so that every series node reads s -> shared -> t.
  tree.root = nb[idx(s)].at(t);
  std::vector<std::pair<int, Edge>> todo{{tree.root, {s, t}}};
  while (!todo.empty()) {
    auto [id, ends] = todo.back();
    todo.pop_back();
    SPNode& node = tree.nodes[idx(id)];
    node.s = ends.first;
    node.t = ends.second;
    if (node.kind == SPKind::kParallel) {
      todo.push_back({node.left, ends});
      todo.push_back({node.right, ends});
    } else if (node.kind == SPKind::kSeries) {
      const SPNode& l = tree.nodes[idx(node.left)];
      if (l.s != node.s && l.t != node.s) std::swap(node.left, node.right);
      todo.push_back({node.left, {node.s, node.shared}});
      todo.push_back({node.right, {node.shared, node.t}});
    }
  }
  result.tree = std::move(tree);
  return result;
}

}  // namespace

SPRecognition recognize_sp(const Graph& block, Vertex s, Vertex t) {
  const auto edges = block.edges();
  bool usable = block.valid_vertex(s) && block.valid_vertex(t) && s != t;
  for (Vertex v = 0; v < block.n() && usable; ++v) {
    if (block.degree(v) == 0) usable = false;
  }
  if (!usable) {
    SPRecognition failed;
    failed.residual = edges;
    return failed;
  }
  return reduce(block.n(), edges, s, t);
}

// ---------------------------------------------------------------------------

namespace {

void collect(const SPTree& tree, int id, SPKind kind, std::vector<int>& out) {
  const SPNode& node = tree.at(id);
  if (node.kind != kind) {
    out.push_back(id);
    return;
  }
  collect(tree, node.left, kind, out);
  collect(tree, node.right, kind, out);
}

int build_flat(const SPTree& tree, int id, FlatTree& flat) {
  const SPNode& node = tree.at(id);
  FlatNode out{node.kind, node.s, node.t, {}};
  if (node.kind != SPKind::kEdge) {
    std::vector<int> parts;
    collect(tree, id, node.kind, parts);
    if (node.kind == SPKind::kParallel) {
      std::stable_partition(parts.begin(), parts.end(), [&](int c) {
        return tree.at(c).kind == SPKind::kEdge;
      });
    }
    for (int c : parts) out.children.push_back(build_flat(tree, c, flat));
  }
  flat.nodes.push_back(std::move(out));
  return static_cast<int>(flat.nodes.size()) - 1;
}

}  // namespace

FlatTree flatten(const SPTree& tree) {
  FlatTree flat;
  if (tree.root >= 0) flat.root = build_flat(tree, tree.root, flat);
  return flat;
}

// ---------------------------------------------------------------------------

K4Report analyze_k4_minor_free(const Graph& g) {
  K4Report report;
  report.decomposition = block_decompose(g);
  for (const auto& block : report.decomposition.blocks) {
    BlockSP entry;
    entry.sub = induced_subgraph(g, block);
    if (entry.sub.graph.m() > 0) {
      auto [s, t] = entry.sub.graph.edges().front();
      auto rec = recognize_sp(entry.sub.graph, s, t);
      entry.tree = std::move(rec.tree);
      entry.residual = std::move(rec.residual);
      if (!entry.tree) report.k4_minor_free = false;
    }
    report.blocks.push_back(std::move(entry));
  }
  return report;
}

bool is_k4_minor_free(const Graph& g) { return analyze_k4_minor_free(g).k4_minor_free; }

SPTree reroot_sp(const SPTree& tree, const std::vector<Vertex>& path) {
  if (tree.root < 0) throw SPError("empty tree");
  if (path.size() < 2) throw SPError("path needs at least two vertices");
  auto edges = sp_tree_edges(tree);
  const Vertex n = edges.empty() ? 0 : sp_tree_vertices(tree).members().back() + 1;
  std::vector<int> degree(idx(n), 0);
  for (auto [u, w] : edges) {
    ++degree[idx(u)];
    ++degree[idx(w)];
  }
  std::vector<Edge> path_edges;
  for (std::size_t i = 0; i + 1 < path.size(); ++i) {
    Vertex u = path[i];
    Vertex w = path[i + 1];
    Edge e{std::min(u, w), std::max(u, w)};
    if (u < 0 || w < 0 || u >= n || w >= n ||
        !std::binary_search(edges.begin(), edges.end(), e)) {
      throw SPError("path edge not in block");
    }
    if (i > 0 && degree[idx(u)] != 2) throw SPError("path has a branching internal vertex");
    path_edges.push_back(e);
  }
  std::sort(path_edges.begin(), path_edges.end());
  std::vector<Edge> rest;
  std::set_difference(edges.begin(), edges.end(), path_edges.begin(), path_edges.end(),
                      std::back_inserter(rest));
  const Vertex s = path.front();
  const Vertex t = path.back();
  if (rest.empty()) throw SPError("path is the whole block");
  auto rec = reduce(n, rest, s, t);
  if (!rec.tree) throw SPError("remainder is not series-parallel between the path ends");

  SPTree out = std::move(*rec.tree);
  auto add = [&](SPNode node) {
    out.nodes.push_back(node);
    return static_cast<int>(out.nodes.size()) - 1;
  };
  int chain = add({SPKind::kEdge, path[0], path[1], -1, -1, -1});
  for (std::size_t i = 1; i + 1 < path.size(); ++i) {
    int e = add({SPKind::kEdge, path[i], path[i + 1], -1, -1, -1});
    chain = add({SPKind::kSeries, path[0], path[i + 1], chain, e, path[i]});
  }
  out.root = add({SPKind::kParallel, s, t, chain, out.root, -1});
  return out;
}

}  // namespace indeque
