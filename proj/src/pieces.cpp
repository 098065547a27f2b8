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

#include "indeque/pieces.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <set>

#include "indeque/decompose.hpp"
#include "json.hpp"

namespace indeque {

namespace {

std::size_t idx(Vertex v) { return static_cast<std::size_t>(v); }

Edge norm(Vertex u, Vertex w) { return {std::min(u, w), std::max(u, w)}; }

VertexSet lift(const Subgraph& sub, const std::vector<Vertex>& local) {
  std::vector<Vertex> out;
  out.reserve(local.size());
  for (Vertex v : local) out.push_back(sub.to_parent[idx(v)]);
  return VertexSet(std::move(out));
}

Vertex up(const Subgraph& sub, Vertex v) { return v < 0 ? v : sub.to_parent[idx(v)]; }

bool two_connected(const Graph& h) {
  if (h.n() < 3) return false;
  auto bd = block_decompose(h);
  return bd.blocks.size() == 1 && static_cast<int>(bd.blocks[0].size()) == h.n();
}

std::vector<Edge> induced_edges(const Graph& g, const VertexSet& vs) {
  std::vector<Edge> out;
  for (Vertex u : vs) {
    for (Vertex w : g.neighbors(u)) {
      if (u < w && vs.contains(w)) out.emplace_back(u, w);
    }
  }
  return out;
}

}  // namespace

// ---------------------------------------------------------------------------
// Degree-2 chains

std::vector<ZeroSeriesPiece> find_zero_series_pieces(const Graph& g, const VertexSet& block) {
  Subgraph sub = induced_subgraph(g, block);
  const Graph& h = sub.graph;
  if (h.n() == 2 && h.m() == 1) return {ZeroSeriesPiece{{block[0], block[1]}}};
  if (!two_connected(h)) throw PieceError("block is not 2-connected");

  std::vector<char> anchor(idx(h.n()), 0);
  bool any = false;
  for (Vertex v = 0; v < h.n(); ++v) {
    if (h.degree(v) != 2) anchor[idx(v)] = any = true;
  }
  if (!any) {
    Vertex r = 0;
    for (Vertex v = 0; v < h.n(); ++v) {
      if (g.degree(sub.to_parent[idx(v)]) > h.degree(v)) {
        r = v;
        break;
      }
    }
    anchor[idx(r)] = 1;
    for (Vertex w : h.neighbors(r)) anchor[idx(w)] = 1;
  }

  std::set<Edge> used;
  std::vector<ZeroSeriesPiece> out;
  for (Vertex a = 0; a < h.n(); ++a) {
    if (!anchor[idx(a)]) continue;
    for (Vertex first : h.neighbors(a)) {
      if (used.count(norm(a, first))) continue;
      std::vector<Vertex> walk{a, first};
      used.insert(norm(a, first));
      while (!anchor[idx(walk.back())]) {
        Vertex cur = walk.back();
        Vertex prev = walk[walk.size() - 2];
        auto nb = h.neighbors(cur);
        Vertex next = nb[0] == prev ? nb[1] : nb[0];
        used.insert(norm(cur, next));
        walk.push_back(next);
      }
      ZeroSeriesPiece piece;
      for (Vertex v : walk) piece.path.push_back(sub.to_parent[idx(v)]);
      out.push_back(std::move(piece));
    }
  }
  return out;
}

std::vector<ZeroParallelPiece> find_zero_parallel_pieces(const Graph& g, const VertexSet& block) {
  std::map<Edge, std::vector<ZeroSeriesPiece>> groups;
  for (auto& p : find_zero_series_pieces(g, block)) groups[norm(p.s(), p.t())].push_back(p);
  std::vector<ZeroParallelPiece> out;
  for (auto& [ends, pieces] : groups) {
    if (pieces.size() < 2 || ends.first == ends.second) continue;
    std::set<Vertex> vs;
    for (const auto& p : pieces) vs.insert(p.path.begin(), p.path.end());
    out.push_back({ends.first, ends.second, pieces, VertexSet({vs.begin(), vs.end()})});
  }
  return out;
}

// ---------------------------------------------------------------------------
// Γ templates. Roles: 0 = s, 1 = t, 2 = v, 3 = w, 4 = u.

namespace {

struct Template {
  bool v_is_s;
  bool optional_chord;
  std::vector<int> free_roles;
  std::vector<std::pair<int, int>> edges;
};

const Template& gamma_template(int i) {
  static const std::array<Template, 6> kTemplates{{
      {true, false, {3}, {{0, 1}, {0, 3}, {1, 3}}},
      {false, false, {}, {{0, 1}, {0, 2}, {1, 2}}},
      {false, true, {3}, {{0, 3}, {3, 1}, {1, 2}, {2, 0}}},
      {false, false, {4}, {{0, 1}, {1, 4}, {4, 2}, {2, 0}}},
      {false, true, {3, 4}, {{0, 3}, {3, 1}, {1, 4}, {4, 2}, {2, 0}}},
      {false, false, {3, 4}, {{0, 1}, {0, 3}, {3, 2}, {2, 4}, {4, 1}}},
  }};
  return kTemplates[static_cast<std::size_t>(i - 1)];
}

}  // namespace

std::optional<GammaShape> match_gamma(int i, const VertexSet& vertices,
                                      const std::vector<Edge>& edges, Vertex s, Vertex t,
                                      Vertex v) {
  if (i < 1 || i > 6 || s == t || !vertices.contains(s) || !vertices.contains(t) ||
      !vertices.contains(v)) {
    return std::nullopt;
  }
  const Template& tpl = gamma_template(i);
  std::vector<Edge> actual;
  for (auto [a, b] : edges) actual.push_back(norm(a, b));
  std::sort(actual.begin(), actual.end());

  for (int flip = 0; flip < 2; ++flip) {
    const Vertex s0 = flip ? t : s;
    const Vertex t0 = flip ? s : t;
    if (tpl.v_is_s ? v != s0 : (v == s0 || v == t0)) continue;
    std::vector<Vertex> free;
    for (Vertex x : vertices) {
      if (x != s0 && x != t0 && x != v) free.push_back(x);
    }
    if (free.size() != tpl.free_roles.size()) continue;
    do {
      std::array<Vertex, 5> role{s0, t0, v, -1, -1};
      for (std::size_t k = 0; k < free.size(); ++k) {
        role[idx(tpl.free_roles[k])] = free[k];
      }
      std::vector<Edge> expected;
      for (auto [a, b] : tpl.edges) expected.push_back(norm(role[idx(a)], role[idx(b)]));
      std::sort(expected.begin(), expected.end());
      bool ok = expected == actual;
      bool chord = std::binary_search(expected.begin(), expected.end(), norm(s0, t0));
      if (!ok && tpl.optional_chord) {
        expected.push_back(norm(s0, t0));
        std::sort(expected.begin(), expected.end());
        ok = expected == actual;
        chord = ok;
      }
      if (ok) return GammaShape{i, s0, t0, v, role[3], role[4], chord};
    } while (std::next_permutation(free.begin(), free.end()));
  }
  return std::nullopt;
}

std::optional<GammaShape> matches_gamma(int i, const Graph& g, const VertexSet& vertices,
                                        Vertex s, Vertex t, Vertex v) {
  return match_gamma(i, vertices, induced_edges(g, vertices), s, t, v);
}

std::optional<GammaShape> classify_gamma(const Graph& g, const ZeroParallelPiece& q, Vertex v) {
  for (int i = 1; i <= 6; ++i) {
    if (auto shape = matches_gamma(i, g, q.vertices, q.s, q.t, v)) return shape;
  }
  return std::nullopt;
}

VertexSet TriangleString::apexes() const {
  std::vector<Vertex> out;
  for (const auto& tri : chain) out.push_back(tri.apex);
  return VertexSet(std::move(out));
}

std::string_view to_string(Pattern p) {
  switch (p) {
    case Pattern::kAdjacentDeg2: return "adjacent_deg2";
    case Pattern::kRing: return "ring";
    case Pattern::kStringPath: return "string_path";
    case Pattern::kKite: return "kite";
    case Pattern::kWholeGamma: return "whole_gamma";
    case Pattern::kGammaRing: return "gamma_ring";
    case Pattern::kPendantString: return "pendant_string";
    case Pattern::kParallelPaths: return "parallel_paths";
  }
  return "unknown";
}

// ---------------------------------------------------------------------------
// Bottom-up classification of a flattened decomposition.

namespace {

enum class Kind { kEdge, kPath2, kOpen, kClosed, kFail };

struct Info {
  Kind kind = Kind::kFail;
  Vertex s = -1;
  Vertex t = -1;
  std::vector<Vertex> verts;
  std::vector<Triangle> tri;
  std::vector<Edge> k2;
  Vertex middle = -1;

  [[nodiscard]] bool is_string() const { return kind == Kind::kOpen || kind == Kind::kClosed; }
  [[nodiscard]] std::vector<Vertex> apexes() const {
    std::vector<Vertex> out;
    for (const auto& x : tri) out.push_back(x.apex);
    return out;
  }
};

std::vector<Vertex> merged(std::initializer_list<const std::vector<Vertex>*> parts) {
  std::vector<Vertex> out;
  for (const auto* p : parts) out.insert(out.end(), p->begin(), p->end());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

class Classifier {
 public:
  Classifier(const FlatTree& tree, const Subgraph& sub, std::optional<Vertex> v)
      : tree_(tree), sub_(sub), v_(v) {}

  Info run(bool root_is_anchor) { return visit(tree_.root, root_is_anchor); }

  std::vector<Candidate> candidates;
  std::vector<TriangleString> strings;

  TriangleString to_string_match(const Info& info) const {
    TriangleString ts;
    ts.s = up(sub_, info.s);
    ts.t = up(sub_, info.t);
    for (const auto& x : info.tri) ts.chain.push_back({up(sub_, x.x), up(sub_, x.y), up(sub_, x.apex)});
    for (auto [a, b] : info.k2) ts.parallel_k2_edges.push_back(norm(up(sub_, a), up(sub_, b)));
    ts.vertices = lift(sub_, info.verts);
    ts.closed = info.kind == Kind::kClosed;
    return ts;
  }

 private:
  bool is_v(Vertex x) const { return v_ && *v_ == x; }

  void emit(Pattern p, const std::vector<Vertex>& x, const std::vector<Vertex>& s, int gamma = 0) {
    Candidate c;
    c.pattern = p;
    c.gamma = gamma;
    c.x = lift(sub_, merged({&x}));
    c.s = lift(sub_, merged({&s}));
    candidates.push_back(std::move(c));
  }

  Info visit(int id, bool root) {
    const FlatNode& node = tree_.at(id);
    Info out;
    out.s = node.s;
    out.t = node.t;
    if (node.kind == SPKind::kEdge) {
      out.kind = Kind::kEdge;
      out.verts = {node.s, node.t};
      return out;
    }
    std::vector<Info> kids;
    for (int c : node.children) kids.push_back(visit(c, false));
    for (const auto& k : kids) out.verts.insert(out.verts.end(), k.verts.begin(), k.verts.end());
    out.verts = merged({&out.verts});
    out = node.kind == SPKind::kSeries ? series(std::move(out), kids)
                                       : parallel(std::move(out), kids, root);
    if (out.is_string()) strings.push_back(to_string_match(out));
    return out;
  }

  Info series(Info out, const std::vector<Info>& kids) {
    bool fail = false;
    bool all_edges = true;
    bool all_closed = true;
    for (const auto& k : kids) {
      fail |= k.kind == Kind::kFail;
      all_edges &= k.kind == Kind::kEdge;
      all_closed &= k.kind == Kind::kClosed;
    }
    if (all_edges && kids.size() == 2) {
      out.kind = Kind::kPath2;
      out.middle = kids[0].t;
      return out;
    }
    if (all_closed) {
      out.kind = Kind::kOpen;
      for (const auto& k : kids) {
        out.tri.insert(out.tri.end(), k.tri.begin(), k.tri.end());
        out.k2.insert(out.k2.end(), k.k2.begin(), k.k2.end());
      }
      return out;
    }
    out.kind = Kind::kFail;
    // Runs of three or more edges hold two adjacent degree-2 vertices.
    const std::size_t n = kids.size();
    for (std::size_t i = 0; i + 2 < n; ++i) {
      if (kids[i].kind == Kind::kEdge && kids[i + 1].kind == Kind::kEdge &&
          kids[i + 2].kind == Kind::kEdge) {
        emit(Pattern::kAdjacentDeg2, {kids[i].s, kids[i].t, kids[i + 1].t, kids[i + 2].t},
             {kids[i].t, kids[i + 1].t});
        return out;
      }
    }
    if (fail) return out;
    // A run of one or two edges next to a closed string is a kite.
    for (std::size_t i = 0; i < n; ++i) {
      if (kids[i].kind != Kind::kClosed) continue;
      for (int dir : {-1, 1}) {
        const auto j = static_cast<std::ptrdiff_t>(i) + dir;
        if (j < 0 || j >= static_cast<std::ptrdiff_t>(n) || kids[idx(static_cast<int>(j))].kind != Kind::kEdge) {
          continue;
        }
        const Info& ts = kids[i];
        const Info& e1 = kids[idx(static_cast<int>(j))];
        const Vertex joint = dir < 0 ? ts.s : ts.t;
        const Vertex near = dir < 0 ? e1.s : e1.t;
        std::vector<Vertex> chain{near, joint};
        const auto k = j + dir;
        if (k >= 0 && k < static_cast<std::ptrdiff_t>(n) && kids[idx(static_cast<int>(k))].kind == Kind::kEdge) {
          const Info& e2 = kids[idx(static_cast<int>(k))];
          chain.insert(chain.begin(), dir < 0 ? e2.s : e2.t);
        }
        // With a 3-vertex chain the far end stays outside X.
        std::vector<Vertex> x = ts.verts;
        x.push_back(chain.size() == 3 ? chain[1] : chain[0]);
        std::vector<Vertex> s = ts.apexes();
        s.push_back(joint);
        emit(Pattern::kKite, x, s);
        Kite kite;
        for (Vertex c : chain) kite.path_part.path.push_back(up(sub_, c));
        kite.string_part = to_string_match(ts);
        kite.joint = up(sub_, joint);
        candidates.back().kite = std::move(kite);
        return out;
      }
    }
    return out;
  }

  Info parallel(Info out, const std::vector<Info>& kids, bool root) {
    const Info* edge = nullptr;
    std::vector<const Info*> paths;
    std::vector<const Info*> opens;
    bool fail = false;
    for (const auto& k : kids) {
      switch (k.kind) {
        case Kind::kEdge: edge = &k; break;
        case Kind::kPath2: paths.push_back(&k); break;
        case Kind::kOpen: opens.push_back(&k); break;
        default: fail = true; break;
      }
    }
    const Vertex x = out.s;
    const Vertex y = out.t;
    const int tag = (is_v(x) || is_v(y)) ? 1 : 0;
    bool emitted = false;

    if (opens.size() >= 2) {
      Info a = *opens[0];
      if (edge) {
        a.kind = Kind::kClosed;
        a.k2.push_back({x, y});
      }
      std::vector<Vertex> s = a.apexes();
      for (Vertex ap : opens[1]->apexes()) s.push_back(ap);
      emit(Pattern::kRing, merged({&a.verts, &opens[1]->verts}), s, tag);
      Ring ring{tag, up(sub_, x), up(sub_, y), {to_string_match(a), to_string_match(*opens[1])},
                std::nullopt, candidates.back().x};
      candidates.back().ring = std::move(ring);
      emitted = true;
    }
    if (paths.size() >= 2 && edge) {
      const Vertex a1 = paths[0]->middle;
      const Vertex a2 = paths[1]->middle;
      emit(Pattern::kRing, {x, y, a1, a2}, {a1, a2}, tag);
      Info t1{Kind::kClosed, x, y, {x, y, a1}, {{x, y, a1}}, {}, -1};
      Info t2{Kind::kOpen, x, y, {x, y, a2}, {{x, y, a2}}, {}, -1};
      candidates.back().ring =
          Ring{tag, up(sub_, x), up(sub_, y), {to_string_match(t1), to_string_match(t2)},
               std::nullopt, candidates.back().x};
      emitted = true;
    }
    if (!opens.empty() && !paths.empty()) {
      const Vertex a = paths[0]->middle;
      std::vector<Vertex> xs = opens[0]->verts;
      xs.push_back(a);
      std::vector<Vertex> s = opens[0]->apexes();
      s.push_back(a);
      emit(Pattern::kStringPath, xs, s, tag);
      emitted = true;
    }
    if (paths.size() >= 2 && !edge) {
      std::vector<Vertex> xs{x, y};
      std::vector<Vertex> s;
      for (const auto* p : paths) {
        xs.push_back(p->middle);
        s.push_back(p->middle);
      }
      emit(Pattern::kParallelPaths, xs, s);
      emitted = true;
    }
    out.kind = Kind::kFail;
    if (fail || emitted || !edge || kids.size() != 2) return out;

    const Info& inner = paths.empty() ? *opens[0] : *paths[0];
    if (root) {
      if (inner.kind == Kind::kPath2) {
        emit(Pattern::kAdjacentDeg2, {x, y, inner.middle}, {y, inner.middle});
      } else {
        std::vector<Vertex> s = inner.apexes();
        s.push_back(y);
        emit(Pattern::kPendantString, out.verts, s);
      }
      return out;
    }
    out.kind = Kind::kClosed;
    if (inner.kind == Kind::kPath2) {
      out.tri = {{x, y, inner.middle}};
    } else {
      out.tri = inner.tri;
      out.k2 = inner.k2;
      out.k2.push_back({x, y});
    }
    return out;
  }

  const FlatTree& tree_;
  const Subgraph& sub_;
  std::optional<Vertex> v_;
};

// Matches a standalone graph as a triangle-string between s and t; ids in
// the result are mapped through `sub`.
std::optional<TriangleString> match_string_in(const Subgraph& sub, Vertex s, Vertex t) {
  const Graph& h = sub.graph;
  auto rec = recognize_sp(h, s, t);
  if (!rec.ok()) return std::nullopt;
  FlatTree flat = flatten(*rec.tree);
  Classifier cls(flat, sub, std::nullopt);
  Info info = cls.run(false);
  if (!info.is_string()) return std::nullopt;
  std::vector<Edge> realized;
  for (const auto& x : info.tri) {
    realized.push_back(norm(x.x, x.y));
    realized.push_back(norm(x.x, x.apex));
    realized.push_back(norm(x.y, x.apex));
  }
  for (auto [a, b] : info.k2) realized.push_back(norm(a, b));
  std::sort(realized.begin(), realized.end());
  if (std::adjacent_find(realized.begin(), realized.end()) != realized.end() ||
      realized != h.edges()) {
    return std::nullopt;
  }
  return cls.to_string_match(info);
}

}  // namespace

std::optional<TriangleString> match_triangle_string(const Graph& g, const VertexSet& sub,
                                                    Vertex s, Vertex t) {
  if (!sub.contains(s) || !sub.contains(t) || s == t) return std::nullopt;
  Subgraph local = induced_subgraph(g, sub);
  return match_string_in(local, local.to_child[idx(s)], local.to_child[idx(t)]);
}

// ---------------------------------------------------------------------------

BlockAnalysis analyze_block(const Graph& g, const VertexSet& block, std::optional<Vertex> v) {
  BlockAnalysis out;
  out.block = block;
  out.v = v;
  Subgraph sub = induced_subgraph(g, block);
  const Graph& h = sub.graph;
  if (!two_connected(h)) return out;
  if (v && !block.contains(*v)) throw PieceError("v is not in the block");

  Vertex a = 0;
  if (v) {
    a = sub.to_child[idx(*v)];
  } else {
    for (Vertex x = 0; x < h.n(); ++x) {
      if (h.degree(x) >= 3) {
        a = x;
        break;
      }
    }
  }
  const Vertex b = h.neighbors(a).front();
  out.anchor = sub.to_parent[idx(a)];
  out.partner = sub.to_parent[idx(b)];
  auto rec = recognize_sp(h, a, b);
  if (!rec.ok()) return out;
  out.decomposed = true;
  FlatTree flat = flatten(*rec.tree);
  std::optional<Vertex> local_v;
  if (v) local_v = a;
  Classifier cls(flat, sub, local_v);
  cls.run(true);
  out.candidates = std::move(cls.candidates);
  out.strings = std::move(cls.strings);
  return out;
}

std::optional<Candidate> find_whole_gamma(const Graph& g, const VertexSet& block, Vertex v) {
  if (block.size() < 3 || block.size() > 5 || !block.contains(v)) return std::nullopt;
  for (int i = 1; i <= 6; ++i) {
    for (Vertex s : block) {
      for (Vertex t : block) {
        if (s >= t) continue;
        auto shape = matches_gamma(i, g, block, s, t, v);
        if (!shape) continue;
        Candidate c;
        c.pattern = Pattern::kWholeGamma;
        c.gamma = i;
        c.x = block;
        switch (i) {
          case 1: c.s = VertexSet{shape->t, shape->w}; break;
          case 2: c.s = VertexSet{shape->s, shape->t}; break;
          case 3: c.s = VertexSet{shape->s, shape->w}; break;
          case 4: c.s = VertexSet{shape->t, shape->u}; break;
          default: c.s = VertexSet{shape->s, shape->w, shape->u}; break;
        }
        return c;
      }
    }
  }
  return std::nullopt;
}

std::optional<Candidate> find_gamma_ring(const Graph& g, const VertexSet& block, Vertex v) {
  if (!block.contains(v)) return std::nullopt;
  Subgraph sub = induced_subgraph(g, block);
  const Graph& h = sub.graph;
  const Vertex lv = sub.to_child[idx(v)];
  const int n = h.n();

  std::vector<int> dist(idx(n), -1);
  std::vector<Vertex> queue{lv};
  dist[idx(lv)] = 0;
  for (std::size_t i = 0; i < queue.size(); ++i) {
    for (Vertex w : h.neighbors(queue[i])) {
      if (dist[idx(w)] < 0) {
        dist[idx(w)] = dist[idx(queue[i])] + 1;
        queue.push_back(w);
      }
    }
  }

  for (Vertex s = 0; s < n; ++s) {
    for (Vertex t = s + 1; t < n; ++t) {
      if (s == lv || t == lv || dist[idx(s)] < 0 || dist[idx(s)] > 2 || dist[idx(t)] < 0 ||
          dist[idx(t)] > 2) {
        continue;
      }
      Subgraph cut = remove_vertices(h, VertexSet{s, t});
      auto comps = connected_components(cut.graph);
      std::vector<std::vector<Vertex>> parts;
      int v_part = -1;
      for (const auto& c : comps) {
        std::vector<Vertex> p;
        for (Vertex x : c) p.push_back(cut.to_parent[idx(x)]);
        if (std::find(p.begin(), p.end(), lv) != p.end()) v_part = static_cast<int>(parts.size());
        parts.push_back(std::move(p));
      }
      if (v_part < 0 || parts[idx(v_part)].size() > 3 || parts.size() < 2) continue;

      for (int extra = -1; extra < static_cast<int>(parts.size()); ++extra) {
        if (extra == v_part) continue;
        if (extra >= 0 && parts[idx(extra)].size() != 1) continue;
        std::vector<Vertex> qv{s, t};
        std::vector<Vertex> rv{s, t};
        for (int p = 0; p < static_cast<int>(parts.size()); ++p) {
          auto& dst = (p == v_part || p == extra) ? qv : rv;
          dst.insert(dst.end(), parts[idx(p)].begin(), parts[idx(p)].end());
        }
        if (rv.size() <= 2) continue;
        VertexSet qset(qv);
        VertexSet rset(rv);
        const bool st = h.has_edge(s, t);
        for (int owner = 0; owner < (st ? 2 : 1); ++owner) {
          // owner 0: the s-t edge (if any) belongs to the Γ side.
          std::vector<Edge> qe;
          for (auto e : induced_edges(h, qset)) {
            if (e != Edge{s, t} || owner == 0) qe.push_back(e);
          }
          std::vector<Edge> re;
          Subgraph rs = induced_subgraph(h, rset);
          for (auto [a, b] : rs.graph.edges()) {
            if (Edge{rs.to_parent[idx(a)], rs.to_parent[idx(b)]} != Edge{s, t} || owner == 1) {
              re.emplace_back(a, b);
            }
          }
          Subgraph rest{Graph(rs.graph.n(), re), {}, {}};
          for (Vertex x : rs.to_parent) rest.to_parent.push_back(sub.to_parent[idx(x)]);
          std::optional<TriangleString> ts;
          for (int i = 2; i <= 6; ++i) {
            auto shape = match_gamma(i, qset, qe, s, t, lv);
            if (!shape) continue;
            if (!ts) ts = match_string_in(rest, rs.to_child[idx(s)], rs.to_child[idx(t)]);
            if (!ts) break;
            Candidate c;
            c.pattern = Pattern::kGammaRing;
            c.gamma = i;
            std::vector<Vertex> keep;
            for (Vertex a : ts->apexes()) keep.push_back(a);
            auto gv = [&](Vertex x) { return sub.to_parent[idx(x)]; };
            c.x = block;
            switch (i) {
              case 2: keep.push_back(gv(shape->t)); break;
              case 3: {
                keep.push_back(gv(shape->w));
                std::vector<Vertex> xs;
                for (Vertex x : block) {
                  if (x != v) xs.push_back(x);
                }
                c.x = VertexSet(xs);
                break;
              }
              case 4:
                keep.push_back(gv(shape->u));
                keep.push_back(gv(shape->s));
                break;
              default:
                keep.push_back(gv(shape->w));
                keep.push_back(gv(shape->u));
                break;
            }
            c.s = VertexSet(keep);
            GammaShape lifted = *shape;
            lifted.s = gv(shape->s);
            lifted.t = gv(shape->t);
            lifted.v = v;
            lifted.w = shape->w < 0 ? -1 : gv(shape->w);
            lifted.u = shape->u < 0 ? -1 : gv(shape->u);
            c.ring = Ring{i, lifted.s, lifted.t, {*ts}, lifted, block};
            return c;
          }
        }
      }
    }
  }
  return std::nullopt;
}

std::optional<Ring> find_ring(const Graph& g, const VertexSet& block, std::optional<Vertex> v) {
  BlockAnalysis a = analyze_block(g, block, v);
  for (const auto& c : a.candidates) {
    if (c.pattern == Pattern::kRing) return c.ring;
  }
  if (v) {
    if (auto c = find_gamma_ring(g, block, *v)) return c->ring;
  }
  for (const auto& c : a.candidates) {
    if (c.pattern != Pattern::kStringPath) continue;
    Ring ring;
    ring.gamma = c.gamma;
    ring.vertices = c.x;
    return ring;
  }
  return std::nullopt;
}

std::optional<Kite> find_kite(const Graph& g, const VertexSet& block, std::optional<Vertex> v) {
  auto pick = [&](const std::vector<Candidate>& cs) -> std::optional<Kite> {
    for (const auto& c : cs) {
      if (c.pattern == Pattern::kKite && (!v || c.kite->joint != *v)) return c.kite;
    }
    return std::nullopt;
  };
  Subgraph sub = induced_subgraph(g, block);
  if (two_connected(sub.graph)) return pick(analyze_block(g, block, v).candidates);

  const Graph& h = sub.graph;
  for (Vertex s = 0; s < h.n(); ++s) {
    for (Vertex t = s + 1; t < h.n(); ++t) {
      auto rec = recognize_sp(h, s, t);
      if (!rec.ok()) continue;
      FlatTree flat = flatten(*rec.tree);
      std::optional<Vertex> lv;
      if (v && block.contains(*v)) lv = sub.to_child[idx(*v)];
      Classifier cls(flat, sub, lv);
      cls.run(false);
      return pick(cls.candidates);
    }
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------

namespace {

using Json = nlohmann::ordered_json;

Json json_set(const VertexSet& s) { return Json(s.members()); }

Json json_string(const TriangleString& ts) {
  Json tri = Json::array();
  for (const auto& x : ts.chain) tri.push_back({x.x, x.y, x.apex});
  Json k2 = Json::array();
  for (auto [a, b] : ts.parallel_k2_edges) k2.push_back({a, b});
  return {{"s", ts.s}, {"t", ts.t}, {"closed", ts.closed}, {"triangles", tri},
          {"k2", k2}, {"vertices", json_set(ts.vertices)}};
}

Json json_shape(const GammaShape& sh) {
  return {{"index", sh.index}, {"s", sh.s}, {"t", sh.t}, {"v", sh.v}, {"chord", sh.chord}};
}

}  // namespace

std::string piece_report_json(const Graph& g) {
  BlockDecomposition bd = block_decompose(g);
  Json blocks = Json::array();
  for (std::size_t b = 0; b < bd.blocks.size(); ++b) {
    const VertexSet& block = bd.blocks[b];
    if (block.size() < 3) continue;
    Json entry;
    entry["vertices"] = json_set(block);
    std::optional<Vertex> v;
    if (bd.block_cuts[b].size() == 1) v = bd.block_cuts[b][0];
    entry["v"] = v ? Json(*v) : Json(nullptr);
    entry["leaf"] = bd.block_cuts[b].size() <= 1;

    Json pieces = Json::array();
    for (const auto& p : find_zero_series_pieces(g, block)) pieces.push_back(p.path);
    entry["pieces"] = pieces;

    Json parallel = Json::array();
    Json gammas = Json::array();
    for (const auto& q : find_zero_parallel_pieces(g, block)) {
      parallel.push_back({{"s", q.s}, {"t", q.t}, {"vertices", json_set(q.vertices)}});
      if (v && q.vertices.contains(*v)) {
        if (auto sh = classify_gamma(g, q, *v)) gammas.push_back(json_shape(*sh));
      }
    }
    entry["parallel_pieces"] = parallel;
    entry["gamma"] = gammas;

    BlockAnalysis a = analyze_block(g, block, v);
    entry["series_parallel"] = a.decomposed;
    Json strings = Json::array();
    for (const auto& ts : a.strings) strings.push_back(json_string(ts));
    entry["strings"] = strings;
    Json rings = Json::array();
    Json kites = Json::array();
    Json cands = Json::array();
    for (const auto& c : a.candidates) {
      cands.push_back({{"pattern", to_string(c.pattern)}, {"X", json_set(c.x)}, {"S", json_set(c.s)}});
      if (c.ring) rings.push_back({{"tag", c.ring->gamma}, {"vertices", json_set(c.ring->vertices)}});
      if (c.kite) {
        kites.push_back({{"joint", c.kite->joint}, {"path", c.kite->path_part.path},
                         {"string", json_string(c.kite->string_part)}});
      }
    }
    if (v) {
      if (auto c = find_gamma_ring(g, block, *v)) {
        rings.push_back({{"tag", c->gamma}, {"vertices", json_set(c->x)}});
        cands.push_back({{"pattern", to_string(c->pattern)}, {"X", json_set(c->x)}, {"S", json_set(c->s)}});
      }
      if (auto c = find_whole_gamma(g, block, *v)) {
        cands.push_back({{"pattern", to_string(c->pattern)}, {"X", json_set(c->x)}, {"S", json_set(c->s)}});
      }
    }
    entry["rings"] = rings;
    entry["kites"] = kites;
    entry["candidates"] = cands;
    blocks.push_back(entry);
  }
  Json out;
  out["n"] = g.n();
  out["blocks"] = blocks;
  return out.dump() + "\n";
}

}  // namespace indeque
