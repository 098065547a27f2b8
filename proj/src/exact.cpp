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

#include "indeque/exact.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <limits>
#include <memory>

namespace indeque {

namespace {

std::size_t idx(int v) { return static_cast<std::size_t>(v); }

// ---------------------------------------------------------------------------
// Brute force

struct Component {
  std::vector<Vertex> verts;
  std::vector<std::uint32_t> closed_nb;  // local closed neighbourhoods
};

std::vector<Component> components_for(const Graph& g, int limit) {
  if (limit > kHardBruteLimit) {
    throw OverLimit("brute force limit " + std::to_string(limit) + " exceeds " +
                    std::to_string(kHardBruteLimit));
  }
  std::vector<Component> out;
  for (const auto& comp : connected_components(g)) {
    if (static_cast<int>(comp.size()) > limit) {
      throw OverLimit("component of " + std::to_string(comp.size()) +
                      " vertices exceeds brute force limit " + std::to_string(limit));
    }
    Component c;
    c.verts = comp.members();
    std::vector<int> local(idx(g.n()), -1);
    for (std::size_t i = 0; i < c.verts.size(); ++i) local[idx(c.verts[i])] = static_cast<int>(i);
    for (std::size_t i = 0; i < c.verts.size(); ++i) {
      std::uint32_t m = 1u << i;
      for (Vertex w : g.neighbors(c.verts[i])) m |= 1u << local[idx(w)];
      c.closed_nb.push_back(m);
    }
    out.push_back(std::move(c));
  }
  return out;
}

bool indeque_mask(const Component& c, std::uint32_t mask) {
  for (std::uint32_t rest = mask; rest; rest &= rest - 1) {
    const int u = std::countr_zero(rest);
    const std::uint32_t clique = c.closed_nb[idx(u)] & mask;
    for (std::uint32_t r = clique & ~(1u << u); r; r &= r - 1) {
      if ((c.closed_nb[idx(std::countr_zero(r))] & mask) != clique) return false;
    }
  }
  return true;
}

// A precedes B in the lexicographic order of sorted vertex lists.
bool lex_less(std::uint32_t a, std::uint32_t b) {
  const std::uint32_t diff = a ^ b;
  return diff != 0 && (a & (diff & (~diff + 1))) != 0;
}

template <class Accept>
std::pair<int, std::uint32_t> best_mask(const Component& c, Accept accept) {
  const std::uint64_t total = std::uint64_t{1} << c.verts.size();
  int best = -1;
  std::uint32_t best_mask = 0;
  for (std::uint64_t m = 0; m < total; ++m) {
    const auto mask = static_cast<std::uint32_t>(m);
    const int size = std::popcount(mask);
    if (size < best) continue;
    if (size == best && !lex_less(mask, best_mask)) continue;
    if (!accept(mask)) continue;
    best = size;
    best_mask = mask;
  }
  return {best, best_mask};
}

}  // namespace

ExactResult brute_force_max(const Graph& g, int limit) {
  ExactResult out;
  std::vector<Vertex> witness;
  for (const auto& c : components_for(g, limit)) {
    auto [size, mask] = best_mask(c, [&](std::uint32_t m) { return indeque_mask(c, m); });
    out.size += size;
    for (std::size_t i = 0; i < c.verts.size(); ++i) {
      if (mask >> i & 1u) witness.push_back(c.verts[i]);
    }
  }
  out.witness = VertexSet(std::move(witness));
  return out;
}

int brute_force_alpha(const Graph& g, int limit) {
  int total = 0;
  for (const auto& c : components_for(g, limit)) {
    total += best_mask(c, [&](std::uint32_t m) {
               for (std::uint32_t r = m; r; r &= r - 1) {
                 const int u = std::countr_zero(r);
                 if ((c.closed_nb[idx(u)] & m) != (1u << u)) return false;
               }
               return true;
             }).first;
  }
  return total;
}

int brute_force_omega(const Graph& g, int limit) {
  int best = 0;
  for (const auto& c : components_for(g, limit)) {
    best = std::max(best, best_mask(c, [&](std::uint32_t m) {
                            for (std::uint32_t r = m; r; r &= r - 1) {
                              if ((c.closed_nb[idx(std::countr_zero(r))] & m) != m) return false;
                            }
                            return true;
                          }).first);
  }
  return best;
}

// ---------------------------------------------------------------------------
// Decomposition-tree program.
//
// A state describes the two terminals of a node: whether each is in the
// set, whether its clique already holds an internal vertex of the node
// (closed), and for two included terminals whether they are joined inside
// the node (same: adjacent here; pending: joined through an internal vertex
// and still waiting for the s-t edge).

namespace {

constexpr long long kNeg = std::numeric_limits<long long>::min() / 4;
constexpr int kStates = 48;

enum Status : std::int8_t { kOut = 0, kSingle = 1, kMulti = 2 };
enum Rel : int { kApart = 0, kSame = 1, kPending = 2 };

struct State {
  bool in_s = false;
  bool in_t = false;
  bool cs = false;
  bool ct = false;
  int rel = kApart;
};

int encode(const State& x) {
  return int{x.in_s} | int{x.in_t} << 1 | int{x.cs} << 2 | int{x.ct} << 3 | x.rel << 4;
}

State decode(int code) {
  return {(code & 1) != 0, (code & 2) != 0, (code & 4) != 0, (code & 8) != 0, code >> 4};
}

Status status_s(const State& x) {
  if (!x.in_s) return kOut;
  return (x.cs || x.rel == kSame) ? kMulti : kSingle;
}

Status status_t(const State& x) {
  if (!x.in_t) return kOut;
  return (x.ct || x.rel == kSame) ? kMulti : kSingle;
}

long long add(long long a, long long b) { return (a <= kNeg || b <= kNeg) ? kNeg : a + b; }

using Weights = std::array<long long, 3>;

struct Entry {
  long long value = kNeg;
  int a = -1;
  int b = -1;
  Status mid = kOut;
};

class Program {
 public:
  Program(const SPTree& tree, const std::vector<Weights>& w) : tree_(tree), w_(w) {
    table_.assign(tree.nodes.size(), {});
    has_st_.assign(tree.nodes.size(), false);
    std::vector<std::pair<int, bool>> stack{{tree.root, false}};
    while (!stack.empty()) {
      auto [id, expanded] = stack.back();
      stack.pop_back();
      const SPNode& node = tree.at(id);
      if (node.kind == SPKind::kEdge) {
        leaf(id);
      } else if (expanded) {
        node.kind == SPKind::kSeries ? series(id) : parallel(id);
      } else {
        stack.push_back({id, true});
        stack.push_back({node.left, false});
        stack.push_back({node.right, false});
      }
    }
  }

  /// Value of a root state including both terminal weights.
  [[nodiscard]] long long root_value(int code) const {
    const State x = decode(code);
    if (x.rel == kPending) return kNeg;
    const SPNode& r = tree_.top();
    return add(add(table_[idx(tree_.root)][idx(code)].value, w_[idx(r.s)][idx(status_s(x))]),
               w_[idx(r.t)][idx(status_t(x))]);
  }

  /// Statuses of every vertex under the given root state.
  void assign(int code, std::vector<Status>& status) const {
    const SPNode& r = tree_.top();
    const State x = decode(code);
    status[idx(r.s)] = status_s(x);
    status[idx(r.t)] = status_t(x);
    std::vector<std::pair<int, int>> stack{{tree_.root, code}};
    while (!stack.empty()) {
      auto [id, c] = stack.back();
      stack.pop_back();
      const SPNode& node = tree_.at(id);
      if (node.kind == SPKind::kEdge) continue;
      const Entry& e = table_[idx(id)][idx(c)];
      if (node.kind == SPKind::kSeries) status[idx(node.shared)] = e.mid;
      stack.push_back({node.left, e.a});
      stack.push_back({node.right, e.b});
    }
  }

 private:
  void relax(int id, const State& x, long long value, int a, int b, Status mid) {
    Entry& e = table_[idx(id)][idx(encode(x))];
    if (value > e.value) e = {value, a, b, mid};
  }

  void leaf(int id) {
    has_st_[idx(id)] = true;
    relax(id, {false, false, false, false, kApart}, 0, -1, -1, kOut);
    relax(id, {true, false, false, false, kApart}, 0, -1, -1, kOut);
    relax(id, {false, true, false, false, kApart}, 0, -1, -1, kOut);
    relax(id, {true, true, false, false, kSame}, 0, -1, -1, kOut);
  }

  void series(int id) {
    const SPNode& node = tree_.at(id);
    const auto& A = table_[idx(node.left)];
    const auto& B = table_[idx(node.right)];
    const Weights& wm = w_[idx(node.shared)];
    for (int ca = 0; ca < kStates; ++ca) {
      if (A[idx(ca)].value <= kNeg) continue;
      const State a = decode(ca);
      for (int cb = 0; cb < kStates; ++cb) {
        if (B[idx(cb)].value <= kNeg) continue;
        const State b = decode(cb);
        if (a.in_t != b.in_s) continue;
        const long long base = A[idx(ca)].value + B[idx(cb)].value;
        State r{a.in_s, b.in_t, a.cs, b.ct, kApart};
        if (!a.in_t) {
          relax(id, r, add(base, wm[kOut]), ca, cb, kOut);
          continue;
        }
        if (a.rel == kPending || b.rel == kPending) continue;
        const bool a_part = a.rel == kSame || a.ct;
        const bool b_part = b.rel == kSame || b.cs;
        if (a_part && b_part) {
          if (a.rel != kSame || a.cs || a.ct || b.rel != kSame || b.cs || b.ct) continue;
          relax(id, {true, true, true, true, kPending}, add(base, wm[kMulti]), ca, cb, kMulti);
        } else if (a_part) {
          r.cs = a.cs || a.rel == kSame;
          relax(id, r, add(base, wm[kMulti]), ca, cb, kMulti);
        } else if (b_part) {
          r.ct = b.ct || b.rel == kSame;
          relax(id, r, add(base, wm[kMulti]), ca, cb, kMulti);
        } else {
          relax(id, r, add(base, wm[kSingle]), ca, cb, kSingle);
        }
      }
    }
  }

  void parallel(int id) {
    const SPNode& node = tree_.at(id);
    const auto& A = table_[idx(node.left)];
    const auto& B = table_[idx(node.right)];
    const bool has = has_st_[idx(node.left)] || has_st_[idx(node.right)];
    has_st_[idx(id)] = has;
    for (int ca = 0; ca < kStates; ++ca) {
      if (A[idx(ca)].value <= kNeg) continue;
      const State a = decode(ca);
      for (int cb = 0; cb < kStates; ++cb) {
        if (B[idx(cb)].value <= kNeg) continue;
        const State b = decode(cb);
        if (a.in_s != b.in_s || a.in_t != b.in_t) continue;
        const long long value = A[idx(ca)].value + B[idx(cb)].value;
        State r{a.in_s, a.in_t, a.cs || b.cs, a.ct || b.ct, kApart};
        const bool joined = a.rel != kApart || b.rel != kApart;
        if (!(a.in_s && a.in_t) || !joined) {
          if ((a.cs && b.cs) || (a.ct && b.ct)) continue;
          relax(id, r, value, ca, cb, kOut);
          continue;
        }
        const bool a_adds = a.cs || a.ct;
        const bool b_adds = b.cs || b.ct;
        if (a_adds && b_adds) continue;
        if ((a_adds && a.rel == kApart) || (b_adds && b.rel == kApart)) continue;
        r.rel = has ? kSame : kPending;
        r.cs = r.ct = a_adds || b_adds;
        relax(id, r, value, ca, cb, kOut);
      }
    }
  }

  const SPTree& tree_;
  const std::vector<Weights>& w_;
  std::vector<std::array<Entry, kStates>> table_;
  std::vector<bool> has_st_;
};

const Weights kUnit{0, 1, 1};

}  // namespace

ExactResult sp_dp_max(const Graph& block, const SPTree& tree) {
  if (tree.root < 0) {
    if (block.m() == 0 && block.n() <= 1) {
      return {block.n(), VertexSet(std::vector<Vertex>(idx(block.n()), 0))};
    }
    throw ExactError("empty tree for a non-trivial block");
  }
  for (const auto& node : tree.nodes) {
    if (!block.valid_vertex(node.s) || !block.valid_vertex(node.t)) {
      throw ExactError("tree refers to a vertex outside the block");
    }
  }
  if (sp_tree_edges(tree) != block.edges() ||
      static_cast<int>(sp_tree_vertices(tree).size()) != block.n()) {
    throw ExactError("tree does not realize the block");
  }
  std::vector<Weights> w(idx(block.n()), kUnit);
  Program prog(tree, w);
  int best = -1;
  long long best_value = kNeg;
  for (int c = 0; c < kStates; ++c) {
    const long long v = prog.root_value(c);
    if (v > best_value) {
      best_value = v;
      best = c;
    }
  }
  std::vector<Status> status(idx(block.n()), kOut);
  prog.assign(best, status);
  std::vector<Vertex> members;
  for (Vertex v = 0; v < block.n(); ++v) {
    if (status[idx(v)] != kOut) members.push_back(v);
  }
  return {static_cast<int>(best_value), VertexSet(std::move(members))};
}

// ---------------------------------------------------------------------------
// Block-cut tree composition.

namespace {

class Composer {
 public:
  Composer(const Graph& g, const K4Report& report) : g_(g), report_(report) {}

  // Solves block b hanging from parent vertex p (-1 for a component root).
  int solve(int b, Vertex p) {
    auto job = std::make_unique<Job>();
    job->block = b;
    job->parent = p;
    const BlockSP& bs = report_.blocks[idx(b)];
    const Subgraph& sub = bs.sub;
    const int k = sub.graph.n();
    job->w.assign(idx(k), kUnit);
    job->children.assign(idx(k), {});
    job->best_child.assign(idx(k), -1);
    for (Vertex x = 0; x < k; ++x) {
      const Vertex u = sub.to_parent[idx(x)];
      if (u == p) {
        job->w[idx(x)] = {0, 0, 0};
        continue;
      }
      long long out = 0;
      long long single = 1;
      long long gain = 0;
      for (int c : report_.decomposition.vertex_blocks[idx(u)]) {
        if (c == b) continue;
        const int child = solve(c, u);
        job->children[idx(x)].push_back(child);
        const auto& gc = jobs_[idx(child)]->g;
        out = add(out, gc[kOut]);
        single = add(single, gc[kSingle]);
        const long long d = gc[kMulti] <= kNeg ? kNeg : gc[kMulti] - gc[kSingle];
        if (d > gain) {
          gain = d;
          job->best_child[idx(x)] = child;
        }
      }
      job->w[idx(x)] = {out, add(single, gain), single};
    }

    if (k == 1) {
      job->g = {job->w[0][kOut], job->w[0][kSingle], kNeg};
    } else {
      const Vertex s = p >= 0 ? sub.to_child[idx(p)] : 0;
      const Vertex t = sub.graph.neighbors(s).front();
      auto rec = recognize_sp(sub.graph, s, t);
      if (!rec.ok()) throw NotK4MinorFree();
      job->tree = std::move(*rec.tree);
      job->program = std::make_unique<Program>(job->tree, job->w);
      job->g = {kNeg, kNeg, kNeg};
      job->pick = {-1, -1, -1};
      for (int c = 0; c < kStates; ++c) {
        const long long v = job->program->root_value(c);
        const Status st = status_s(decode(c));
        if (v > job->g[idx(st)]) {
          job->g[idx(st)] = v;
          job->pick[idx(st)] = c;
        }
      }
    }
    jobs_.push_back(std::move(job));
    return static_cast<int>(jobs_.size()) - 1;
  }

  long long value(int j) const {
    const auto& g = jobs_[idx(j)]->g;
    return std::max({g[0], g[1], g[2]});
  }

  void collect(int j, Status parent_status, bool root, std::vector<Vertex>& out) const {
    const Job& job = *jobs_[idx(j)];
    const Subgraph& sub = report_.blocks[idx(job.block)].sub;
    const int k = sub.graph.n();
    std::vector<Status> status(idx(k), kOut);
    if (k == 1) {
      status[0] = root ? (job.g[kSingle] >= job.g[kOut] ? kSingle : kOut) : parent_status;
    } else {
      int code = job.pick[idx(parent_status)];
      if (root) {
        for (int s = 0; s < 3; ++s) {
          if (job.g[idx(s)] > job.g[idx(parent_status)]) parent_status = static_cast<Status>(s);
        }
        code = job.pick[idx(parent_status)];
      }
      job.program->assign(code, status);
    }
    for (Vertex x = 0; x < k; ++x) {
      const Vertex u = sub.to_parent[idx(x)];
      if (u == job.parent) continue;
      if (status[idx(x)] != kOut) out.push_back(u);
      for (int c : job.children[idx(x)]) {
        Status cs = kOut;
        if (status[idx(x)] == kMulti) cs = kSingle;
        if (status[idx(x)] == kSingle) cs = c == job.best_child[idx(x)] ? kMulti : kSingle;
        collect(c, cs, false, out);
      }
    }
  }

 private:
  struct Job {
    int block = -1;
    Vertex parent = -1;
    std::vector<Weights> w;
    std::vector<std::vector<int>> children;
    std::vector<int> best_child;
    SPTree tree;
    std::unique_ptr<Program> program;
    Weights g{};
    std::array<int, 3> pick{};
  };

  const Graph& g_;
  const K4Report& report_;
  std::vector<std::unique_ptr<Job>> jobs_;
};

}  // namespace

ExactResult k4mf_exact(const Graph& g) {
  K4Report report = analyze_k4_minor_free(g);
  if (!report.k4_minor_free) throw NotK4MinorFree();
  Composer composer(g, report);
  std::vector<char> covered(idx(g.n()), 0);
  std::vector<Vertex> members;
  long long total = 0;
  for (Vertex r = 0; r < g.n(); ++r) {
    if (covered[idx(r)]) continue;
    const int root = composer.solve(report.decomposition.vertex_blocks[idx(r)].front(), -1);
    total += composer.value(root);
    std::vector<Vertex> part;
    composer.collect(root, kOut, true, part);
    members.insert(members.end(), part.begin(), part.end());
    std::vector<Vertex> stack{r};
    covered[idx(r)] = 1;
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      for (Vertex w : g.neighbors(v)) {
        if (!covered[idx(w)]) {
          covered[idx(w)] = 1;
          stack.push_back(w);
        }
      }
    }
  }
  return {static_cast<int>(total), VertexSet(std::move(members))};
}

}  // namespace indeque
