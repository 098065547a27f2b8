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

#include "indeque/extractor.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <optional>

#include "json.hpp"

#include "indeque/decompose.hpp"
#include "indeque/exact.hpp"
#include "indeque/pieces.hpp"

namespace indeque {

namespace {

std::size_t idx(Vertex v) { return static_cast<std::size_t>(v); }

std::vector<Vertex> identity(int n) {
  std::vector<Vertex> out(idx(n));
  std::iota(out.begin(), out.end(), 0);
  return out;
}

VertexSet map_set(const VertexSet& s, const std::vector<Vertex>& to) {
  std::vector<Vertex> out;
  out.reserve(s.size());
  for (Vertex v : s) out.push_back(to[idx(v)]);
  return VertexSet(std::move(out));
}

Rule rule_for(Pattern p) {
  switch (p) {
    case Pattern::kAdjacentDeg2: return Rule::kR3;
    case Pattern::kRing:
    case Pattern::kStringPath: return Rule::kR4;
    case Pattern::kKite: return Rule::kR5;
    case Pattern::kWholeGamma: return Rule::kR8;
    case Pattern::kGammaRing: return Rule::kR6;
    case Pattern::kPendantString: return Rule::kR7;
    case Pattern::kParallelPaths: return Rule::kR9;
  }
  return Rule::kR3;
}

struct LeafBlock {
  VertexSet block;
  std::optional<Vertex> v;
  BlockAnalysis analysis;
};

class Finder {
 public:
  Finder(const Graph& g, int* skipped) : g_(g), skipped_(skipped) {}

  std::optional<ContraPair> run() {
    if (auto p = preliminary()) return p;
    collect_leaves();
    const Rule order[] = {Rule::kR4, Rule::kR5, Rule::kR8, Rule::kR6,
                          Rule::kR7, Rule::kR9, Rule::kR3};
    for (Rule r : order) {
      for (const auto& leaf : leaves_) {
        if (auto p = try_rule(r, leaf)) return p;
      }
    }
    return std::nullopt;
  }

  /// Vertices of the component holding the first leaf block.
  VertexSet first_leaf_component() {
    if (leaves_.empty()) collect_leaves();
    const Vertex r = leaves_.empty() ? 0 : leaves_.front().block[0];
    for (const auto& c : connected_components(g_)) {
      if (c.contains(r)) return c;
    }
    return {};
  }

 private:
  bool accept(const ContraPair& p) {
    if (check_contra_pair(g_, p) == ContraViolation::kNone) return true;
    if (skipped_) ++*skipped_;
    return false;
  }

  std::optional<ContraPair> preliminary() {
    for (Vertex u = 0; u < g_.n(); ++u) {
      if (g_.degree(u) == 0) return ContraPair{VertexSet{u}, VertexSet{u}, Rule::kR1, 0};
    }
    for (Vertex u = 0; u < g_.n(); ++u) {
      if (g_.degree(u) == 1) {
        ContraPair p{VertexSet{u, g_.neighbors(u)[0]}, VertexSet{u}, Rule::kR2, 0};
        if (accept(p)) return p;
      }
    }
    for (Vertex a = 0; a < g_.n(); ++a) {
      if (g_.degree(a) != 2) continue;
      for (Vertex b : g_.neighbors(a)) {
        if (g_.degree(b) != 2) continue;
        std::vector<Vertex> x{a, b};
        for (Vertex w : g_.neighbors(a)) x.push_back(w);
        for (Vertex w : g_.neighbors(b)) x.push_back(w);
        std::sort(x.begin(), x.end());
        x.erase(std::unique(x.begin(), x.end()), x.end());
        ContraPair p{VertexSet(x), VertexSet{a, b}, Rule::kR3, 0};
        if (accept(p)) return p;
      }
    }
    return std::nullopt;
  }

  void collect_leaves() {
    leaves_.clear();
    const BlockDecomposition bd = block_decompose(g_);
    for (int b : bd.leaf_blocks) {
      const VertexSet& block = bd.blocks[idx(b)];
      if (block.size() < 3) continue;
      LeafBlock leaf;
      leaf.block = block;
      const auto& cuts = bd.block_cuts[idx(b)];
      if (!cuts.empty()) leaf.v = cuts.front();
      leaf.analysis = analyze_block(g_, block, leaf.v);
      leaves_.push_back(std::move(leaf));
    }
    std::sort(leaves_.begin(), leaves_.end(),
              [](const LeafBlock& a, const LeafBlock& b) { return a.block[0] < b.block[0]; });
  }

  std::optional<ContraPair> from(const Candidate& c) {
    ContraPair p{c.x, c.s, rule_for(c.pattern), c.gamma};
    if (accept(p)) return p;
    return std::nullopt;
  }

  std::optional<ContraPair> try_rule(Rule r, const LeafBlock& leaf) {
    if (r == Rule::kR8) {
      if (!leaf.v) return std::nullopt;
      if (auto c = find_whole_gamma(g_, leaf.block, *leaf.v)) return from(*c);
      return std::nullopt;
    }
    if (r == Rule::kR6) {
      if (!leaf.v) return std::nullopt;
      if (auto c = find_gamma_ring(g_, leaf.block, *leaf.v)) return from(*c);
      return std::nullopt;
    }
    for (const auto& c : leaf.analysis.candidates) {
      if (rule_for(c.pattern) != r) continue;
      if (auto p = from(c)) return p;
    }
    return std::nullopt;
  }

  const Graph& g_;
  int* skipped_;
  std::vector<LeafBlock> leaves_;
};

}  // namespace

std::string_view rule_name(Rule r) {
  switch (r) {
    case Rule::kR1: return "R1";
    case Rule::kR2: return "R2";
    case Rule::kR3: return "R3";
    case Rule::kR4: return "R4";
    case Rule::kR5: return "R5";
    case Rule::kR6: return "R6";
    case Rule::kR7: return "R7";
    case Rule::kR8: return "R8";
    case Rule::kR9: return "R9";
    case Rule::kFallback: return "F";
  }
  return "?";
}

std::string rule_tag(const ContraPair& p) {
  switch (p.rule) {
    case Rule::kR1: return "R1_isolated";
    case Rule::kR2: return "R2_degree1";
    case Rule::kR3: return "R3_adjacent_deg2";
    case Rule::kR4: return "R4_ring";
    case Rule::kR5: return "R5_kite";
    case Rule::kR6: return "R6_gamma_ring(" + std::to_string(p.gamma) + ")";
    case Rule::kR7: return "R7_pendant_string";
    case Rule::kR8: return "R8_whole_gamma";
    case Rule::kR9: return "R9_parallel_paths";
    case Rule::kFallback: return "fallback_exact";
  }
  return "?";
}

std::string_view to_string(ContraViolation v) {
  switch (v) {
    case ContraViolation::kNone: return "none";
    case ContraViolation::kEmpty: return "empty";
    case ContraViolation::kNotSubset: return "not_subset";
    case ContraViolation::kNotIndeque: return "not_indeque";
    case ContraViolation::kTooSmall: return "too_small";
    case ContraViolation::kLeaks: return "leaks";
  }
  return "?";
}

ContraViolation check_contra_pair(const Graph& g, const ContraPair& p) {
  if (p.x.empty()) return ContraViolation::kEmpty;
  for (Vertex v : p.x) {
    if (!g.valid_vertex(v)) return ContraViolation::kNotSubset;
  }
  for (Vertex v : p.s) {
    if (!p.x.contains(v)) return ContraViolation::kNotSubset;
  }
  if (2 * p.s.size() < p.x.size()) return ContraViolation::kTooSmall;
  for (Vertex v : p.s) {
    for (Vertex w : g.neighbors(v)) {
      if (!p.x.contains(w)) return ContraViolation::kLeaks;
    }
  }
  if (!is_indeque(g, p.s)) return ContraViolation::kNotIndeque;
  return ContraViolation::kNone;
}

NoRuleMatched::NoRuleMatched(Graph residual, std::vector<Vertex> to_original)
    : std::runtime_error("no_rule_matched"),
      residual_(std::move(residual)),
      to_original_(std::move(to_original)) {}

ContraPair find_contra_pair(const Graph& g, int* skipped) {
  if (g.n() == 0) throw std::invalid_argument("find_contra_pair on the empty graph");
  Finder finder(g, skipped);
  if (auto p = finder.run()) return *p;
  throw NoRuleMatched(g, identity(g.n()));
}

ExtractionTrace extract_half(const Graph& g, const ExtractOptions& options) {
  if (!is_k4_minor_free(g)) throw NotK4MinorFree();
  ExtractionTrace trace;
  trace.n = g.n();
  Graph cur = g;
  std::vector<Vertex> to_orig = identity(g.n());
  std::vector<Vertex> banked;
  while (cur.n() > 0) {
    Finder finder(cur, &trace.skipped);
    std::optional<ContraPair> p = finder.run();
    if (!p) {
      if (!options.fallback_exact) throw NoRuleMatched(cur, to_orig);
      const VertexSet comp = finder.first_leaf_component();
      const Subgraph sub = induced_subgraph(cur, comp);
      const ExactResult best = k4mf_exact(sub.graph);
      p = ContraPair{comp, map_set(best.witness, sub.to_parent), Rule::kFallback, 0};
    }
    const ContraViolation why = check_contra_pair(cur, *p);
    if (why != ContraViolation::kNone) {
      throw ExtractionDefect(rule_tag(*p) + " step failed its certificate: " +
                             std::string(to_string(why)));
    }
    const Subgraph rest = remove_vertices(cur, p->x);
    p->x = map_set(p->x, to_orig);
    p->s = map_set(p->s, to_orig);
    banked.insert(banked.end(), p->s.begin(), p->s.end());
    trace.steps.push_back(std::move(*p));
    std::vector<Vertex> next;
    next.reserve(rest.to_parent.size());
    for (Vertex v : rest.to_parent) next.push_back(to_orig[idx(v)]);
    to_orig = std::move(next);
    cur = rest.graph;
  }
  trace.set = VertexSet(std::move(banked));
  IndequeVerdict verdict = verify_indeque(g, trace.set);
  if (!verdict.accepted()) {
    throw ExtractionDefect("extracted set is not indeque on the input graph");
  }
  trace.certificate = std::move(*verdict.certificate);
  trace.bound_ok = 2 * static_cast<int>(trace.set.size()) >= trace.n;
  return trace;
}

std::string audit_trace(const Graph& g, const ExtractionTrace& trace) {
  Graph cur = g;
  std::vector<Vertex> to_cur = identity(g.n());  // original -> current, or -1
  std::vector<Vertex> to_orig = identity(g.n());
  std::vector<Vertex> banked;
  for (std::size_t i = 0; i < trace.steps.size(); ++i) {
    const ContraPair& step = trace.steps[i];
    const std::string where = "step " + std::to_string(i) + ": ";
    ContraPair local{{}, {}, step.rule, step.gamma};
    std::vector<Vertex> xs;
    std::vector<Vertex> ss;
    for (Vertex v : step.x) {
      if (!g.valid_vertex(v) || to_cur[idx(v)] < 0) return where + "X reuses a deleted vertex";
      xs.push_back(to_cur[idx(v)]);
    }
    for (Vertex v : step.s) {
      if (!g.valid_vertex(v) || to_cur[idx(v)] < 0) return where + "S outside the residual";
      ss.push_back(to_cur[idx(v)]);
    }
    local.x = VertexSet(std::move(xs));
    local.s = VertexSet(std::move(ss));
    const ContraViolation why = check_contra_pair(cur, local);
    if (why != ContraViolation::kNone) return where + std::string(to_string(why));
    banked.insert(banked.end(), step.s.begin(), step.s.end());
    const Subgraph rest = remove_vertices(cur, local.x);
    std::vector<Vertex> next_orig;
    std::fill(to_cur.begin(), to_cur.end(), -1);
    for (std::size_t j = 0; j < rest.to_parent.size(); ++j) {
      const Vertex o = to_orig[idx(rest.to_parent[j])];
      to_cur[idx(o)] = static_cast<Vertex>(j);
      next_orig.push_back(o);
    }
    to_orig = std::move(next_orig);
    cur = rest.graph;
  }
  if (cur.n() != 0) return "the X sets do not cover every vertex";
  if (VertexSet(std::move(banked)) != trace.set) return "the S sets do not form the final set";
  if (!is_indeque(g, trace.set)) return "final set is not indeque";
  if (trace.bound_ok != (2 * static_cast<int>(trace.set.size()) >= g.n())) {
    return "bound flag disagrees with the set size";
  }
  return {};
}

std::string trace_json(const ExtractionTrace& trace) {
  using Json = nlohmann::ordered_json;
  Json steps = Json::array();
  for (const auto& p : trace.steps) {
    steps.push_back(Json{{"rule", rule_name(p.rule)},
                         {"tag", rule_tag(p)},
                         {"X", p.x.members()},
                         {"S", p.s.members()}});
  }
  Json out{{"steps", std::move(steps)},
           {"set", trace.set.members()},
           {"n", trace.n},
           {"bound_ok", trace.bound_ok},
           {"skipped", trace.skipped}};
  return out.dump() + "\n";
}

}  // namespace indeque
