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

#include "indeque/gen.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <random>
#include <set>

#include "json.hpp"

namespace indeque::gen {

namespace {

using Rng = std::mt19937_64;

std::uint64_t below(Rng& rng, std::uint64_t bound) { return rng() % bound; }

bool coin(Rng& rng, double p) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53 < p;
}

constexpr std::array<std::pair<Family, std::string_view>, 10> kNames{{
    {Family::kC4Union, "c4_union"},
    {Family::kTriangleString, "triangle_string"},
    {Family::kTriangleRing, "triangle_ring"},
    {Family::kGammaRing, "gamma_ring"},
    {Family::kKite, "kite"},
    {Family::kBlownCycle, "blown_cycle"},
    {Family::kRandomSp, "random_sp"},
    {Family::kRandomK4mf, "random_k4mf"},
    {Family::kRandomSubcubic, "random_subcubic"},
    {Family::kRandomTree, "random_tree"},
}};

// Edge list that silently drops repeats; used where two constructions share
// the s-t edge.
struct EdgeBag {
  std::set<Edge> edges;
  void add(Vertex u, Vertex w) { edges.emplace(std::min(u, w), std::max(u, w)); }
  [[nodiscard]] std::vector<Edge> list() const { return {edges.begin(), edges.end()}; }
};

// Appends a string of k triangles between s and t. Baseline vertices
// x_1..x_{k-1} and the apexes are allocated from `next`.
void add_string(EdgeBag& bag, Vertex& next, Vertex s, Vertex t, int k, Rng& rng) {
  std::vector<Vertex> x(static_cast<std::size_t>(k) + 1);
  x.front() = s;
  x.back() = t;
  for (int i = 1; i < k; ++i) x[static_cast<std::size_t>(i)] = next++;
  for (int i = 1; i <= k; ++i) {
    Vertex a = next++;
    Vertex l = x[static_cast<std::size_t>(i - 1)];
    Vertex r = x[static_cast<std::size_t>(i)];
    bag.add(l, r);
    bag.add(l, a);
    bag.add(r, a);
  }
  // Grow the built interval one triangle at a time, closing it with a K2
  // between its current ends at random.
  int lo = static_cast<int>(below(rng, static_cast<std::uint64_t>(k)));
  int hi = lo + 1;
  while (hi - lo < k) {
    bool left = lo > 0 && (hi == k || coin(rng, 0.5));
    if (left) {
      --lo;
    } else {
      ++hi;
    }
    if (coin(rng, 0.5)) bag.add(x[static_cast<std::size_t>(lo)], x[static_cast<std::size_t>(hi)]);
  }
}

void require(bool ok, const std::string& what) {
  if (!ok) throw GenError(what);
}

Graph random_sp_with(int n, double p, Rng& rng) {
  std::vector<Edge> edges{{0, 1}};
  for (Vertex x = 2; x < n; ++x) {
    const auto i = static_cast<std::size_t>(below(rng, edges.size()));
    auto [u, w] = edges[i];
    if (coin(rng, p)) {
      edges[i] = {u, x};
      edges.emplace_back(x, w);
    } else {
      edges.emplace_back(u, x);
      edges.emplace_back(x, w);
    }
  }
  return Graph(n, edges);
}

Graph relabel(const Graph& g, const std::vector<Vertex>& perm) {
  std::vector<Edge> edges;
  for (auto [u, w] : g.edges()) {
    edges.emplace_back(perm[static_cast<std::size_t>(u)], perm[static_cast<std::size_t>(w)]);
  }
  return Graph(g.n(), edges);
}

std::vector<Vertex> shuffled_ids(int n, Rng& rng) {
  std::vector<Vertex> perm(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) perm[static_cast<std::size_t>(i)] = i;
  for (int i = n - 1; i > 0; --i) {
    std::swap(perm[static_cast<std::size_t>(i)],
              perm[static_cast<std::size_t>(below(rng, static_cast<std::uint64_t>(i) + 1))]);
  }
  return perm;
}

}  // namespace

std::string_view family_name(Family f) {
  for (auto [fam, name] : kNames) {
    if (fam == f) return name;
  }
  return "unknown";
}

std::optional<Family> parse_family(std::string_view name) {
  for (auto [fam, n] : kNames) {
    if (n == name) return fam;
  }
  return std::nullopt;
}

const std::vector<Family>& all_families() {
  static const std::vector<Family> families = [] {
    std::vector<Family> out;
    for (auto [fam, name] : kNames) out.push_back(fam);
    return out;
  }();
  return families;
}

std::map<std::string, double> parse_params(std::string_view text) {
  std::map<std::string, double> out;
  while (!text.empty()) {
    auto comma = text.find(',');
    std::string_view item = text.substr(0, comma);
    text = comma == std::string_view::npos ? std::string_view{} : text.substr(comma + 1);
    while (!item.empty() && item.front() == ' ') item.remove_prefix(1);
    while (!item.empty() && item.back() == ' ') item.remove_suffix(1);
    if (item.empty()) continue;
    auto eq = item.find('=');
    require(eq != std::string_view::npos && eq > 0, "parameter `" + std::string(item) +
                                                        "` is not key=value");
    std::string value(item.substr(eq + 1));
    std::size_t used = 0;
    double parsed = 0;
    try {
      parsed = std::stod(value, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    require(used == value.size() && !value.empty(),
            "parameter `" + std::string(item) + "` has a non-numeric value");
    out[std::string(item.substr(0, eq))] = parsed;
  }
  return out;
}

// ---------------------------------------------------------------------------

Graph c4_union(int k) {
  require(k >= 1, "c4_union needs k >= 1");
  std::vector<Edge> edges;
  for (Vertex i = 0; i < k; ++i) {
    Vertex b = 4 * i;
    edges.insert(edges.end(), {{b, b + 1}, {b + 1, b + 2}, {b + 2, b + 3}, {b, b + 3}});
  }
  return Graph(4 * k, edges);
}

Generated triangle_string(int k, std::uint64_t seed) {
  require(k >= 1, "triangle_string needs k >= 1");
  Rng rng(seed);
  EdgeBag bag;
  Vertex next = 2;
  add_string(bag, next, 0, 1, k, rng);
  return {Graph(next, bag.list()), std::nullopt, "", {{"s", 0}, {"t", 1}}};
}

Generated triangle_ring(int a, int b, std::uint64_t seed) {
  require(a >= 1 && b >= 1, "triangle_ring needs both string lengths >= 1");
  Rng rng(seed);
  EdgeBag bag;
  Vertex next = 2;
  add_string(bag, next, 0, 1, a, rng);
  add_string(bag, next, 0, 1, b, rng);
  return {Graph(next, bag.list()), std::nullopt, "", {{"s", 0}, {"t", 1}}};
}

Generated gamma_fixture(int i, bool chord) {
  require(i >= 1 && i <= 6, "gamma index must be in 1..6");
  const bool has_chord = chord && (i == 3 || i == 5);
  // Role ids: s = 0, t = 1, then v, w, u as present.
  Generated out;
  std::vector<Edge> e;
  switch (i) {
    case 1:  // v = s
      e = {{0, 1}, {0, 2}, {1, 2}};
      out.labels = {{"s", 0}, {"t", 1}, {"v", 0}, {"w", 2}};
      break;
    case 2:
      e = {{0, 1}, {0, 2}, {1, 2}};
      out.labels = {{"s", 0}, {"t", 1}, {"v", 2}};
      break;
    case 3:  // s-w-t-v-s
      e = {{0, 3}, {3, 1}, {1, 2}, {2, 0}};
      out.labels = {{"s", 0}, {"t", 1}, {"v", 2}, {"w", 3}};
      break;
    case 4:  // s-t-u-v-s
      e = {{0, 1}, {1, 3}, {3, 2}, {2, 0}};
      out.labels = {{"s", 0}, {"t", 1}, {"v", 2}, {"u", 3}};
      break;
    case 5:  // s-w-t-u-v-s
      e = {{0, 3}, {3, 1}, {1, 4}, {4, 2}, {2, 0}};
      out.labels = {{"s", 0}, {"t", 1}, {"v", 2}, {"w", 3}, {"u", 4}};
      break;
    default:  // s-t plus s-w-v-u-t
      e = {{0, 1}, {0, 3}, {3, 2}, {2, 4}, {4, 1}};
      out.labels = {{"s", 0}, {"t", 1}, {"v", 2}, {"w", 3}, {"u", 4}};
      break;
  }
  if (has_chord) e.emplace_back(0, 1);
  out.graph = Graph(static_cast<int>(out.labels.size()) - (i == 1 ? 1 : 0), e);
  return out;
}

Generated gamma_ring(int i, bool chord, int len, std::uint64_t seed) {
  require(i >= 1 && i <= 6, "gamma_ring needs i in 1..6");
  require(!chord || i == 3 || i == 5, "only gamma 3 and 5 carry an optional chord");
  require(len >= 1, "gamma_ring needs len >= 1");
  Rng rng(seed);
  Generated q = gamma_fixture(i, chord);
  EdgeBag bag;
  for (auto [u, w] : q.graph.edges()) bag.add(u, w);
  Vertex next = q.graph.n();
  add_string(bag, next, q.labels.at("s"), q.labels.at("t"), len, rng);
  return {Graph(next, bag.list()), std::nullopt, "", q.labels};
}

Generated kite(int k, int path_vertices, std::uint64_t seed) {
  require(k >= 1, "kite needs k >= 1");
  require(path_vertices == 2 || path_vertices == 3, "kite path has 2 or 3 vertices");
  Rng rng(seed);
  EdgeBag bag;
  // s = 0, optional middle = 1, joint x, far string terminal t.
  const Vertex x = path_vertices - 1;
  const Vertex t = x + 1;
  for (Vertex i = 0; i < x; ++i) bag.add(i, i + 1);
  Vertex next = t + 1;
  add_string(bag, next, x, t, k, rng);
  return {Graph(next, bag.list()), std::nullopt, "", {{"s", 0}, {"x", x}, {"t", t}}};
}

Graph blown_cycle(int k) {
  require(k >= 2, "blown_cycle needs k >= 2");
  std::vector<Edge> edges;
  for (Vertex i = 0; i < k; ++i) {
    Vertex a = 4 * i;
    edges.insert(edges.end(), {{a, a + 1}, {a + 1, a + 2}, {a + 2, a + 3}, {a, a + 3}});
    edges.emplace_back(a + 2, 4 * ((i + 1) % k));
  }
  return Graph(4 * k, edges);
}

Graph random_sp(int n, double p, std::uint64_t seed) {
  require(n >= 2, "random_sp needs n >= 2");
  require(p >= 0 && p <= 1, "random_sp needs p in [0,1]");
  Rng rng(seed);
  return random_sp_with(n, p, rng);
}

Graph random_k4mf(int n, std::uint64_t seed) {
  require(n >= 0, "random_k4mf needs n >= 0");
  Rng rng(seed);
  std::vector<Edge> edges;
  Vertex used = 0;
  while (used < n) {
    if (used == 0 || below(rng, 8) == 0) {
      ++used;  // a fresh component root
      continue;
    }
    const Vertex anchor = static_cast<Vertex>(below(rng, static_cast<std::uint64_t>(used)));
    const int room = std::min(n - used, 9);
    const int fresh = 1 + static_cast<int>(below(rng, static_cast<std::uint64_t>(room)));
    const double p = static_cast<double>(below(rng, 5)) / 4.0;
    Graph block = random_sp_with(fresh + 1, p, rng);
    auto map = [&](Vertex b) { return b == 0 ? anchor : used + b - 1; };
    for (auto [u, w] : block.edges()) edges.emplace_back(map(u), map(w));
    used += fresh;
  }
  return relabel(Graph(n, edges), shuffled_ids(n, rng));
}

Graph random_subcubic(int n, std::uint64_t seed) {
  require(n >= 0, "random_subcubic needs n >= 0");
  Rng rng(seed);
  std::vector<int> degree(static_cast<std::size_t>(n), 0);
  std::set<Edge> edges;
  if (n >= 2) {
    for (int attempt = 0; attempt < 2 * n; ++attempt) {
      auto u = static_cast<Vertex>(below(rng, static_cast<std::uint64_t>(n)));
      auto w = static_cast<Vertex>(below(rng, static_cast<std::uint64_t>(n)));
      if (u == w) continue;
      Edge e{std::min(u, w), std::max(u, w)};
      if (edges.count(e) || degree[static_cast<std::size_t>(u)] >= 3 ||
          degree[static_cast<std::size_t>(w)] >= 3) {
        continue;
      }
      edges.insert(e);
      ++degree[static_cast<std::size_t>(u)];
      ++degree[static_cast<std::size_t>(w)];
    }
  }
  return Graph(n, {edges.begin(), edges.end()});
}

Graph random_tree(int n, std::uint64_t seed) {
  require(n >= 1, "random_tree needs n >= 1");
  Rng rng(seed);
  std::vector<Edge> edges;
  for (Vertex i = 1; i < n; ++i) {
    edges.emplace_back(static_cast<Vertex>(below(rng, static_cast<std::uint64_t>(i))), i);
  }
  return Graph(n, edges);
}

Graph complete(int n) {
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex w = u + 1; w < n; ++w) edges.emplace_back(u, w);
  }
  return Graph(n, edges);
}

Graph cycle(int n) {
  require(n >= 3, "cycle needs n >= 3");
  std::vector<Edge> edges;
  for (Vertex i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
  return Graph(n, edges);
}

Graph path(int n) {
  require(n >= 1, "path needs n >= 1");
  std::vector<Edge> edges;
  for (Vertex i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  return Graph(n, edges);
}

Graph hypercube_q3() {
  std::vector<Edge> edges;
  for (Vertex u = 0; u < 8; ++u) {
    for (int bit = 0; bit < 3; ++bit) {
      Vertex w = u ^ (1 << bit);
      if (u < w) edges.emplace_back(u, w);
    }
  }
  return Graph(8, edges);
}

Graph theta() { return Graph(5, {{0, 2}, {2, 1}, {0, 3}, {3, 1}, {0, 4}, {4, 1}}); }

// ---------------------------------------------------------------------------

namespace {

Edge realize_node(const SPTree& tree, int id, std::vector<Edge>& out, int depth) {
  if (id < 0 || id >= static_cast<int>(tree.nodes.size()) ||
      depth > static_cast<int>(tree.nodes.size())) {
    throw SPError("malformed tree: bad child index");
  }
  const SPNode& node = tree.at(id);
  switch (node.kind) {
    case SPKind::kEdge:
      if (node.s < 0 || node.t < 0 || node.s == node.t) throw SPError("malformed edge leaf");
      out.emplace_back(std::min(node.s, node.t), std::max(node.s, node.t));
      break;
    case SPKind::kSeries: {
      Edge l = realize_node(tree, node.left, out, depth + 1);
      Edge r = realize_node(tree, node.right, out, depth + 1);
      if (l.first != node.s || l.second != node.shared || r.first != node.shared ||
          r.second != node.t) {
        throw SPError("malformed series node");
      }
      break;
    }
    case SPKind::kParallel: {
      Edge l = realize_node(tree, node.left, out, depth + 1);
      Edge r = realize_node(tree, node.right, out, depth + 1);
      if (l != Edge{node.s, node.t} || r != Edge{node.s, node.t}) {
        throw SPError("malformed parallel node");
      }
      break;
    }
  }
  return {node.s, node.t};
}

}  // namespace

Graph realize_sp_tree(const SPTree& tree) {
  std::vector<Edge> edges;
  if (tree.root < 0) return Graph();
  realize_node(tree, tree.root, edges, 0);
  Vertex n = 0;
  for (auto [u, w] : edges) n = std::max(n, w + 1);
  try {
    return Graph(n, edges);
  } catch (const GraphError& e) {
    throw SPError(std::string("malformed tree: ") + e.what());
  }
}

// ---------------------------------------------------------------------------

namespace {

int int_param(const FamilySpec& spec, const std::string& key, int fallback) {
  auto it = spec.params.find(key);
  if (it == spec.params.end()) return fallback;
  require(std::floor(it->second) == it->second && std::abs(it->second) < 1e9,
          "parameter " + key + " must be an integer");
  return static_cast<int>(it->second);
}

double real_param(const FamilySpec& spec, const std::string& key, double fallback) {
  auto it = spec.params.find(key);
  return it == spec.params.end() ? fallback : it->second;
}

}  // namespace

Generated generate(const FamilySpec& spec) {
  const std::uint64_t seed = spec.seed;
  switch (spec.family) {
    case Family::kC4Union: {
      int k = int_param(spec, "k", 1);
      return {c4_union(k), 2 * k, "published", {}};
    }
    case Family::kTriangleString:
      return triangle_string(int_param(spec, "k", 2), seed);
    case Family::kTriangleRing:
      return triangle_ring(int_param(spec, "a", 1), int_param(spec, "b", 2), seed);
    case Family::kGammaRing:
      return gamma_ring(int_param(spec, "i", 2), int_param(spec, "chord", 0) != 0,
                        int_param(spec, "len", 2), seed);
    case Family::kKite:
      return kite(int_param(spec, "k", 2), int_param(spec, "path", 2), seed);
    case Family::kBlownCycle: {
      int k = int_param(spec, "k", 2);
      return {blown_cycle(k), 2 * k, "published", {}};
    }
    case Family::kRandomSp:
      return {random_sp(int_param(spec, "n", 8), real_param(spec, "p", 0.5), seed),
              std::nullopt, "", {}};
    case Family::kRandomK4mf:
      return {random_k4mf(int_param(spec, "n", 12), seed), std::nullopt, "", {}};
    case Family::kRandomSubcubic:
      return {random_subcubic(int_param(spec, "n", 12), seed), std::nullopt, "", {}};
    case Family::kRandomTree:
      return {random_tree(int_param(spec, "n", 10), seed), std::nullopt, "", {}};
  }
  throw GenError("unknown family");
}

std::string sidecar_json(const FamilySpec& spec, const Generated& g) {
  nlohmann::ordered_json params = nlohmann::ordered_json::object();
  for (const auto& [key, value] : spec.params) {
    if (std::floor(value) == value && std::abs(value) < 1e15) {
      params[key] = static_cast<long long>(value);
    } else {
      params[key] = value;
    }
  }
  nlohmann::ordered_json out;
  out["family"] = family_name(spec.family);
  out["params"] = params;
  out["seed"] = spec.seed;
  out["n"] = g.graph.n();
  out["m"] = g.graph.m();
  out["known_indeque"] = g.known_indeque ? nlohmann::ordered_json(*g.known_indeque) : nullptr;
  out["claimed_bound"] = (g.graph.n() + 1) / 2;
  out["source"] = g.source.empty() ? nlohmann::ordered_json(nullptr) : nlohmann::ordered_json(g.source);
  nlohmann::ordered_json labels = nlohmann::ordered_json::object();
  for (const auto& [name, v] : g.labels) labels[name] = v;
  out["labels"] = labels;
  return out.dump() + "\n";
}

}  // namespace indeque::gen
