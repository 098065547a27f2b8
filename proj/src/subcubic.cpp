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

#include "indeque/subcubic.hpp"

#include <random>
#include <string>
#include <vector>

namespace indeque {

NotSubcubic::NotSubcubic(Vertex v, int degree)
    : std::invalid_argument("not_subcubic: vertex " + std::to_string(v) + " has degree " +
                            std::to_string(degree)),
      vertex_(v),
      degree_(degree) {}

Bipartition max_cut_local_search(const Graph& g, std::uint64_t seed) {
  for (Vertex v = 0; v < g.n(); ++v) {
    if (g.degree(v) > 3) throw NotSubcubic(v, g.degree(v));
  }
  std::mt19937_64 rng(seed);
  std::vector<char> side(static_cast<std::size_t>(g.n()));
  for (auto& s : side) s = static_cast<char>(rng() & 1u);

  auto same = [&](Vertex v) {
    int k = 0;
    for (Vertex w : g.neighbors(v)) k += side[static_cast<std::size_t>(w)] == side[static_cast<std::size_t>(v)];
    return k;
  };

  Bipartition out;
  for (bool moved = true; moved;) {
    moved = false;
    for (Vertex v = 0; v < g.n(); ++v) {
      if (same(v) >= 2) {
        side[static_cast<std::size_t>(v)] ^= 1;
        ++out.moves;
        moved = true;
      }
    }
  }

  std::vector<Vertex> xs;
  std::vector<Vertex> ys;
  const char home = g.n() > 0 ? side[0] : 0;
  for (Vertex v = 0; v < g.n(); ++v) {
    (side[static_cast<std::size_t>(v)] == home ? xs : ys).push_back(v);
  }
  for (auto [u, w] : g.edges()) {
    out.cut_size += side[static_cast<std::size_t>(u)] != side[static_cast<std::size_t>(w)];
  }
  out.x = VertexSet(std::move(xs));
  out.y = VertexSet(std::move(ys));
  return out;
}

VertexSet subcubic_half(const Graph& g, std::uint64_t seed) {
  Bipartition b = max_cut_local_search(g, seed);
  return b.y.size() > b.x.size() ? b.y : b.x;
}

}  // namespace indeque
