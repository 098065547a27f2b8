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

// Local-search bipartition of graphs with maximum degree at most 3.

#pragma once

#include <cstdint>
#include <stdexcept>

#include "indeque/graph.hpp"

namespace indeque {

class NotSubcubic : public std::invalid_argument {
 public:
  NotSubcubic(Vertex v, int degree);
  [[nodiscard]] Vertex vertex() const { return vertex_; }
  [[nodiscard]] int degree() const { return degree_; }

 private:
  Vertex vertex_;
  int degree_;
};

struct Bipartition {
  VertexSet x;  // the part holding vertex 0
  VertexSet y;
  int cut_size = 0;
  int moves = 0;
};

/// Seeded random start, then repeated scans in increasing id order moving
/// any vertex with two or more neighbours in its own part. Stops after a
/// scan without moves. Both parts then induce maximum degree at most 1.
Bipartition max_cut_local_search(const Graph& g, std::uint64_t seed);

/// The larger part of the local search (X on ties).
VertexSet subcubic_half(const Graph& g, std::uint64_t seed);

}  // namespace indeque
