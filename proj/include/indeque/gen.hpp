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

// Seeded graph families and fixtures.
//
// All randomness comes from std::mt19937_64 seeded with the spec seed. Raw
// 64-bit outputs are reduced with `%` for integers and with the top 53 bits
// for probabilities, so instances are identical on every platform.

#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "indeque/decompose.hpp"
#include "indeque/graph.hpp"

namespace indeque::gen {

enum class Family {
  kC4Union,
  kTriangleString,
  kTriangleRing,
  kGammaRing,
  kKite,
  kBlownCycle,
  kRandomSp,
  kRandomK4mf,
  kRandomSubcubic,
  kRandomTree,
};

std::string_view family_name(Family f);
std::optional<Family> parse_family(std::string_view name);
const std::vector<Family>& all_families();

class GenError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Family parameters by name. Unknown or missing keys fall back to the
/// family defaults; out-of-range values throw GenError.
///
///   c4_union         k >= 1
///   triangle_string  k >= 1 (triangles)
///   triangle_ring    a >= 1, b >= 1 (triangles per string)
///   gamma_ring       i in 1..6, chord in {0,1} (i = 3 or 5 only), len >= 1
///   kite             k >= 1, path in {2,3} (path vertices)
///   blown_cycle      k >= 2
///   random_sp        n >= 2, p in [0,1] (subdivision probability)
///   random_k4mf      n >= 0
///   random_subcubic  n >= 0
///   random_tree      n >= 1
struct FamilySpec {
  Family family = Family::kC4Union;
  std::map<std::string, double> params;
  std::uint64_t seed = 0;
};

/// Parses `key=value[,key=value...]`.
std::map<std::string, double> parse_params(std::string_view text);

struct Generated {
  Graph graph;
  std::optional<int> known_indeque;
  std::string source;                    // "published", "derived" or empty
  std::map<std::string, Vertex> labels;  // named vertices (s, t, v, x, ...)
};

Generated generate(const FamilySpec& spec);

/// `{"family":..,"params":{..},"seed":..,"n":..,"m":..,"known_indeque":..,
///   "claimed_bound":..,"source":..}`
std::string sidecar_json(const FamilySpec& spec, const Generated& g);

// Direct constructors.
Graph c4_union(int k);
Generated triangle_string(int k, std::uint64_t seed);
Generated triangle_ring(int a, int b, std::uint64_t seed);
Generated gamma_ring(int i, bool chord, int len, std::uint64_t seed);
Generated kite(int k, int path_vertices, std::uint64_t seed);
Graph blown_cycle(int k);
Graph random_sp(int n, double p, std::uint64_t seed);
Graph random_k4mf(int n, std::uint64_t seed);
Graph random_subcubic(int n, std::uint64_t seed);
Graph random_tree(int n, std::uint64_t seed);

// Fixtures.
Graph complete(int n);
Graph cycle(int n);
Graph path(int n);
Graph hypercube_q3();
/// Two vertices joined by three internally disjoint 2-edge paths; the
/// branch vertices are 0 and 1.
Graph theta();
/// Canonical Γi instance. Labels s, t, v (and w, u where present).
/// `chord` is honoured for i = 3 and 5 only.
Generated gamma_fixture(int i, bool chord);

/// Graph realized by the tree; throws SPError on a malformed tree.
Graph realize_sp_tree(const SPTree& tree);

}  // namespace indeque::gen
