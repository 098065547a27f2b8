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

// Exact maximum indeque sets.

#pragma once

#include <stdexcept>

#include "indeque/decompose.hpp"
#include "indeque/graph.hpp"

namespace indeque {

class OverLimit : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ExactError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct ExactResult {
  int size = 0;
  VertexSet witness;
};

inline constexpr int kDefaultBruteLimit = 20;
inline constexpr int kHardBruteLimit = 26;

/// Subset enumeration, one connected component at a time. `limit` caps the
/// largest component; limits above 26 are refused. The witness is the
/// lexicographically least maximum set.
ExactResult brute_force_max(const Graph& g, int limit = kDefaultBruteLimit);
/// Independence number and clique number by the same enumeration.
int brute_force_alpha(const Graph& g, int limit = kDefaultBruteLimit);
int brute_force_omega(const Graph& g, int limit = kDefaultBruteLimit);

/// Dynamic program over a decomposition tree that realizes `block`. Throws
/// ExactError when the tree does not realize the block.
ExactResult sp_dp_max(const Graph& block, const SPTree& tree);

/// Block-cut tree composition of per-block programs. Throws NotK4MinorFree.
ExactResult k4mf_exact(const Graph& g);

}  // namespace indeque
