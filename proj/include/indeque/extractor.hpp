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

// Rule engine that extracts an indeque set of at least half the vertices
// from a K4-minor-free graph by repeatedly deleting contra-pairs.
//
// A contra-pair (X, S) is a vertex set X with an indeque subset S such that
// 2|S| >= |X| and no vertex of S has a neighbour outside X. Banking S and
// recursing on G - X keeps the half bound.

#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "indeque/graph.hpp"

namespace indeque {

enum class Rule {
  kR1,  // isolated vertex
  kR2,  // degree-1 vertex
  kR3,  // adjacent degree-2 vertices
  kR4,  // ring in a leaf block
  kR5,  // kite in a leaf block
  kR6,  // Γ ring at the cut vertex
  kR7,  // edge at the anchor in parallel with a string
  kR8,  // the leaf block is one Γ shape
  kR9,  // parallel 2-edge chains
  kFallback,
};

/// "R1" ... "R9", "F".
std::string_view rule_name(Rule r);

struct ContraPair {
  VertexSet x;
  VertexSet s;
  Rule rule = Rule::kR1;
  int gamma = 0;  // Γ index for R6 and R8, ring tag for R4
};

/// Long tag, e.g. "R3_adjacent_deg2" or "R6_gamma_ring(4)".
std::string rule_tag(const ContraPair& p);

enum class ContraViolation {
  kNone,
  kEmpty,
  kNotSubset,
  kNotIndeque,
  kTooSmall,
  kLeaks,
};

std::string_view to_string(ContraViolation v);

/// The certifying check applied before every deletion.
ContraViolation check_contra_pair(const Graph& g, const ContraPair& p);

/// No rule applies: contradicts the half bound for K4-minor-free graphs.
class NoRuleMatched : public std::runtime_error {
 public:
  NoRuleMatched(Graph residual, std::vector<Vertex> to_original);
  [[nodiscard]] const Graph& residual() const { return residual_; }
  /// Residual ids to ids of the graph handed to extract_half.
  [[nodiscard]] const std::vector<Vertex>& to_original() const { return to_original_; }

 private:
  Graph residual_;
  std::vector<Vertex> to_original_;
};

/// An applied step failed its certificate or the final set failed
/// verification on the input graph.
class ExtractionDefect : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// First contra-pair by rule priority R1, R2, R3, then per leaf block
/// R4, R5, R8, R6, R7, R9, R3. Matches failing the check are skipped and
/// counted in `skipped`. Throws NoRuleMatched (with the identity map).
ContraPair find_contra_pair(const Graph& g, int* skipped = nullptr);

struct ExtractOptions {
  /// On NoRuleMatched, delete the component of the first leaf block and bank
  /// an exact maximum indeque set of it.
  bool fallback_exact = false;
};

struct ExtractionTrace {
  std::vector<ContraPair> steps;  // original ids
  VertexSet set;
  IndequeCertificate certificate;
  int n = 0;
  int skipped = 0;
  bool bound_ok = true;  // 2 |set| >= n
};

/// Throws NotK4MinorFree, NoRuleMatched or ExtractionDefect.
ExtractionTrace extract_half(const Graph& g, const ExtractOptions& options = {});

/// Empty when the trace is consistent with g: steps are valid contra-pairs
/// in the residual they were applied to, the X sets partition V(g) and the
/// S sets partition the final set. Otherwise a description of the problem.
std::string audit_trace(const Graph& g, const ExtractionTrace& trace);

/// `{"steps":[{"rule":..,"tag":..,"X":[..],"S":[..]}],"set":[..],"n":..,
///   "bound_ok":..,"skipped":..}`
std::string trace_json(const ExtractionTrace& trace);

}  // namespace indeque
