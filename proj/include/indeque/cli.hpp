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

// Command-line front end.
//
// Exit codes: 0 success, 1 domain error (bad input, not K4-minor-free, not
// subcubic, over limit, rejected set), 2 defect (a theory-contradicting
// outcome; a minimized reproducer is written), 64 usage error.

#pragma once

#include <functional>
#include <iosfwd>

#include "indeque/graph.hpp"

namespace indeque::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitDomain = 1;
inline constexpr int kExitDefect = 2;
inline constexpr int kExitUsage = 64;

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

/// Greedy single-vertex deletion while `predicate` keeps holding. Throws
/// std::invalid_argument when the predicate fails on g.
Graph minimize_defect(const Graph& g, const std::function<bool(const Graph&)>& predicate);

}  // namespace indeque::cli
