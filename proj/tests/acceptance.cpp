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

// Acceptance run: one PASS/FAIL line per criterion. All comparisons are on
// exact integers; the only tolerances are the wall-clock budgets.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "indeque/decompose.hpp"
#include "indeque/exact.hpp"
#include "indeque/extractor.hpp"
#include "indeque/gen.hpp"
#include "indeque/pieces.hpp"
#include "indeque/subcubic.hpp"
#include "support/oracles.hpp"

namespace indeque {
namespace {

using Clock = std::chrono::steady_clock;

constexpr double kHalfBudgetSeconds = 120.0;
constexpr double kSubcubicBudgetSeconds = 60.0;
constexpr double kOracleBudgetSeconds = 120.0;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

int ceil_half(int n) { return (n + 1) / 2; }

struct Verdict {
  bool pass = true;
  std::string detail;
};

int failures = 0;

void report(const char* id, const char* title, const Verdict& v) {
  std::printf("%s %s %s: %s\n", id, v.pass ? "PASS" : "FAIL", title, v.detail.c_str());
  std::fflush(stdout);
  if (!v.pass) ++failures;
}

std::string fmt(const char* pattern, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, pattern, args...);
  return buf;
}

VertexSet all_of(const Graph& g) {
  std::vector<Vertex> v(static_cast<std::size_t>(g.n()));
  for (Vertex i = 0; i < g.n(); ++i) v[static_cast<std::size_t>(i)] = i;
  return VertexSet(v);
}

// Every structured family at the sizes exercised here.
std::vector<Graph> family_corpus() {
  std::vector<Graph> out;
  for (int k = 1; k <= 50; ++k) out.push_back(gen::c4_union(k));
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    for (int k = 1; k <= 10; ++k) {
      out.push_back(gen::triangle_string(k, seed).graph);
      out.push_back(gen::kite(k, 2, seed).graph);
      out.push_back(gen::kite(k, 3, seed).graph);
      for (int b = 1; b <= 8; ++b) out.push_back(gen::triangle_ring(k, b, seed).graph);
      for (int i = 1; i <= 6; ++i) out.push_back(gen::gamma_ring(i, false, k, seed).graph);
      out.push_back(gen::gamma_ring(3, true, k, seed).graph);
      out.push_back(gen::gamma_ring(5, true, k, seed).graph);
    }
    for (int n = 1; n <= 60; n += 7) out.push_back(gen::random_tree(n, seed));
  }
  for (int k = 2; k <= 20; ++k) {
    const Graph g = gen::blown_cycle(k);
    if (is_k4_minor_free(g)) out.push_back(g);
  }
  return out;
}

Graph random_k4mf_corpus(int i) {
  const int n = 1 + i % 60;
  const auto seed = static_cast<std::uint64_t>(i);
  if (i % 3 == 2) return gen::random_sp(std::max(2, n), 0.2 + 0.15 * (i % 5), seed);
  return gen::random_k4mf(n, seed);
}

Verdict ac1() {
  const auto t0 = Clock::now();
  int no_rule = 0;
  int below = 0;
  int invalid = 0;
  int other = 0;
  auto run = [&](const Graph& g) {
    try {
      const ExtractionTrace t = extract_half(g);
      if (!is_indeque(g, t.set)) ++invalid;
      if (static_cast<int>(t.set.size()) < ceil_half(g.n())) ++below;
    } catch (const NoRuleMatched&) {
      ++no_rule;
    } catch (const std::exception&) {
      ++other;
    }
  };
  for (int i = 0; i < 10'000; ++i) run(random_k4mf_corpus(i));
  const auto families = family_corpus();
  for (const Graph& g : families) run(g);
  const double s = seconds_since(t0);
  Verdict v;
  v.pass = no_rule == 0 && below == 0 && invalid == 0 && other == 0 && s < kHalfBudgetSeconds;
  v.detail = fmt(
      "10000 random + %zu family graphs; no_rule_matched=%d below_bound=%d invalid=%d "
      "errors=%d; %.1fs (budget %.0fs)",
      families.size(), no_rule, below, invalid, other, s, kHalfBudgetSeconds);
  return v;
}

Verdict ac2() {
  int mismatches = 0;
  for (int k = 1; k <= 50; ++k) {
    const Graph g = gen::c4_union(k);
    const int exact = brute_force_max(g, 4).size;
    const int half = static_cast<int>(extract_half(g).set.size());
    if (exact != 2 * k || half != 2 * k) ++mismatches;
  }
  Verdict v;
  v.pass = mismatches == 0;
  v.detail = fmt("k=1..50, exact=2k and extracted=2k (ratio 0.5) mismatches=%d", mismatches);
  return v;
}

Verdict ac3() {
  int instances = 0;
  int ratio_violations = 0;
  int half_violations = 0;
  double worst = 0;
  std::string first;
  for (int a = 1; a <= 9; ++a) {
    for (int b = 1; a + b <= 10; ++b) {
      for (std::uint64_t seed = 0; seed < 10; ++seed) {
        const Graph g = gen::triangle_ring(a, b, seed).graph;
        const int two_m = g.n();
        const int m = two_m / 2;
        const int best = brute_force_max(g).size;
        const int half = static_cast<int>(extract_half(g).set.size());
        ++instances;
        // best / 2m <= 1/2 + 2/(2m)  <=>  best <= m + 2
        if (two_m % 2 != 0 || best > m + 2) {
          ++ratio_violations;
          if (first.empty()) first = fmt(" first a=%d b=%d seed=%llu best=%d 2m=%d", a, b,
                                         static_cast<unsigned long long>(seed), best, two_m);
        }
        if (half < m) ++half_violations;
        worst = std::max(worst, static_cast<double>(best) / two_m);
      }
    }
  }
  Verdict v;
  v.pass = ratio_violations == 0 && half_violations == 0;
  v.detail = fmt("%d rings with 2m<=20; best>m+2: %d, extracted<m: %d, max best/2m=%.4f%s",
                 instances, ratio_violations, half_violations, worst, first.c_str());
  return v;
}

Verdict ac4() {
  const auto t0 = Clock::now();
  int bad_set = 0;
  int below = 0;
  int too_many_moves = 0;
  long long runs = 0;
  for (int i = 0; i < 10'000; ++i) {
    const int n = 1 + i % 200;
    const Graph g = gen::random_subcubic(n, static_cast<std::uint64_t>(i));
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
      ++runs;
      const Bipartition b = max_cut_local_search(g, seed);
      const VertexSet set = subcubic_half(g, seed);
      const IndequeVerdict verdict = verify_indeque(g, set);
      bool small = verdict.accepted();
      if (small) {
        for (const auto& c : verdict.certificate->components) small = small && c.size() <= 2;
      }
      if (!small) ++bad_set;
      if (static_cast<int>(set.size()) < ceil_half(n)) ++below;
      if (b.moves > g.m()) ++too_many_moves;
    }
  }
  const double s = seconds_since(t0);
  Verdict v;
  v.pass = bad_set == 0 && below == 0 && too_many_moves == 0 && s < kSubcubicBudgetSeconds;
  v.detail = fmt("%lld runs (10000 graphs x 10 seeds); invalid=%d below_bound=%d moves>m=%d; "
                 "%.1fs (budget %.0fs)",
                 runs, bad_set, below, too_many_moves, s, kSubcubicBudgetSeconds);
  return v;
}

Verdict ac5() {
  int exact_bad = 0;
  for (int k = 2; k <= 4; ++k) exact_bad += brute_force_max(gen::blown_cycle(k)).size != 2 * k;
  int half_bad = 0;
  for (int k = 2; k <= 50; ++k) {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
      half_bad += static_cast<int>(subcubic_half(gen::blown_cycle(k), seed).size()) < 2 * k;
    }
  }
  const int q3 = brute_force_max(gen::hypercube_q3()).size;
  Verdict v;
  v.pass = exact_bad == 0 && half_bad == 0 && q3 == 4;
  v.detail = fmt("blown_cycle exact=2k for k=2..4 mismatches=%d; local search <2k for k<=50: "
                 "%d; Q3 exact=%d",
                 exact_bad, half_bad, q3);
  return v;
}

Verdict ac6() {
  const auto t0 = Clock::now();
  int sp_bad = 0;
  int k4_bad = 0;
  for (int i = 0; i < 1000; ++i) {
    const Graph g = gen::random_sp(2 + i % 11, 0.15 + 0.1 * (i % 8), static_cast<std::uint64_t>(i));
    auto rec = recognize_sp(g, 0, 1);
    if (!rec.ok()) {
      ++sp_bad;
      continue;
    }
    const ExactResult dp = sp_dp_max(g, *rec.tree);
    if (dp.size != brute_force_max(g).size || !is_indeque(g, dp.witness)) ++sp_bad;
  }
  for (int i = 0; i < 1000; ++i) {
    const Graph g = gen::random_k4mf(1 + i % 12, 100'000 + static_cast<std::uint64_t>(i));
    const ExactResult dp = k4mf_exact(g);
    if (dp.size != brute_force_max(g).size || !is_indeque(g, dp.witness)) ++k4_bad;
  }
  const double s = seconds_since(t0);
  Verdict v;
  v.pass = sp_bad == 0 && k4_bad == 0 && s < kOracleBudgetSeconds;
  v.detail = fmt("series-parallel program vs brute force: %d/1000 disagree; block composition "
                 "vs brute force: %d/1000 disagree; %.1fs (budget %.0fs)",
                 sp_bad, k4_bad, s, kOracleBudgetSeconds);
  return v;
}

Verdict ac7() {
  int checked = 0;
  int violations = 0;
  auto check = [&](const Graph& g) {
    const int alpha = brute_force_alpha(g);
    const int omega = brute_force_omega(g);
    const int best = brute_force_max(g).size;
    ++checked;
    if (best < std::max(alpha, omega) || best > alpha * omega) ++violations;
  };
  for (int i = 0; i < 1000; ++i) {
    const Graph g = i % 2 == 0 ? gen::random_k4mf(1 + i % 12, 300'000 + static_cast<std::uint64_t>(i))
                               : gen::random_sp(2 + i % 11, 0.3, 300'000 + static_cast<std::uint64_t>(i));
    check(g);
  }
  for (int i = 0; i < 1000; ++i) {
    check(testing::random_gnp(1 + i % 12, 0.1 + 0.08 * (i % 10), 77'000 + static_cast<std::uint64_t>(i)));
  }
  Verdict v;
  v.pass = violations == 0;
  v.detail = fmt("%d graphs with n<=12; max(alpha,omega)<=best<=alpha*omega violations=%d",
                 checked, violations);
  return v;
}

Verdict ac8() {
  int disagreements = 0;
  for (int i = 0; i < 2000; ++i) {
    const Graph g = testing::random_gnp(1 + i % 9, 0.15 + 0.05 * (i % 12),
                                        200'000 + static_cast<std::uint64_t>(i));
    disagreements += is_k4_minor_free(g) == testing::has_k4_minor_brute(g);
  }
  int correct = 0;
  for (int i = 1; i <= 6; ++i) {
    auto f = gen::gamma_fixture(i, false);
    for (int j = 1; j <= 6; ++j) {
      const bool hit = matches_gamma(j, f.graph, all_of(f.graph), f.labels.at("s"),
                                     f.labels.at("t"), f.labels.at("v"))
                           .has_value();
      correct += hit == (i == j);
    }
  }
  Verdict v;
  v.pass = disagreements == 0 && correct == 36;
  v.detail = fmt("recognizer vs branch-set search on 2000 graphs (n<=9): %d disagree; "
                 "template checks %d/36",
                 disagreements, correct);
  return v;
}

Verdict ac9() {
  int violations = 0;
  double min_exact_ratio = 1.0;
  double min_half_ratio = 1.0;
  int trees = 0;
  for (int n = 1; n <= 15; ++n) {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
      const Graph g = gen::random_tree(n, seed);
      const int best = brute_force_max(g).size;
      const int half = static_cast<int>(extract_half(g).set.size());
      ++trees;
      if (!(best >= half && half >= ceil_half(n))) ++violations;
      min_exact_ratio = std::min(min_exact_ratio, static_cast<double>(best) / n);
      min_half_ratio = std::min(min_half_ratio, static_cast<double>(half) / n);
    }
  }
  Verdict v;
  v.pass = violations == 0;
  v.detail = fmt("%d trees n<=15; best>=extracted>=ceil(n/2) violations=%d; min best/n=%.4f, "
                 "min extracted/n=%.4f",
                 trees, violations, min_exact_ratio, min_half_ratio);
  return v;
}

}  // namespace
}  // namespace indeque

int main() {
  using namespace indeque;
  const std::vector<std::pair<const char*, std::pair<const char*, std::function<Verdict()>>>>
      criteria{
          {"AC1", {"half-extraction bound", ac1}},
          {"AC2", {"C4-union tightness", ac2}},
          {"AC3", {"triangle-ring near-tightness", ac3}},
          {"AC4", {"subcubic bound", ac4}},
          {"AC5", {"subcubic sharpness", ac5}},
          {"AC6", {"oracle agreement", ac6}},
          {"AC7", {"alpha/omega sandwich", ac7}},
          {"AC8", {"structural recognizers", ac8}},
          {"AC9", {"forest sanity", ac9}},
      };
  for (const auto& [id, rest] : criteria) {
    Verdict v;
    try {
      v = rest.second();
    } catch (const std::exception& e) {
      v = {false, std::string("exception: ") + e.what()};
    }
    report(id, rest.first, v);
  }
  return failures == 0 ? 0 : 1;
}
