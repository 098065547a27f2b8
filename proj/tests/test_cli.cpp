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

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "indeque/cli.hpp"
#include "indeque/gen.hpp"
#include "json.hpp"

namespace indeque {
namespace {

namespace fs = std::filesystem;

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  args.insert(args.begin(), "indeque");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out;
  std::ostringstream err;
  const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

class Cli : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::path(INDEQUE_TEST_TMP) /
           ::testing::UnitTest::GetInstance()->current_test_info()->name();
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }

  std::string file(const std::string& name, const std::string& text) {
    const std::string path = (dir_ / name).string();
    write_text_file(path, text);
    return path;
  }

  std::string path(const std::string& name) { return (dir_ / name).string(); }

  fs::path dir_;
};

TEST_F(Cli, CheckAcceptsOppositePairOfC4) {
  auto g = file("c4.graph", emit_graph(gen::cycle(4)));
  auto s = file("s.set", "0\n2\n");
  auto r = run({"check", g, s});
  EXPECT_EQ(r.code, cli::kExitOk);
  auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["set"], nlohmann::json({0, 2}));
  EXPECT_EQ(j["components"], nlohmann::json({{0}, {2}}));
}

TEST_F(Cli, CheckRejectsInducedPath) {
  auto g = file("c4.graph", emit_graph(gen::cycle(4)));
  auto s = file("s.set", "0\n1\n2\n");
  auto r = run({"check", g, s});
  EXPECT_EQ(r.code, cli::kExitDomain);
  EXPECT_EQ(nlohmann::json::parse(r.out)["indeque"], false);
}

TEST_F(Cli, HalfRejectsK4) {
  auto g = file("k4.graph", emit_graph(gen::complete(4)));
  auto r = run({"half", g});
  EXPECT_EQ(r.code, cli::kExitDomain);
  EXPECT_NE(r.err.find("not_k4_minor_free"), std::string::npos);
}

TEST_F(Cli, HalfWritesSetAndTrace) {
  auto g = file("g.graph", emit_graph(gen::c4_union(3)));
  auto r = run({"half", g, "--trace", path("t.json"), "--out", path("s.set")});
  ASSERT_EQ(r.code, cli::kExitOk) << r.err;
  EXPECT_EQ(read_vertex_set_file(path("s.set")).size(), 6u);
  std::ifstream in(path("t.json"));
  auto j = nlohmann::json::parse(in);
  EXPECT_EQ(j["steps"].size(), 3u);
  EXPECT_EQ(j["bound_ok"], true);
}

TEST_F(Cli, MalformedGraphIsDomainError) {
  auto g = file("bad.graph", "3 1\n0 0\n");
  EXPECT_EQ(run({"half", g}).code, cli::kExitDomain);
  EXPECT_EQ(run({"half", path("missing.graph")}).code, cli::kExitDomain);
}

TEST_F(Cli, UsageErrors) {
  EXPECT_EQ(run({}).code, cli::kExitUsage);
  EXPECT_EQ(run({"half"}).code, cli::kExitUsage);
  EXPECT_EQ(run({"half", "x", "--bogus"}).code, cli::kExitUsage);
  EXPECT_EQ(run({"frobnicate"}).code, cli::kExitUsage);
  EXPECT_EQ(run({"exact", "x", "--limit", "30"}).code, cli::kExitUsage);
  EXPECT_EQ(run({"--help"}).code, cli::kExitOk);
}

TEST_F(Cli, GenWritesGraphAndSidecar) {
  auto r = run({"gen", "blown_cycle", "--params", "k=3", "--seed", "2", "--out", path("b.graph")});
  ASSERT_EQ(r.code, cli::kExitOk) << r.err;
  EXPECT_EQ(read_graph_file(path("b.graph")), gen::blown_cycle(3));
  std::ifstream in(path("b.graph.json"));
  auto j = nlohmann::json::parse(in);
  EXPECT_EQ(j["known_indeque"], 6);
  EXPECT_EQ(run({"gen", "nope"}).code, cli::kExitDomain);
}

TEST_F(Cli, GenIsByteIdenticalAcrossRuns) {
  auto a = run({"gen", "random_k4mf", "--params", "n=30", "--seed", "5"});
  auto b = run({"gen", "random_k4mf", "--params", "n=30", "--seed", "5"});
  EXPECT_EQ(a.out, b.out);
  EXPECT_FALSE(a.out.empty());
}

TEST_F(Cli, RecognizeReportsBlocks) {
  auto g = file("g.graph", emit_graph(Graph(5, {{0, 1}, {0, 2}, {1, 2}, {2, 3}, {3, 4}})));
  auto r = run({"recognize", g});
  ASSERT_EQ(r.code, cli::kExitOk);
  auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["k4_minor_free"], true);
  EXPECT_EQ(j["subcubic"], true);
  EXPECT_EQ(j["blocks"].size(), 3u);
  EXPECT_EQ(j["cut_vertices"], nlohmann::json({2, 3}));
}

TEST_F(Cli, PiecesDumpsJson) {
  auto g = file("g.graph", emit_graph(gen::theta()));
  auto r = run({"pieces", g});
  ASSERT_EQ(r.code, cli::kExitOk);
  EXPECT_EQ(nlohmann::json::parse(r.out)["blocks"].size(), 1u);
}

TEST_F(Cli, SubcubicSummary) {
  auto g = file("q3.graph", emit_graph(gen::hypercube_q3()));
  auto r = run({"subcubic", g, "--seed", "4", "--out", path("s.set")});
  ASSERT_EQ(r.code, cli::kExitOk);
  auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["n"], 8);
  EXPECT_GE(j["size"].get<int>(), 4);
  EXPECT_EQ(j["seed"], 4);
  EXPECT_LE(j["moves"].get<int>(), 12);
  auto k5 = file("k5.graph", emit_graph(gen::complete(5)));
  EXPECT_EQ(run({"subcubic", k5}).code, cli::kExitDomain);
}

TEST_F(Cli, ExactMethods) {
  auto g = file("c5.graph", emit_graph(gen::cycle(5)));
  for (const char* m : {"brute", "dp", "auto"}) {
    auto r = run({"exact", g, "--method", m, "--cross-check"});
    ASSERT_EQ(r.code, cli::kExitOk) << m;
    EXPECT_EQ(nlohmann::json::parse(r.out)["size"], 3);
  }
  auto k4 = file("k4.graph", emit_graph(gen::complete(4)));
  EXPECT_EQ(run({"exact", k4, "--method", "dp"}).code, cli::kExitDomain);
  auto big = file("big.graph", emit_graph(gen::cycle(30)));
  EXPECT_EQ(run({"exact", big, "--method", "brute"}).code, cli::kExitDomain);
}

TEST_F(Cli, BenchC4UnionsHitHalfExactly) {
  auto r = run({"bench", "--family", "c4_union", "--k", "1..50", "--out", "-"});
  ASSERT_EQ(r.code, cli::kExitOk) << r.err;
  auto j = nlohmann::json::parse(r.out);
  for (const auto& row : j["rows"]) EXPECT_EQ(row["bound_ok"], true);
  EXPECT_EQ(j["summary"]["c4_union"]["min_ratio"], 0.5);
  EXPECT_EQ(j["summary"]["c4_union"]["all_bound_ok"], true);
}

TEST_F(Cli, BenchIsDeterministicAcrossJobCounts) {
  std::vector<std::string> base{"bench",   "--family", "random_k4mf", "--family",
                                "random_subcubic", "--k", "5..12", "--seeds", "0..3"};
  auto one = base;
  one.insert(one.end(), {"--jobs", "1"});
  auto four = base;
  four.insert(four.end(), {"--jobs", "4"});
  auto a = run(one);
  auto b = run(four);
  ASSERT_EQ(a.code, cli::kExitOk) << a.err;
  EXPECT_EQ(a.out, b.out);
  auto j = nlohmann::json::parse(a.out);
  for (const auto& row : j["rows"]) {
    EXPECT_TRUE(row["wall_time"].is_null());
    if (!row["exact_size"].is_null()) {
      EXPECT_GE(row["exact_size"], row["set_size"]);
    }
  }
}

TEST(Minimize, KeepsOneEdge) {
  auto g = cli::minimize_defect(gen::cycle(4), [](const Graph& h) { return h.m() >= 1; });
  EXPECT_EQ(g.n(), 2);
  EXPECT_EQ(g.m(), 1);
}

TEST(Minimize, K5IsAlreadyMinimalForHighDegree) {
  auto g = cli::minimize_defect(gen::complete(5),
                                [](const Graph& h) { return h.max_degree() >= 4; });
  EXPECT_EQ(g, gen::complete(5));
}

TEST(Minimize, ShrinksToOneTriangle) {
  auto has_triangle = [](const Graph& h) {
    for (auto [u, w] : h.edges()) {
      for (Vertex x : h.neighbors(u)) {
        if (x != w && h.has_edge(x, w)) return true;
      }
    }
    return false;
  };
  Graph bowtie(5, {{0, 1}, {0, 2}, {1, 2}, {2, 3}, {2, 4}, {3, 4}});
  auto g = cli::minimize_defect(bowtie, has_triangle);
  EXPECT_EQ(g, gen::complete(3));
}

TEST(Minimize, RefusesFalsePredicate) {
  EXPECT_THROW(cli::minimize_defect(gen::path(3), [](const Graph&) { return false; }),
               std::invalid_argument);
}

}  // namespace
}  // namespace indeque
