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

#include "indeque/cli.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <limits>
#include <mutex>
#include <optional>
#include <ostream>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "json.hpp"

#include "indeque/decompose.hpp"
#include "indeque/exact.hpp"
#include "indeque/extractor.hpp"
#include "indeque/gen.hpp"
#include "indeque/pieces.hpp"
#include "indeque/subcubic.hpp"

namespace indeque::cli {

namespace {

using Json = nlohmann::ordered_json;

/// Bad input or a precondition the input does not meet.
class DomainFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An outcome that contradicts the theory or an oracle.
struct Defect {
  std::string message;
  Graph reproducer;
};

int ceil_half(int n) { return (n + 1) / 2; }

Graph load_graph(const std::string& path) {
  try {
    return read_graph_file(path);
  } catch (const ParseError& e) {
    throw DomainFailure(path + ": " + e.what());
  } catch (const std::exception& e) {
    throw DomainFailure(path + ": " + e.what());
  }
}

void emit(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << text;
  } else {
    write_text_file(path, text);
  }
}

bool components_at_most_two(const IndequeCertificate& cert) {
  return std::all_of(cert.components.begin(), cert.components.end(),
                     [](const VertexSet& c) { return c.size() <= 2; });
}

// Parses "a..b", "a,b,c" or "a".
std::vector<std::int64_t> parse_range(const std::string& text) {
  std::vector<std::int64_t> out;
  auto num = [&](const std::string& s) {
    std::size_t used = 0;
    std::int64_t v = 0;
    try {
      v = std::stoll(s, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != s.size() || s.empty()) throw CLI::ValidationError("bad range: " + text);
    return v;
  };
  if (auto dots = text.find(".."); dots != std::string::npos) {
    const std::int64_t lo = num(text.substr(0, dots));
    const std::int64_t hi = num(text.substr(dots + 2));
    if (hi < lo || hi - lo > 1'000'000) throw CLI::ValidationError("bad range: " + text);
    for (std::int64_t v = lo; v <= hi; ++v) out.push_back(v);
    return out;
  }
  std::stringstream ss(text);
  for (std::string part; std::getline(ss, part, ',');) out.push_back(num(part));
  return out;
}

std::string size_param(gen::Family f) {
  switch (f) {
    case gen::Family::kTriangleRing: return "a";
    case gen::Family::kGammaRing: return "len";
    case gen::Family::kRandomSp:
    case gen::Family::kRandomK4mf:
    case gen::Family::kRandomSubcubic:
    case gen::Family::kRandomTree: return "n";
    default: return "k";
  }
}

// ---------------------------------------------------------------------------
// Commands

struct Options {
  std::string graph;
  std::string set;
  std::string out = "-";
  std::string trace;
  std::string family;
  std::string params;
  std::string method = "auto";
  std::string defect_dir = ".";
  std::uint64_t seed = 0;
  int limit = kDefaultBruteLimit;
  bool fallback = false;
  bool cross_check = false;
  // bench
  std::vector<std::string> families;
  std::vector<std::string> methods;
  std::string sizes;
  std::string seeds = "0";
  int jobs = 0;
  bool timing = false;
};

int cmd_gen(const Options& o, std::ostream& out) {
  const auto family = gen::parse_family(o.family);
  if (!family) throw DomainFailure("unknown family: " + o.family);
  gen::FamilySpec spec{*family, gen::parse_params(o.params), o.seed};
  const gen::Generated g = gen::generate(spec);
  emit(o.out, emit_graph(g.graph), out);
  const std::string sidecar = gen::sidecar_json(spec, g);
  if (!o.trace.empty()) {
    emit(o.trace, sidecar, out);
  } else if (o.out != "-") {
    write_text_file(o.out + ".json", sidecar);
  }
  return kExitOk;
}

int cmd_recognize(const Options& o, std::ostream& out) {
  const Graph g = load_graph(o.graph);
  const K4Report report = analyze_k4_minor_free(g);
  Json blocks = Json::array();
  for (std::size_t i = 0; i < report.blocks.size(); ++i) {
    const BlockSP& b = report.blocks[i];
    const bool sp = b.tree.has_value() || b.sub.graph.m() == 0;
    blocks.push_back(Json{{"vertices", report.decomposition.blocks[i].members()},
                          {"series_parallel", sp}});
  }
  Json j{{"k4_minor_free", report.k4_minor_free},
         {"subcubic", g.max_degree() <= 3},
         {"blocks", std::move(blocks)},
         {"cut_vertices", report.decomposition.cut_vertices.members()}};
  emit(o.out, j.dump() + "\n", out);
  return kExitOk;
}

int cmd_pieces(const Options& o, std::ostream& out) {
  const Graph g = load_graph(o.graph);
  if (!is_k4_minor_free(g)) throw NotK4MinorFree();
  emit(o.out, piece_report_json(g), out);
  return kExitOk;
}

bool fails_extraction(const Graph& h, bool want_no_rule) {
  try {
    extract_half(h);
    return false;
  } catch (const NoRuleMatched&) {
    return want_no_rule;
  } catch (const ExtractionDefect&) {
    return !want_no_rule;
  } catch (const std::exception&) {
    return false;
  }
}

ExtractionTrace run_half(const Graph& g, bool fallback) {
  try {
    ExtractionTrace trace = extract_half(g, ExtractOptions{fallback});
    if (!is_indeque(g, trace.set)) throw Defect{"extracted set failed verification", g};
    if (!trace.bound_ok) throw Defect{"extracted set below half", g};
    return trace;
  } catch (const NoRuleMatched& e) {
    Graph start = e.residual();
    auto pred = [](const Graph& h) { return fails_extraction(h, true); };
    if (!pred(start)) start = g;
    throw Defect{"no_rule_matched", pred(start) ? minimize_defect(start, pred) : start};
  } catch (const ExtractionDefect& e) {
    auto pred = [](const Graph& h) { return fails_extraction(h, false); };
    throw Defect{e.what(), pred(g) ? minimize_defect(g, pred) : g};
  }
}

int cmd_half(const Options& o, std::ostream& out) {
  const Graph g = load_graph(o.graph);
  const ExtractionTrace trace = run_half(g, o.fallback);
  if (!o.trace.empty()) emit(o.trace, trace_json(trace), out);
  if (o.trace != "-" || o.out != "-") emit(o.out, emit_vertex_set(trace.set), out);
  return kExitOk;
}

int cmd_subcubic(const Options& o, std::ostream& out) {
  const Graph g = load_graph(o.graph);
  const Bipartition b = max_cut_local_search(g, o.seed);
  const VertexSet set = b.y.size() > b.x.size() ? b.y : b.x;
  const IndequeVerdict verdict = verify_indeque(g, set);
  if (!verdict.accepted() || !components_at_most_two(*verdict.certificate)) {
    throw Defect{"subcubic part failed verification", g};
  }
  if (2 * static_cast<int>(set.size()) < g.n() || b.moves > g.m()) {
    throw Defect{"subcubic bound violated", g};
  }
  Json j{{"n", g.n()},
         {"size", set.size()},
         {"cut", b.cut_size},
         {"moves", b.moves},
         {"seed", o.seed},
         {"set", set.members()}};
  if (o.out != "-") write_text_file(o.out, emit_vertex_set(set));
  out << j.dump() << "\n";
  return kExitOk;
}

int cmd_exact(const Options& o, std::ostream& out) {
  const Graph g = load_graph(o.graph);
  std::string method = o.method;
  if (method == "auto") method = is_k4_minor_free(g) ? "dp" : "brute";
  const ExactResult r = method == "dp" ? k4mf_exact(g) : brute_force_max(g, o.limit);
  if (!is_indeque(g, r.witness) || static_cast<int>(r.witness.size()) != r.size) {
    throw Defect{"exact witness failed verification", g};
  }
  if (o.cross_check) {
    const ExactResult other = method == "dp" ? brute_force_max(g, o.limit) : k4mf_exact(g);
    if (other.size != r.size) {
      throw Defect{"oracle disagreement: " + std::to_string(r.size) + " vs " +
                       std::to_string(other.size),
                   g};
    }
  }
  Json j{{"size", r.size}, {"witness", r.witness.members()}, {"method", method}};
  emit(o.out, j.dump() + "\n", out);
  return kExitOk;
}

int cmd_check(const Options& o, std::ostream& out) {
  const Graph g = load_graph(o.graph);
  VertexSet s;
  try {
    s = read_vertex_set_file(o.set, g.n());
  } catch (const std::exception& e) {
    throw DomainFailure(o.set + ": " + e.what());
  }
  const IndequeVerdict v = verify_indeque(g, s);
  if (!v.accepted()) {
    Json j{{"indeque", false}, {"witness", {v.witness->first, v.witness->second}}};
    out << j.dump() << "\n";
    return kExitDomain;
  }
  Json comps = Json::array();
  for (const auto& c : v.certificate->components) comps.push_back(c.members());
  Json j{{"set", v.certificate->set.members()}, {"components", std::move(comps)}};
  out << j.dump() << "\n";
  return kExitOk;
}

// ---------------------------------------------------------------------------
// Bench

struct Instance {
  gen::FamilySpec spec;
};

struct Row {
  std::string family;
  std::map<std::string, double> params;
  std::uint64_t seed = 0;
  int n = 0;
  std::string method;
  int set_size = 0;
  std::optional<int> exact_size;
  std::optional<double> wall_time;

  [[nodiscard]] bool bound_ok() const { return 2 * set_size >= n; }
};

struct Outcome {
  std::vector<Row> rows;
  std::optional<Defect> defect;
  std::optional<std::string> error;
};

Outcome run_instance(const Instance& inst, const std::vector<std::string>& methods, int limit,
                     bool timing) {
  Outcome result;
  const gen::Generated gen = gen::generate(inst.spec);
  const Graph& g = gen.graph;
  const bool k4 = is_k4_minor_free(g);
  const bool sub = g.max_degree() <= 3;
  std::optional<int> exact;
  try {
    exact = k4 ? k4mf_exact(g).size : brute_force_max(g, limit).size;
  } catch (const OverLimit&) {
  }
  auto wanted = [&](const std::string& m) {
    return methods.empty() || std::find(methods.begin(), methods.end(), m) != methods.end();
  };
  auto row = [&](const std::string& method, auto&& solve) {
    const auto t0 = std::chrono::steady_clock::now();
    const int size = solve();
    Row r{std::string(gen::family_name(inst.spec.family)),
          inst.spec.params,
          inst.spec.seed,
          g.n(),
          method,
          size,
          exact,
          std::nullopt};
    if (timing) {
      r.wall_time = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    }
    if (method != "exact" && !r.bound_ok()) {
      result.defect = Defect{method + " below half on " + r.family, g};
    }
    if (exact && *exact < size) result.defect = Defect{"exact below heuristic on " + r.family, g};
    result.rows.push_back(std::move(r));
  };
  try {
    if (k4 && wanted("half")) {
      row("half", [&] { return static_cast<int>(run_half(g, false).set.size()); });
    }
    if (sub && wanted("subcubic")) {
      row("subcubic", [&] {
        const VertexSet s = subcubic_half(g, inst.spec.seed);
        const IndequeVerdict v = verify_indeque(g, s);
        if (!v.accepted() || !components_at_most_two(*v.certificate)) {
          throw Defect{"subcubic part failed verification", g};
        }
        return static_cast<int>(s.size());
      });
    }
    if (exact && wanted("exact")) row("exact", [&] { return *exact; });
  } catch (const Defect& d) {
    result.defect = d;
  }
  return result;
}

Json params_json(const std::map<std::string, double>& params) {
  Json j = Json::object();
  for (const auto& [k, v] : params) {
    if (v == static_cast<double>(static_cast<std::int64_t>(v))) {
      j[k] = static_cast<std::int64_t>(v);
    } else {
      j[k] = v;
    }
  }
  return j;
}

std::string write_reproducer(const Defect& d, const std::string& dir, const std::string& tag) {
  std::filesystem::create_directories(dir);
  const std::string path = (std::filesystem::path(dir) /
                            ("defect-" + tag + "-" + std::to_string(d.reproducer.n()) + "-" +
                             std::to_string(d.reproducer.m()) + ".graph"))
                               .string();
  write_text_file(path, emit_graph(d.reproducer));
  return path;
}

int cmd_bench(const Options& o, std::ostream& out, std::ostream& err) {
  std::vector<Instance> instances;
  const auto seeds = parse_range(o.seeds);
  for (const auto& name : o.families) {
    const auto family = gen::parse_family(name);
    if (!family) throw DomainFailure("unknown family: " + name);
    const auto base = gen::parse_params(o.params);
    std::vector<std::int64_t> sizes{-1};
    if (!o.sizes.empty()) sizes = parse_range(o.sizes);
    for (std::int64_t size : sizes) {
      for (std::int64_t seed : seeds) {
        Instance inst{{*family, base, static_cast<std::uint64_t>(seed)}};
        if (size >= 0) inst.spec.params[size_param(*family)] = static_cast<double>(size);
        instances.push_back(std::move(inst));
      }
    }
  }
  for (const auto& m : o.methods) {
    if (m != "half" && m != "subcubic" && m != "exact") {
      throw CLI::ValidationError("--method", "unknown method " + m);
    }
  }

  std::vector<Outcome> outcomes(instances.size());
  std::atomic<std::size_t> next{0};
  std::mutex error_mutex;
  auto worker = [&] {
    for (std::size_t i = next++; i < instances.size(); i = next++) {
      try {
        outcomes[i] = run_instance(instances[i], o.methods, o.limit, o.timing);
      } catch (const std::exception& e) {
        std::lock_guard lock(error_mutex);
        outcomes[i].error = e.what();
      }
    }
  };
  const unsigned hw = std::max(1u, std::thread::hardware_concurrency());
  const std::size_t jobs =
      std::min<std::size_t>(o.jobs > 0 ? static_cast<std::size_t>(o.jobs) : hw,
                            std::max<std::size_t>(1, instances.size()));
  std::vector<std::thread> pool;
  for (std::size_t j = 1; j < jobs; ++j) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  std::vector<Row> rows;
  for (std::size_t i = 0; i < outcomes.size(); ++i) {
    if (outcomes[i].error) throw DomainFailure(*outcomes[i].error);
    rows.insert(rows.end(), outcomes[i].rows.begin(), outcomes[i].rows.end());
  }
  std::stable_sort(rows.begin(), rows.end(), [](const Row& a, const Row& b) {
    return std::tie(a.family, a.params, a.seed, a.method) <
           std::tie(b.family, b.params, b.seed, b.method);
  });

  Json jrows = Json::array();
  std::map<std::string, Json> summary;
  for (const Row& r : rows) {
    jrows.push_back(Json{{"family", r.family},
                         {"params", params_json(r.params)},
                         {"seed", r.seed},
                         {"n", r.n},
                         {"method", r.method},
                         {"set_size", r.set_size},
                         {"bound", ceil_half(r.n)},
                         {"bound_ok", r.bound_ok()},
                         {"exact_size", r.exact_size ? Json(*r.exact_size) : Json(nullptr)},
                         {"wall_time", r.wall_time ? Json(*r.wall_time) : Json(nullptr)}});
    Json& s = summary[r.family];
    if (s.is_null()) s = Json{{"rows", 0}, {"min_ratio", nullptr}, {"all_bound_ok", true}};
    s["rows"] = s["rows"].get<int>() + 1;
    if (r.method == "exact" || r.n == 0) continue;
    const double ratio = static_cast<double>(r.set_size) / r.n;
    if (s["min_ratio"].is_null() || ratio < s["min_ratio"].get<double>()) s["min_ratio"] = ratio;
    if (!r.bound_ok()) s["all_bound_ok"] = false;
  }
  Json jsummary = Json::object();
  for (auto& [k, v] : summary) jsummary[k] = std::move(v);
  emit(o.out, Json{{"rows", std::move(jrows)}, {"summary", std::move(jsummary)}}.dump(1) + "\n",
       out);

  for (std::size_t i = 0; i < outcomes.size(); ++i) {
    if (outcomes[i].defect) {
      const std::string path = write_reproducer(*outcomes[i].defect, o.defect_dir, "bench");
      err << "defect: " << outcomes[i].defect->message << " (reproducer " << path << ")\n";
      return kExitDefect;
    }
  }
  return kExitOk;
}

}  // namespace

Graph minimize_defect(const Graph& g, const std::function<bool(const Graph&)>& predicate) {
  if (!predicate(g)) throw std::invalid_argument("predicate does not hold on the input");
  Graph cur = g;
  for (Vertex v = 0; v < cur.n();) {
    Graph smaller = remove_vertices(cur, VertexSet{v}).graph;
    if (predicate(smaller)) {
      cur = std::move(smaller);
    } else {
      ++v;
    }
  }
  return cur;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Indeque set solver suite", "indeque"};
  app.require_subcommand(1);
  Options o;
  app.add_option("--defect-dir", o.defect_dir, "Directory for defect reproducers");

  auto* gen_cmd = app.add_subcommand("gen", "Generate a graph family instance");
  gen_cmd->add_option("family", o.family, "Family name")->required();
  gen_cmd->add_option("--params", o.params, "key=value[,key=value...]");
  gen_cmd->add_option("--seed", o.seed, "Seed");
  gen_cmd->add_option("--out", o.out, "Graph file (- for stdout)");
  gen_cmd->add_option("--sidecar", o.trace, "Annotation JSON (default <out>.json)");

  auto* rec_cmd = app.add_subcommand("recognize", "Block and K4-minor report");
  rec_cmd->add_option("graph", o.graph)->required();
  rec_cmd->add_option("--out", o.out);

  auto* pieces_cmd = app.add_subcommand("pieces", "Structural pattern report");
  pieces_cmd->add_option("graph", o.graph)->required();
  pieces_cmd->add_option("--out", o.out);

  auto* half_cmd = app.add_subcommand("half", "Half-size indeque set of a K4-minor-free graph");
  half_cmd->add_option("graph", o.graph)->required();
  half_cmd->add_option("--trace", o.trace, "Trace JSON (- for stdout)");
  half_cmd->add_flag("--fallback-exact", o.fallback, "Solve exactly when no rule applies");
  half_cmd->add_option("--out", o.out, "Vertex set file (- for stdout)");

  auto* sub_cmd = app.add_subcommand("subcubic", "Half-size indeque set of a subcubic graph");
  sub_cmd->add_option("graph", o.graph)->required();
  sub_cmd->add_option("--seed", o.seed);
  sub_cmd->add_option("--out", o.out, "Vertex set file");

  auto* exact_cmd = app.add_subcommand("exact", "Maximum indeque set");
  exact_cmd->add_option("graph", o.graph)->required();
  exact_cmd->add_option("--method", o.method)->check(CLI::IsMember({"auto", "brute", "dp"}));
  exact_cmd->add_option("--limit", o.limit, "Largest component for brute force")
      ->check(CLI::Range(0, kHardBruteLimit));
  exact_cmd->add_flag("--cross-check", o.cross_check, "Compare both oracles");
  exact_cmd->add_option("--out", o.out);

  auto* check_cmd = app.add_subcommand("check", "Verify an indeque set");
  check_cmd->add_option("graph", o.graph)->required();
  check_cmd->add_option("set", o.set)->required();

  auto* bench_cmd = app.add_subcommand("bench", "Batch runs over generator families");
  bench_cmd->add_option("--family", o.families)->required();
  bench_cmd->add_option("--k,--sizes", o.sizes, "Size parameter range, e.g. 1..50");
  bench_cmd->add_option("--seeds", o.seeds, "Seed range");
  bench_cmd->add_option("--params", o.params, "Fixed parameters");
  bench_cmd->add_option("--method", o.methods, "half, subcubic, exact (default: all that apply)");
  bench_cmd->add_option("--limit", o.limit)->check(CLI::Range(0, kHardBruteLimit));
  bench_cmd->add_option("--jobs", o.jobs, "Worker threads");
  bench_cmd->add_flag("--timing", o.timing, "Record wall time per row");
  bench_cmd->add_option("--out", o.out);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n" << app.help();
    return kExitUsage;
  }

  const auto* cmd = app.get_subcommands().front();
  try {
    if (cmd == gen_cmd) return cmd_gen(o, out);
    if (cmd == rec_cmd) return cmd_recognize(o, out);
    if (cmd == pieces_cmd) return cmd_pieces(o, out);
    if (cmd == half_cmd) return cmd_half(o, out);
    if (cmd == sub_cmd) return cmd_subcubic(o, out);
    if (cmd == exact_cmd) return cmd_exact(o, out);
    if (cmd == check_cmd) return cmd_check(o, out);
    return cmd_bench(o, out, err);
  } catch (const Defect& d) {
    const std::string path = write_reproducer(d, o.defect_dir, cmd->get_name());
    err << "defect: " << d.message << " (reproducer " << path << ")\n";
    return kExitDefect;
  } catch (const CLI::ValidationError& e) {
    err << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << e.what() << "\n";
    return kExitDomain;
  }
}

}  // namespace indeque::cli
