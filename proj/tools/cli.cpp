// Copyright 2026 The c4part Authors
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


#include "cli.hpp"

#include <chrono>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "c4part/constructions.hpp"
#include "c4part/corollaries.hpp"
#include "c4part/error.hpp"
#include "c4part/io.hpp"
#include "c4part/oracle.hpp"
#include "c4part/report.hpp"
#include "c4part/solver.hpp"

namespace c4part {

namespace {

constexpr int kUsage = 64;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct GraphInput {
  std::string path = "-";
  std::string format = "auto";

  void attach(CLI::App* app) {
    app->add_option("--graph", path, "graph file, '-' for stdin")->capture_default_str();
    app->add_option("--format", format, "auto, graph6 or edges")
        ->check(CLI::IsMember({"auto", "graph6", "edges"}))
        ->capture_default_str();
  }
};

struct DemandInput {
  std::optional<int> a_const;
  std::optional<int> b_const;
  std::string a_file;
  std::string b_file;
  std::string demands_file;

  void attach(CLI::App* app) {
    app->add_option("--a-const", a_const, "constant demand a");
    app->add_option("--b-const", b_const, "constant demand b");
    app->add_option("--a-file", a_file, "JSON array or object with a / a_const");
    app->add_option("--b-file", b_file, "JSON array or object with b / b_const");
    app->add_option("--demands", demands_file, "JSON object with both sides");
  }
};

std::string slurp(const std::string& path, std::istream& in) {
  if (path == "-") return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
  std::ifstream f(path, std::ios::binary);
  if (!f) throw UsageError("cannot open " + path);
  return {std::istreambuf_iterator<char>(f), std::istreambuf_iterator<char>()};
}

Graph read_graph(const GraphInput& gi, std::istream& in) {
  GraphFormat f = gi.format == "graph6" ? GraphFormat::kGraph6
                  : gi.format == "edges" ? GraphFormat::kEdgeList
                                         : GraphFormat::kAuto;
  return parse_graph(slurp(gi.path, in), f);
}

DemandFn side_demand(const std::optional<int>& k, const std::string& file, const std::string& key,
                     std::size_t n, std::istream& in) {
  if (k && !file.empty()) throw UsageError("give only one of --" + key + "-const and --" + key + "-file");
  if (k) {
    if (*k < 2) throw UsageError("--" + key + "-const must be at least 2");
    return DemandFn(n, *k);
  }
  if (!file.empty()) return parse_demand_values(slurp(file, in), key, n);
  throw UsageError("missing demand for side " + key);
}

DemandPair read_demands(const DemandInput& di, std::size_t n, std::istream& in) {
  if (!di.demands_file.empty()) {
    if (di.a_const || di.b_const || !di.a_file.empty() || !di.b_file.empty()) {
      throw UsageError("--demands cannot be combined with per-side demand options");
    }
    return parse_demands(slurp(di.demands_file, in), n);
  }
  return DemandPair{side_demand(di.a_const, di.a_file, "a", n, in),
                    side_demand(di.b_const, di.b_file, "b", n, in)};
}

void emit(std::ostream& out, const Json& j) { out << j.dump(2) << "\n"; }

double elapsed_ms(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
}

std::vector<std::pair<int, int>> parse_grid(const std::string& text) {
  std::vector<std::pair<int, int>> grid;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ';')) {
    int a = 0;
    int b = 0;
    char comma = 0;
    std::stringstream is(item);
    if (!(is >> a >> comma >> b) || comma != ',') throw UsageError("bad grid entry '" + item + "'");
    grid.emplace_back(a, b);
  }
  if (grid.empty()) throw UsageError("empty grid");
  return grid;
}

Json parts_json(const std::vector<VertexList>& parts) {
  Json arr = Json::array();
  for (const auto& p : parts) arr.push_back(p);
  return arr;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"Certified partitions of C4-free graphs under minimum-degree demands", "c4part"};
  app.require_subcommand(1);

  GraphInput graph_in;
  DemandInput demand_in;

  auto* solve_cmd = app.add_subcommand("solve", "partition a graph for demands a, b");
  graph_in.attach(solve_cmd);
  demand_in.attach(solve_cmd);
  std::string fallback = "none";
  bool no_timing = false;
  solve_cmd->add_option("--fallback", fallback, "none or oracle (brute force for n <= 24)")
      ->check(CLI::IsMember({"none", "oracle"}));
  solve_cmd->add_flag("--no-timing", no_timing, "omit wall-clock timing");

  auto* check_cmd = app.add_subcommand("check-c4", "report a 4-cycle if there is one");
  graph_in.attach(check_cmd);

  auto* gen_cmd = app.add_subcommand("gen", "generate polarity, named or random graphs");
  std::string gen_kind;
  std::string gen_name;
  int gen_q = 3;
  std::size_t gen_n = 10;
  std::size_t gen_m = 15;
  std::uint64_t gen_seed = 1;
  std::string gen_format = "graph6";
  gen_cmd->add_option("kind", gen_kind, "polarity, named or random")
      ->required()
      ->check(CLI::IsMember({"polarity", "named", "random"}));
  gen_cmd->add_option("name", gen_name, "graph name for 'named'");
  gen_cmd->add_option("--q", gen_q, "prime field order");
  gen_cmd->add_option("--n", gen_n, "vertex count for 'random'");
  gen_cmd->add_option("--m", gen_m, "target edge count for 'random'");
  gen_cmd->add_option("--seed", gen_seed, "seed for 'random'");
  gen_cmd->add_option("--format", gen_format, "graph6 or edges")
      ->check(CLI::IsMember({"graph6", "edges"}));

  auto* kway_cmd = app.add_subcommand("kway", "k parts with per-part minimum degree");
  graph_in.attach(kway_cmd);
  std::vector<int> kway_s;
  kway_cmd->add_option("--s", kway_s, "comma-separated demands s_1,...,s_k")
      ->required()
      ->delimiter(',');

  auto* cycles_cmd = app.add_subcommand("cycles", "k vertex-disjoint cycles");
  graph_in.attach(cycles_cmd);
  int cycles_k = 1;
  cycles_cmd->add_option("--k", cycles_k, "number of cycles")->required();

  auto* oracle_cmd = app.add_subcommand("oracle", "brute-force feasibility (n <= 24)");
  graph_in.attach(oracle_cmd);
  demand_in.attach(oracle_cmd);

  auto* tight_cmd = app.add_subcommand("tightness", "check or search d = a + b - 2 instances");
  graph_in.attach(tight_cmd);
  demand_in.attach(tight_cmd);
  bool tight_search = false;
  std::size_t tight_limit = 16;
  tight_cmd->add_flag("--search", tight_search, "enumerate all tight splits (n <= 16)");
  tight_cmd->add_option("--limit", tight_limit, "instances listed by --search")->capture_default_str();

  auto* cross_cmd = app.add_subcommand("crosscheck", "solver against oracle on small graphs");
  std::size_t cross_n = 5;
  std::string cross_grid = "2,2;2,3;3,2;3,3";
  bool cross_eight = false;
  std::size_t stress_count = 0;
  std::uint64_t stress_seed = 1;
  cross_cmd->add_option("--n-max", cross_n, "largest vertex count")->capture_default_str();
  cross_cmd->add_option("--grid", cross_grid, "constant demand pairs 'a,b;a,b'")->capture_default_str();
  cross_cmd->add_flag("--allow-eight", cross_eight, "permit n = 8 (2^28 graphs)");
  cross_cmd->add_option("--stress", stress_count, "also run this many random instances");
  cross_cmd->add_option("--seed", stress_seed, "seed for --stress");

  auto* bench_cmd = app.add_subcommand("bench", "time solve on polarity graphs");
  std::vector<int> bench_q{3, 5, 7, 11};
  std::optional<int> bench_a;
  std::optional<int> bench_b;
  bool bench_no_timing = false;
  bench_cmd->add_option("--q", bench_q, "comma-separated primes")->delimiter(',');
  bench_cmd->add_option("--a", bench_a, "constant a (default ceil(q/2))");
  bench_cmd->add_option("--b", bench_b, "constant b (default ceil(q/2))");
  bench_cmd->add_flag("--no-timing", bench_no_timing, "omit wall-clock timing");

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : kUsage;
  }

  try {
    if (*solve_cmd) {
      Graph g = read_graph(graph_in, in);
      DemandPair d = read_demands(demand_in, g.order(), in);
      auto start = std::chrono::steady_clock::now();
      auto r = solve(g, d.a, d.b);
      SolveExtras extras;
      if (!no_timing) extras.wall_time_ms = elapsed_ms(start);
      Status status = r.certificate.status();
      if (status == Status::kDiagnostic && fallback == "oracle" && g.order() <= 24) {
        extras.fallback_attempted = true;
        extras.fallback_partition = exists_feasible(g, d.a, d.b);
        if (extras.fallback_partition) status = Status::kFeasible;
      }
      emit(out, solve_report(g, d.a, d.b, r, extras));
      err << "status: " << status_name(status);
      if (const auto* p = r.certificate.partition()) {
        err << " (|A| = " << p->a_part.size() << ", |B| = " << p->b_part.size() << ")";
      }
      if (extras.fallback_attempted) err << " [oracle fallback]";
      err << "\n";
      return exit_code(status);
    }
    if (*check_cmd) {
      Graph g = read_graph(graph_in, in);
      auto c = find_four_cycle(g);
      Json j{{"n", g.order()}, {"m", g.size()}, {"c4_free", !c}};
      if (c) j["witness"] = c->vertices;
      emit(out, j);
      err << (c ? "four-cycle found\n" : "C4-free\n");
      return c ? 2 : 0;
    }
    if (*gen_cmd) {
      Graph g;
      if (gen_kind == "polarity") {
        g = er_polarity(gen_q).graph;
      } else if (gen_kind == "named") {
        if (gen_name.empty()) throw UsageError("gen named needs a graph name");
        g = named_graph(gen_name);
      } else {
        auto r = random_c4_free(gen_n, gen_m, gen_seed);
        if (r.saturated) err << "saturated at " << r.graph.size() << " edges\n";
        g = std::move(r.graph);
      }
      out << (gen_format == "edges" ? write_edge_list(g) : encode_graph6(g) + "\n");
      return 0;
    }
    if (*kway_cmd) {
      Graph g = read_graph(graph_in, in);
      auto r = k_way(g, kway_s);
      if (auto* c = std::get_if<Certificate>(&r)) {
        emit(out, certificate_json(*c));
        return exit_code(c->status());
      }
      emit(out, Json{{"status", "feasible"}, {"parts", parts_json(std::get<0>(r))}});
      return 0;
    }
    if (*cycles_cmd) {
      Graph g = read_graph(graph_in, in);
      auto r = disjoint_cycles(g, cycles_k);
      if (auto* c = std::get_if<Certificate>(&r)) {
        emit(out, certificate_json(*c));
        return exit_code(c->status());
      }
      emit(out, Json{{"status", "feasible"}, {"cycles", parts_json(std::get<0>(r))}});
      return 0;
    }
    if (*oracle_cmd) {
      Graph g = read_graph(graph_in, in);
      DemandPair d = read_demands(demand_in, g.order(), in);
      auto sides = exists_feasible(g, d.a, d.b);
      Json j{{"feasible", sides.has_value()}};
      if (sides) {
        auto fp = to_feasible_partition(*sides);
        j["partition"] = {{"A", fp.a_part}, {"B", fp.b_part}};
      }
      emit(out, j);
      return sides ? 0 : 1;
    }
    if (*tight_cmd) {
      Graph g = read_graph(graph_in, in);
      if (tight_search) {
        std::uint64_t total = 0;
        auto found = search_tight_functions(g, tight_limit, &total);
        Json list = Json::array();
        for (const auto& t : found) list.push_back({{"a", t.a}, {"b", t.b}});
        emit(out, Json{{"total", total}, {"instances", list}});
        return 0;
      }
      DemandPair d = read_demands(demand_in, g.order(), in);
      auto inst = TightnessInstance::make(std::make_shared<const Graph>(g), d.a, d.b);
      bool tight = verify_tightness(inst);
      emit(out, Json{{"tight", tight}});
      return tight ? 0 : 1;
    }
    if (*cross_cmd) {
      CrosscheckOptions opt;
      opt.n_max = cross_n;
      opt.grid = parse_grid(cross_grid);
      opt.allow_eight = cross_eight;
      Json j{{"crosscheck", crosscheck_json(crosscheck(opt))}};
      bool clean = j["crosscheck"]["discrepancies"].empty();
      if (stress_count > 0) {
        StressOptions so;
        so.instances = stress_count;
        so.seed = stress_seed;
        j["stress"] = stress_json(stress(so));
        clean = clean && j["stress"]["discrepancies"].empty();
      }
      emit(out, j);
      return clean ? 0 : 1;
    }
    if (*bench_cmd) {
      Json rows = Json::array();
      Json timing = Json::object();
      bool all_ok = true;
      for (int q : bench_q) {
        int half = (q + 1) / 2;
        int a = bench_a.value_or(std::max(2, half));
        int b = bench_b.value_or(std::max(2, half));
        if (a < 2 || b < 2 || a + b - 1 > q) {
          throw UsageError("bench needs 2 <= a, b and a + b - 1 <= q (q = " + std::to_string(q) + ")");
        }
        auto pg = er_polarity(q);
        auto start = std::chrono::steady_clock::now();
        auto r = solve(pg.graph, DemandFn(pg.graph.order(), a), DemandFn(pg.graph.order(), b));
        double ms = elapsed_ms(start);
        bool ok = r.certificate.status() == Status::kFeasible;
        all_ok = all_ok && ok;
        rows.push_back({{"q", q},
                        {"n", pg.graph.order()},
                        {"m", pg.graph.size()},
                        {"a", a},
                        {"b", b},
                        {"status", status_name(r.certificate.status())},
                        {"plateau_episodes", r.stats.plateau_episodes},
                        {"improving_moves", r.stats.improving_moves}});
        timing["q=" + std::to_string(q)] = ms;
        err << "q = " << q << ": " << status_name(r.certificate.status()) << " in " << ms << " ms\n";
      }
      Json j{{"bench", rows}};
      if (!bench_no_timing) j["timing"] = timing;
      emit(out, j);
      return all_ok ? 0 : 4;
    }
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n" << app.help();
    return kUsage;
  } catch (const ParseError& e) {
    err << "parse error at " << e.position() << ": " << e.what() << "\n";
    return kUsage;
  } catch (const InputError& e) {
    err << "input error: " << e.what() << "\n";
    return kUsage;
  } catch (const InternalError& e) {
    err << "internal error: " << e.what() << "\n";
    return 4;
  }
  return kUsage;
}

}  // namespace c4part
