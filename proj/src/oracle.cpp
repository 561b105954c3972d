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


#include "c4part/oracle.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <functional>
#include <sstream>

#include "c4part/constructions.hpp"
#include "c4part/error.hpp"
#include "c4part/kernels.hpp"
#include "c4part/solver.hpp"

namespace c4part {

std::vector<Side> sides_from_mask(std::size_t n, std::uint64_t mask) {
  std::vector<Side> out(n, Side::kB);
  for (std::size_t i = 0; i < n; ++i) {
    if ((mask >> i) & 1u) out[i] = Side::kA;
  }
  return out;
}

std::optional<std::vector<Side>> exists_feasible(const Graph& g, const DemandFn& a,
                                                 const DemandFn& b) {
  auto mask = kernels::parallel::first_feasible_mask(g, a, b);
  if (!mask) return std::nullopt;
  return sides_from_mask(g.order(), *mask);
}

TightnessInstance TightnessInstance::make(std::shared_ptr<const Graph> g, DemandFn a, DemandFn b) {
  if (!g) throw InputError("tightness instance needs a graph");
  auto n = g->order();
  if (a.size() != n || b.size() != n) throw InputError("demand length does not match graph order");
  TightnessInstance out;
  out.slack_check.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i] < 2 || b[i] < 2) throw InputError("demand below 2 at vertex " + std::to_string(i));
    out.slack_check[i] = g->degree(static_cast<Vertex>(i)) - a[i] - b[i] + 2;
    if (out.slack_check[i] != 0) {
      throw InputError("vertex " + std::to_string(i) + " has d(x) != a(x) + b(x) - 2");
    }
  }
  out.graph = std::move(g);
  out.a = std::move(a);
  out.b = std::move(b);
  return out;
}

bool verify_tightness(const TightnessInstance& inst) {
  auto checked = TightnessInstance::make(inst.graph, inst.a, inst.b);
  return !exists_feasible(*checked.graph, checked.a, checked.b).has_value();
}

std::vector<TightnessInstance> search_tight_functions(const Graph& g, std::size_t limit,
                                                      std::uint64_t* total) {
  auto n = g.order();
  if (n > 16) throw InputError("tight function search limited to n <= 16");
  if (total) *total = 0;
  std::vector<TightnessInstance> out;
  if (n < 2) return out;
  for (std::size_t i = 0; i < n; ++i) {
    if (g.degree(static_cast<Vertex>(i)) < 2) return out;
  }
  auto shared = std::make_shared<const Graph>(g);
  std::size_t masks = std::size_t{1} << n;
  std::size_t words = (masks + 63) / 64;
  using Bits = std::vector<std::uint64_t>;
  std::vector<std::uint32_t> rows(n, 0);
  for (std::size_t v = 0; v < n; ++v) {
    for (Vertex w : g.neighbors(static_cast<Vertex>(v))) rows[v] |= 1u << w;
  }
  // consistent[x][a - 2]: partitions where x meets its side's demand under
  // a(x) = a; on B that is d_A(x) <= a - 2.
  std::vector<std::vector<Bits>> consistent(n);
  for (std::size_t x = 0; x < n; ++x) {
    int d = g.degree(static_cast<Vertex>(x));
    consistent[x].assign(static_cast<std::size_t>(d - 1), Bits(words, 0));
    for (std::size_t m = 0; m < masks; ++m) {
      int into_a = std::popcount(rows[x] & static_cast<std::uint32_t>(m));
      bool in_a = (m >> x) & 1u;
      for (int a = 2; a <= d; ++a) {
        if (in_a ? into_a >= a : into_a <= a - 2) {
          consistent[x][static_cast<std::size_t>(a - 2)][m / 64] |= std::uint64_t{1} << (m % 64);
        }
      }
    }
  }
  Bits alive(words, ~std::uint64_t{0});
  if (masks % 64) alive.back() = (std::uint64_t{1} << (masks % 64)) - 1;
  alive[0] &= ~std::uint64_t{1};
  alive[(masks - 1) / 64] &= ~(std::uint64_t{1} << ((masks - 1) % 64));

  DemandFn a(n, 2);
  std::function<void(std::size_t, const Bits&, bool)> walk = [&](std::size_t x, const Bits& live,
                                                                 bool dead) {
    if (x == n) {
      if (!dead) return;
      if (total) ++*total;
      if (out.size() < limit) {
        DemandFn b(n);
        for (std::size_t i = 0; i < n; ++i) b[i] = g.degree(static_cast<Vertex>(i)) + 2 - a[i];
        out.push_back(TightnessInstance::make(shared, a, b));
      }
      return;
    }
    int d = g.degree(static_cast<Vertex>(x));
    Bits next(dead ? 0 : words);
    for (int v = 2; v <= d; ++v) {
      a[x] = v;
      if (dead) {
        walk(x + 1, next, true);
        continue;
      }
      bool any = false;
      const auto& c = consistent[x][static_cast<std::size_t>(v - 2)];
      for (std::size_t w = 0; w < words; ++w) {
        next[w] = live[w] & c[w];
        any = any || next[w] != 0;
      }
      walk(x + 1, next, !any);
    }
  };
  walk(0, alive, false);
  return out;
}

namespace {

struct ChunkResult {
  std::vector<std::uint64_t> c4_free;
  std::vector<CrosscheckEntry> entries;
  std::vector<Discrepancy> discrepancies;
};

}  // namespace

CrosscheckReport crosscheck(const CrosscheckOptions& opt) {
  std::size_t cap = opt.allow_eight ? 8 : 7;
  if (opt.n_max > cap) {
    throw InputError("crosscheck limited to n <= 7 (n = 8 needs the override)");
  }
  int need = 1 << 20;
  for (auto [a, b] : opt.grid) {
    if (a < 2 || b < 2) throw InputError("crosscheck demands must be at least 2");
    need = std::min(need, a + b - 1);
  }
  CrosscheckReport report;
  for (auto [a, b] : opt.grid) report.entries.push_back({a, b, 0, 0, 0, 0});
  report.c4_free_graphs.assign(opt.n_max, 0);

  for (std::size_t n = 1; n <= opt.n_max; ++n) {
    std::uint64_t count = small_graph_count(n);
    std::uint64_t chunk = std::max<std::uint64_t>(1, count / 256);
    auto chunks = static_cast<std::int64_t>((count + chunk - 1) / chunk);
    std::vector<ChunkResult> results(static_cast<std::size_t>(chunks));
#pragma omp parallel for schedule(dynamic)
    for (std::int64_t c = 0; c < chunks; ++c) {
      auto& r = results[static_cast<std::size_t>(c)];
      r.entries = report.entries;
      for (auto& e : r.entries) e = {e.a, e.b, 0, 0, 0, 0};
      r.c4_free.assign(1, 0);
      auto begin = static_cast<std::uint64_t>(c) * chunk;
      enumerate_small_range(n, {true, 0}, begin, begin + chunk,
                            [&](std::uint64_t, const Graph& g) {
        ++r.c4_free[0];
        if (g.order() == 0 || g.min_degree() < need) return;
        for (auto& e : r.entries) {
          if (g.min_degree() < e.a + e.b - 1) continue;
          ++e.instances;
          DemandFn a(n, e.a);
          DemandFn b(n, e.b);
          auto solved = solve(g, a, b);
          auto oracle = exists_feasible(g, a, b);
          e.plateau_episodes += static_cast<std::uint64_t>(solved.stats.plateau_episodes);
          if (oracle) ++e.oracle_feasible;
          std::string reason;
          if (const auto* fp = solved.certificate.partition()) {
            ++e.solver_feasible;
            if (!verify_feasible(g, a, b, fp->sides)) reason = "solver partition fails verification";
            if (!oracle) reason = "oracle finds no feasible partition";
          } else {
            reason = "solver status " + status_name(solved.certificate.status());
          }
          if (!reason.empty()) {
            Discrepancy d{n, g.edges(), e.a, e.b, reason, {}, {}, {}, {}};
            if (const auto* diag = solved.certificate.diagnostic()) d.trace = diag->trace;
            r.discrepancies.push_back(std::move(d));
          }
        }
      });
    }
    for (auto& r : results) {
      report.c4_free_graphs[n - 1] += r.c4_free[0];
      for (std::size_t i = 0; i < r.entries.size(); ++i) {
        auto& e = report.entries[i];
        e.instances += r.entries[i].instances;
        e.solver_feasible += r.entries[i].solver_feasible;
        e.oracle_feasible += r.entries[i].oracle_feasible;
        e.plateau_episodes += r.entries[i].plateau_episodes;
      }
      for (auto& d : r.discrepancies) report.discrepancies.push_back(std::move(d));
    }
  }
  return report;
}

namespace {

// Greedy ab-partition over a random vertex order, or nullopt.
std::optional<std::vector<Side>> random_ab_partition(const Graph& g, const DemandPair& d, Rng& rng) {
  auto n = g.order();
  VertexList order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = static_cast<Vertex>(i);
  for (std::size_t i = n; i > 1; --i) std::swap(order[i - 1], order[uniform_below(rng, i)]);
  VertexSet a_side(n);
  VertexSet b_side(n);
  for (Vertex x : order) {
    a_side.insert(x);
    if (is_degenerate(g, a_side, d.a)) continue;
    a_side.erase(x);
    b_side.insert(x);
    if (!is_degenerate(g, b_side, d.b)) return std::nullopt;
  }
  if (a_side.empty() || b_side.empty()) return std::nullopt;
  std::vector<Side> sides(n, Side::kB);
  for (Vertex x : a_side.to_list()) sides[static_cast<std::size_t>(x)] = Side::kA;
  return sides;
}

}  // namespace

std::string trace_event(const std::string& line) {
  std::istringstream is(line);
  std::vector<std::string> words;
  std::string w;
  while (is >> w) words.push_back(w);
  if (!words.empty() && words[0] == "primary") {
    auto against = std::find(words.begin(), words.end(), "against");
    if (words.size() > 2 && against != words.end() && against + 2 < words.end()) {
      return "primary " + words[2] + " / " + *(against + 2);
    }
  }
  std::string out;
  for (const auto& word : words) {
    if (std::isdigit(static_cast<unsigned char>(word[0])) || word.find('=') != std::string::npos ||
        word.find('[') != std::string::npos) {
      break;
    }
    out += (out.empty() ? "" : " ") + word;
  }
  return out;
}

StressReport stress(const StressOptions& opt) {
  if (opt.n_min < 4 || opt.n_max < opt.n_min) throw InputError("stress needs 4 <= n_min <= n_max");
  Rng rng(opt.seed);
  StressReport report;
  std::size_t attempts = 0;
  while (report.instances < opt.instances) {
    if (++attempts > 100 * opt.instances + 1000) break;
    std::size_t n = opt.n_min + uniform_below(rng, opt.n_max - opt.n_min + 1);
    Graph base = random_c4_free(n, n * n, rng()).graph;
    VertexSet core = f_core(base, VertexSet::full(n), DemandFn(n, 3));
    if (core.size() < 4) continue;
    Graph g = induced(base, core).graph;
    auto m = g.order();
    DemandFn a(m);
    DemandFn b(m);
    for (std::size_t i = 0; i < m; ++i) {
      int d = g.degree(static_cast<Vertex>(i));
      a[i] = 2 + static_cast<int>(uniform_below(rng, static_cast<std::uint64_t>(d - 2)));
      b[i] = 2 + static_cast<int>(uniform_below(rng, static_cast<std::uint64_t>(d - a[i])));
    }
    ++report.instances;
    auto record = [&](const SolveResult& r, const char* what, const std::vector<Side>& start) {
      report.plateau_episodes += static_cast<std::uint64_t>(r.stats.plateau_episodes);
      report.plateau_exchanges += static_cast<std::uint64_t>(r.stats.plateau_exchanges);
      for (const auto& line : r.trace) ++report.events[trace_event(line)];
      const auto* fp = r.certificate.partition();
      std::string reason;
      if (!fp) {
        reason = std::string(what) + ": status " + status_name(r.certificate.status());
        if (const auto* d = r.certificate.diagnostic()) reason += " (" + d->reason + ")";
      } else if (!verify_feasible(g, a, b, fp->sides)) {
        reason = std::string(what) + ": partition fails verification";
      }
      if (reason.empty()) return;
      Discrepancy d{m, g.edges(), 0, 0, reason, a, b, start, {}};
      if (const auto* diag = r.certificate.diagnostic()) d.trace = diag->trace;
      report.discrepancies.push_back(std::move(d));
    };
    record(solve(g, a, b), "solve", {});
    if (opt.random_starts) {
      DemandPair normal = normalize(g, DemandPair{a, b});
      for (int tries = 0; tries < 8; ++tries) {
        if (auto start = random_ab_partition(g, normal, rng)) {
          record(solve_from(g, a, b, *start), "solve_from", *start);
          break;
        }
      }
    }
    if (m <= 24) {
      ++report.oracle_checked;
      if (!exists_feasible(g, a, b)) {
        report.discrepancies.push_back(
            {m, g.edges(), 0, 0, "oracle finds no feasible partition", a, b, {}, {}});
      }
    }
  }
  return report;
}

}  // namespace c4part
