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

#include "c4part/solver.hpp"

#include <algorithm>
#include <optional>
#include <sstream>
#include <utility>

#include "c4part/error.hpp"
#include "probes.hpp"

namespace c4part {

std::string status_name(Status s) {
  switch (s) {
    case Status::kFeasible:
      return "feasible";
    case Status::kFourCycle:
      return "c4";
    case Status::kDegreeViolation:
      return "degree_violation";
    case Status::kDiagnostic:
      return "diagnostic";
  }
  return "unknown";
}

namespace detail {

VertexSet core_with(const Partition& p, Side s, Vertex add) {
  VertexSet set = p.members(s);
  set.insert(add);
  return f_core(p.graph(), set, p.demands().of(s));
}

std::optional<Improve> improving_move(const Partition& p, Vertex x) {
  Side from = p.side(x);
  if (!p.deficient(x) || p.count(from) < 2) return std::nullopt;
  if (!core_with(p, other(from), x).empty()) return std::nullopt;
  Partition next = p;
  next.move(x);
  return Improve{std::move(next), "move " + std::to_string(x) + " to " + side_name(other(from))};
}

std::optional<Improve> first_improving_move(const Partition& p) {
  for (Side s : {Side::kA, Side::kB}) {
    for (Vertex x : p.deficient_list(s)) {
      if (auto m = improving_move(p, x)) return m;
    }
  }
  return std::nullopt;
}

FeasiblePair make_pair(Side s, const VertexSet& on_s, const VertexSet& on_other) {
  return s == Side::kA ? FeasiblePair{on_s, on_other} : FeasiblePair{on_other, on_s};
}

ProbeOutcome cross_probe(const Partition& p, Vertex u, Vertex v) {
  Side su = p.side(u);
  Side sv = p.side(v);
  VertexSet into_v_side = core_with(p, sv, u);
  if (into_v_side.empty()) {
    if (auto m = improving_move(p, u)) return std::move(*m);
  }
  VertexSet into_u_side = core_with(p, su, v);
  if (into_u_side.empty()) {
    if (auto m = improving_move(p, v)) return std::move(*m);
  }
  if (into_v_side.empty() || into_u_side.empty()) {
    throw InternalError("cross probe: empty core without an admissible move");
  }
  for (Vertex x : into_u_side.to_list()) {
    if (into_v_side.contains(x)) throw InternalError("cross probe: cores overlap");
  }
  return make_pair(su, into_u_side, into_v_side);
}

std::variant<Improve, FeasiblePair, Refine, Diagnostic> swap_probe(const Partition& p, Vertex u,
                                                                   Vertex v) {
  Side su = p.side(u);
  Side sv = p.side(v);
  Partition next = p;
  next.exchange(u, v);
  bool v_side_ok = next.side_degenerate(sv);
  bool u_side_ok = next.side_degenerate(su);
  if (v_side_ok && u_side_ok) {
    auto gain = next.weight() - p.weight();
    std::string move = "exchange " + std::to_string(u) + " " + std::to_string(v);
    if (gain > 0) return Improve{std::move(next), move};
    if (gain == 0) {
      Refine r;
      r.facts.push_back("equal-weight " + move);
      r.plateau = std::move(next);
      return r;
    }
    return Diagnostic{"adjacent exchange lost weight", {describe(p)}};
  }
  // x went into the non-degenerate side; the good set there must use x.
  // Moving y alone is then either improving or yields a core avoiding x.
  auto branch = [&](Vertex x, Vertex y) -> std::optional<std::variant<Improve, FeasiblePair>> {
    Side sy = p.side(y);
    Side sx = p.side(x);
    VertexSet with_x = f_core(p.graph(), next.members(sy), p.demands().of(sy));
    if (with_x.empty()) return std::nullopt;
    if (auto m = improving_move(p, y)) return std::move(*m);
    VertexSet with_y = core_with(p, sx, y);
    if (with_y.empty() || with_y.contains(x)) return std::nullopt;
    return make_pair(sy, with_x, with_y);
  };
  for (auto [x, y] : {std::pair{u, v}, std::pair{v, u}}) {
    if (auto r = branch(x, y)) {
      if (auto* m = std::get_if<Improve>(&*r)) return std::move(*m);
      return std::get<FeasiblePair>(*r);
    }
  }
  return Diagnostic{"adjacent exchange: no branch applies", {describe(p)}};
}

std::string describe(const Partition& p) {
  std::ostringstream os;
  auto list = [&](const VertexList& xs) {
    os << '[';
    for (std::size_t i = 0; i < xs.size(); ++i) os << (i ? "," : "") << xs[i];
    os << ']';
  };
  os << "w=" << p.weight();
  if (p.order() <= 64) {
    os << " A=";
    list(p.member_list(Side::kA));
  }
  os << " A*=";
  list(p.deficient_list(Side::kA));
  os << " B*=";
  list(p.deficient_list(Side::kB));
  return os.str();
}

}  // namespace detail

std::optional<Certificate> verify_hypotheses(const Graph& g, const DemandPair& d) {
  auto n = g.order();
  if (d.a.size() != n || d.b.size() != n) throw InputError("demand length does not match graph order");
  for (std::size_t i = 0; i < n; ++i) {
    if (d.a[i] < 2 || d.b[i] < 2) {
      throw InputError("demand below 2 at vertex " + std::to_string(i));
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    auto v = static_cast<Vertex>(i);
    int need = d.a[i] + d.b[i] - 1;
    if (g.degree(v) < need) return Certificate{DegreeViolation{v, g.degree(v), need}};
  }
  if (auto c = find_four_cycle(g)) return Certificate{*c};
  return std::nullopt;
}

DemandPair normalize(const Graph& g, const DemandPair& d) {
  DemandPair out = d;
  for (std::size_t i = 0; i < g.order(); ++i) {
    out.a[i] = g.degree(static_cast<Vertex>(i)) - d.b[i] + 1;
  }
  return out;
}

std::int64_t delta_move(const Partition& p, Vertex x) { return 2 * std::int64_t{p.slack(x)} - 1; }

std::int64_t delta_swap(const Partition& p, Vertex u, Vertex v) {
  if (p.side(u) == p.side(v)) throw InputError("delta_swap needs vertices on different sides");
  std::int64_t linked = p.graph().adjacent(u, v) ? 1 : 0;
  return 2 * (std::int64_t{p.slack(u)} + p.slack(v) - 1 - linked);
}

bool verify_feasible(const Graph& g, const DemandFn& a, const DemandFn& b,
                     const std::vector<Side>& sides) {
  auto n = g.order();
  if (a.size() != n || b.size() != n || sides.size() != n) {
    throw InputError("partition / demand length does not match graph order");
  }
  std::size_t in_a = 0;
  for (Side s : sides) in_a += s == Side::kA ? 1 : 0;
  if (in_a == 0 || in_a == n) throw InputError("partition has an empty side");
  for (std::size_t i = 0; i < n; ++i) {
    int same = 0;
    for (Vertex w : g.neighbors(static_cast<Vertex>(i))) {
      same += sides[static_cast<std::size_t>(w)] == sides[i] ? 1 : 0;
    }
    if (same < (sides[i] == Side::kA ? a[i] : b[i])) return false;
  }
  return true;
}

FeasiblePartition to_feasible_partition(const std::vector<Side>& sides) {
  FeasiblePartition out;
  out.sides = sides;
  for (std::size_t i = 0; i < sides.size(); ++i) {
    (sides[i] == Side::kA ? out.a_part : out.b_part).push_back(static_cast<Vertex>(i));
  }
  return out;
}

Partition extend_pair(const Graph& g, const DemandPair& d, const FeasiblePair& pair) {
  auto n = g.order();
  VertexSet a_side = pair.a_part;
  std::vector<int> into_a(n, 0);
  for (Vertex x : a_side.to_list()) {
    for (Vertex w : g.neighbors(x)) ++into_a[static_cast<std::size_t>(w)];
  }
  auto free = [&](Vertex x) { return !a_side.contains(x) && !pair.b_part.contains(x); };
  // Joining A only raises counts, so the sweep reaches the same closure in
  // any order; ascending sweeps keep it deterministic.
  bool grew = true;
  while (grew) {
    grew = false;
    for (std::size_t i = 0; i < n; ++i) {
      auto x = static_cast<Vertex>(i);
      if (free(x) && into_a[i] >= d.a[i]) {
        a_side.insert(x);
        for (Vertex w : g.neighbors(x)) ++into_a[static_cast<std::size_t>(w)];
        grew = true;
      }
    }
  }
  std::vector<Side> sides(n, Side::kB);
  for (Vertex x : a_side.to_list()) sides[static_cast<std::size_t>(x)] = Side::kA;
  if (!verify_feasible(g, d.a, d.b, sides)) throw InternalError("extended pair is not feasible");
  return Partition(g, d, std::move(sides));
}

std::variant<Partition, FeasiblePair> initial_partition(const Graph& g, const DemandPair& d) {
  auto m = minimal_good(g, VertexSet::full(g.order()), d.a);
  if (!m) throw InternalError("vertex set is not a-good");
  VertexSet rest = m->complement();
  VertexSet core = f_core(g, rest, d.b);
  if (!core.empty()) return FeasiblePair{*m, core};
  for (Vertex x : m->to_list()) {
    if (degree_in(g, x, *m) == d.a[static_cast<std::size_t>(x)]) {
      VertexSet a_side = *m;
      a_side.erase(x);
      return Partition::from_set(g, d, a_side);
    }
  }
  throw InternalError("minimal good set has no exact-demand vertex");
}

std::variant<Partition, FeasiblePair> climb(const Partition& start, SolveStats* stats) {
  SolveStats local;
  SolveStats& st = stats ? *stats : local;
  Partition p = start;
  const Graph& g = p.graph();
  // A blocked move of x into side t stays blocked until a vertex of its
  // witness core leaves t.
  std::vector<std::optional<VertexSet>> witness[2] = {
      std::vector<std::optional<VertexSet>>(p.order()),
      std::vector<std::optional<VertexSet>>(p.order())};
  auto forget_all = [&] {
    for (auto& w : witness) std::fill(w.begin(), w.end(), std::nullopt);
  };
  auto try_move = [&](Vertex x) -> bool {
    Side from = p.side(x);
    Side to = other(from);
    auto xi = static_cast<std::size_t>(x);
    if (p.count(from) < 2 || witness[index(to)][xi]) return false;
    VertexSet core = detail::core_with(p, to, x);
    if (!core.empty()) {
      witness[index(to)][xi] = std::move(core);
      return false;
    }
    p.move(x);
    witness[0][xi].reset();
    witness[1][xi].reset();
    for (auto& w : witness[index(from)]) {
      if (w && w->contains(x)) w.reset();
    }
    return true;
  };
  for (;;) {
    ++st.iterations;
    bool moved = false;
    for (Side s : {Side::kA, Side::kB}) {
      for (Vertex x : p.deficient_list(s)) {
        if ((moved = try_move(x))) break;
      }
      if (moved) break;
    }
    if (moved) {
      ++st.improving_moves;
      continue;
    }
    auto a_star = p.deficient_list(Side::kA);
    auto b_star = p.deficient_list(Side::kB);
    for (Vertex u : a_star) {
      for (Vertex v : b_star) {
        if (g.adjacent(u, v)) continue;
        ++st.probes;
        auto r = detail::cross_probe(p, u, v);
        if (auto* pair = std::get_if<FeasiblePair>(&r)) return *pair;
        throw InternalError("cross probe at a blocked state did not give a pair");
      }
    }
    for (Vertex u : a_star) {
      for (Vertex v : b_star) {
        if (p.slack(u) + p.slack(v) < 3) continue;
        ++st.probes;
        auto r = detail::swap_probe(p, u, v);
        if (auto* pair = std::get_if<FeasiblePair>(&r)) return *pair;
        if (auto* m = std::get_if<Improve>(&r)) {
          forget_all();
          p = std::move(m->partition);
          ++st.improving_moves;
          moved = true;
          break;
        }
        throw InternalError("positive-gain exchange did not resolve");
      }
      if (moved) break;
    }
    if (!moved) return p;
  }
}

ProbeOutcome cross_pair_probe(const Partition& p, Vertex u, Vertex v) {
  if (p.side(u) == p.side(v) || !p.deficient(u) || !p.deficient(v)) {
    throw InputError("cross pair probe needs deficient vertices on opposite sides");
  }
  if (p.graph().adjacent(u, v)) throw InputError("cross pair probe needs non-adjacent vertices");
  return detail::cross_probe(p, u, v);
}

ProbeOutcome star_structure(const Partition& p) {
  const Graph& g = p.graph();
  auto a_star = p.deficient_list(Side::kA);
  auto b_star = p.deficient_list(Side::kB);
  if (a_star.empty() || b_star.empty()) throw InputError("star structure needs both deficient sets");
  if (a_star.size() >= 2 && b_star.size() >= 2) {
    FourCycle c{{a_star[0], b_star[0], a_star[1], b_star[1]}};
    if (is_four_cycle(g, c)) return c;
    throw InputError("deficient sets are not complete bipartite");
  }
  Side single = a_star.size() == 1 ? Side::kA : Side::kB;
  for (Side s : {Side::kA, Side::kB}) {
    const auto& star = s == Side::kA ? a_star : b_star;
    const auto& opposite = s == Side::kA ? b_star : a_star;
    VertexSet in_star(g.order(), std::span<const Vertex>(star));
    for (std::size_t i = 0; i < g.order(); ++i) {
      auto w = static_cast<Vertex>(i);
      if (in_star.contains(w)) continue;
      VertexList hits;
      for (Vertex x : g.neighbors(w)) {
        if (in_star.contains(x)) hits.push_back(x);
        if (hits.size() == 2) break;
      }
      if (hits.size() < 2) continue;
      for (Vertex o : opposite) {
        if (o == w) continue;
        FourCycle c{{hits[0], w, hits[1], o}};
        if (is_four_cycle(g, c)) return c;
      }
    }
  }
  Refine r;
  r.singleton_side = single;
  r.facts.push_back("deficient sets complete bipartite");
  r.facts.push_back(std::string("singleton deficient side ") + side_name(single));
  r.facts.push_back("outside vertices see at most one deficient vertex per side");
  return r;
}

ProbeOutcome plateau_swap(const Partition& p, Vertex u, Vertex v) {
  if (p.side(u) == p.side(v) || !p.deficient(u) || !p.deficient(v)) {
    throw InputError("plateau swap needs deficient vertices on opposite sides");
  }
  if (!p.graph().adjacent(u, v)) throw InputError("plateau swap needs adjacent vertices");
  auto r = detail::swap_probe(p, u, v);
  return std::visit(
      [](auto&& x) -> ProbeOutcome {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, Diagnostic>) {
          throw InternalError(x.reason);
        } else {
          return std::move(x);
        }
      },
      std::move(r));
}

namespace {

// Alternates climb and plateau episodes from `start` (an ab-partition over
// the normalized demands d) until a certificate emerges.
void search_from(const Graph& g, const DemandFn& a, const DemandFn& b, const DemandPair& d,
                 Partition p, SolveResult& out, std::vector<std::string>& trace) {
  auto finish = [&](const Partition& q) {
    if (verify_feasible(g, a, b, q.sides())) {
      out.certificate = Certificate{to_feasible_partition(q.sides())};
    } else {
      out.certificate = Certificate{Diagnostic{"partition fails the original demands", trace}};
    }
  };
  for (;;) {
    auto climbed = climb(p, &out.stats);
    if (auto* pair = std::get_if<FeasiblePair>(&climbed)) {
      trace.push_back("climb pair");
      return finish(extend_pair(g, d, *pair));
    }
    p = std::get<Partition>(std::move(climbed));
    trace.push_back("blocked " + detail::describe(p));
    auto r = plateau_schedule(p, &out.stats, &trace);
    if (auto* cert = std::get_if<Certificate>(&r)) {
      if (const auto* fp = cert->partition()) return finish(Partition(g, d, fp->sides));
      out.certificate = std::move(*cert);
      if (auto* diag = std::get_if<Diagnostic>(&out.certificate.value)) diag->trace = trace;
      return;
    }
    auto& im = std::get<Improve>(r);
    if (im.partition.weight() <= p.weight() || !im.partition.is_ab_partition()) {
      out.certificate = Certificate{Diagnostic{"plateau improve is not an improvement", trace}};
      return;
    }
    trace.push_back("improve " + im.move);
    p = std::move(im.partition);
  }
}

}  // namespace

SolveResult solve(const Graph& g, const DemandFn& a, const DemandFn& b) {
  SolveResult out;
  DemandPair given{a, b};
  if (auto c = verify_hypotheses(g, given)) {
    out.certificate = *c;
    return out;
  }
  DemandPair d = normalize(g, given);
  std::vector<std::string> trace;
  try {
    auto init = initial_partition(g, d);
    if (auto* pair = std::get_if<FeasiblePair>(&init)) {
      trace.push_back("initial pair");
      Partition full = extend_pair(g, d, *pair);
      out.certificate = verify_feasible(g, a, b, full.sides())
                            ? Certificate{to_feasible_partition(full.sides())}
                            : Certificate{Diagnostic{"partition fails the original demands", trace}};
      out.trace = std::move(trace);
      return out;
    }
    Partition p = std::get<Partition>(std::move(init));
    trace.push_back("initial " + detail::describe(p));
    search_from(g, a, b, d, std::move(p), out, trace);
  } catch (const InternalError& e) {
    out.certificate = Certificate{Diagnostic{e.what(), trace}};
  }
  out.trace = std::move(trace);
  return out;
}

SolveResult solve_from(const Graph& g, const DemandFn& a, const DemandFn& b,
                       const std::vector<Side>& start) {
  SolveResult out;
  DemandPair given{a, b};
  if (auto c = verify_hypotheses(g, given)) {
    out.certificate = *c;
    return out;
  }
  DemandPair d = normalize(g, given);
  Partition p(g, d, start);
  if (!p.is_ab_partition()) throw InputError("start is not an ab-partition for the normalized demands");
  std::vector<std::string> trace{"start " + detail::describe(p)};
  try {
    search_from(g, a, b, d, std::move(p), out, trace);
  } catch (const InternalError& e) {
    out.certificate = Certificate{Diagnostic{e.what(), trace}};
  }
  out.trace = std::move(trace);
  return out;
}

}  // namespace c4part
