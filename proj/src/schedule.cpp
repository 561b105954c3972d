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

// Plateau schedule. Names follow the witness slots of Configuration: on the
// primary side P the slots are u1, u, u2, u_prime; on the opposite side Q
// they are read as v1, v, v2, v_prime.

#include <algorithm>
#include <initializer_list>
#include <set>
#include <sstream>
#include <utility>

#include "c4part/error.hpp"
#include "c4part/solver.hpp"
#include "probes.hpp"

namespace c4part {

std::string config_kind_name(ConfigKind k) {
  switch (k) {
    case ConfigKind::kSharedAnchor:
      return "shared-anchor";
    case ConfigKind::kDistinctAnchors:
      return "distinct-anchors";
    case ConfigKind::kPath:
      return "path";
    case ConfigKind::kTriangle:
      return "triangle";
    case ConfigKind::kPathDistinct:
      return "path-distinct";
  }
  return "unknown";
}

namespace {

using Step = std::variant<Improve, FeasiblePair, FourCycle, Diagnostic>;

constexpr int kMaxExchanges = 8;

// P*, P \ P* and the diamond set of one side.
struct SideView {
  Side side;
  VertexList star;
  VertexSet star_set;
  VertexList rest;
  VertexSet diamond_set;
  VertexList diamond;
  std::vector<int> rest_degree;  // d_{P \ P*}, valid on rest

  SideView(const Partition& p, Side s)
      : side(s), star_set(p.order()), diamond_set(p.order()), rest_degree(p.order(), 0) {
    const Graph& g = p.graph();
    star = p.deficient_list(s);
    for (Vertex x : star) star_set.insert(x);
    for (Vertex x : p.member_list(s)) {
      if (!star_set.contains(x)) rest.push_back(x);
    }
    for (Vertex x : rest) {
      int d = 0;
      for (Vertex w : g.neighbors(x)) {
        d += p.side(w) == s && !star_set.contains(w) ? 1 : 0;
      }
      rest_degree[static_cast<std::size_t>(x)] = d;
      if (d <= p.demand(x, s) - 1) {
        diamond.push_back(x);
        diamond_set.insert(x);
      }
    }
  }

  VertexList anchors(const Graph& g, Vertex x) const {
    VertexList out;
    for (Vertex w : g.neighbors(x)) {
      if (star_set.contains(w)) out.push_back(w);
    }
    return out;
  }
};

std::optional<FourCycle> cycle_near(const Graph& g, VertexList witnesses) {
  std::sort(witnesses.begin(), witnesses.end());
  witnesses.erase(std::unique(witnesses.begin(), witnesses.end()), witnesses.end());
  witnesses.erase(std::remove(witnesses.begin(), witnesses.end(), Vertex{-1}), witnesses.end());
  for (std::size_t i = 0; i < witnesses.size(); ++i) {
    for (std::size_t j = i + 1; j < witnesses.size(); ++j) {
      auto common = common_neighbors(g, witnesses[i], witnesses[j]);
      if (common.size() >= 2) return FourCycle{{witnesses[i], common[0], witnesses[j], common[1]}};
    }
  }
  return std::nullopt;
}

std::string config_text(const Configuration& c) {
  std::ostringstream os;
  os << side_name(c.side) << ' ' << config_kind_name(c.kind) << " u1=" << c.u1 << " u=" << c.u
     << " u2=" << c.u2 << " u'=" << c.u_prime;
  return os.str();
}

ConfigurationResult detect(const Partition& p, Side s) {
  const Graph& g = p.graph();
  SideView view(p, s);
  auto diagnose = [&](const std::string& why, VertexList near) -> ConfigurationResult {
    for (Vertex x : p.deficient_list(other(s))) near.push_back(x);
    for (Vertex x : view.star) near.push_back(x);
    if (auto c = cycle_near(g, near)) return *c;
    return Diagnostic{std::string("configuration ") + side_name(s) + ": " + why, {detail::describe(p)}};
  };
  if (view.rest.empty()) {
    auto opposite = p.deficient_list(other(s));
    if (opposite.size() != 1 || p.count(other(s)) < 2) return diagnose("side is all deficient", {});
    VertexSet grown = p.members(s);
    grown.insert(opposite[0]);
    VertexSet shrunk = p.members(other(s));
    shrunk.erase(opposite[0]);
    if (f_core(g, grown, p.demands().of(s)) == grown &&
        f_core(g, shrunk, p.demands().of(other(s))) == shrunk) {
      return detail::make_pair(s, grown, shrunk);
    }
    return diagnose("absorbing the opposite deficient vertex fails", opposite);
  }
  if (view.rest.size() < 2) return diagnose("one non-deficient vertex", view.rest);
  for (Vertex x : view.diamond) {
    if (view.anchors(g, x).size() != 1 || p.own_degree(x) != p.own_demand(x)) {
      return diagnose("diamond vertex " + std::to_string(x) + " is irregular", {x});
    }
  }
  Configuration c;
  c.side = s;
  if (view.diamond.size() >= 2) {
    c.u1 = view.diamond[0];
    c.u2 = view.diamond[1];
    c.u = view.anchors(g, c.u1)[0];
    c.u_prime = view.anchors(g, c.u2)[0];
    c.kind = c.u == c.u_prime ? ConfigKind::kSharedAnchor : ConfigKind::kDistinctAnchors;
    return c;
  }
  if (view.diamond.empty()) return diagnose("no diamond vertex", {});
  c.u1 = view.diamond[0];
  c.u = view.anchors(g, c.u1)[0];
  for (Vertex y : g.neighbors(c.u1)) {
    if (p.side(y) != s || view.star_set.contains(y)) continue;
    if (view.rest_degree[static_cast<std::size_t>(y)] != p.demand(y, s)) continue;
    c.u2 = y;
    auto anchors = view.anchors(g, y);
    if (anchors.empty()) {
      c.kind = ConfigKind::kPath;
    } else if (anchors.size() == 1 && anchors[0] == c.u) {
      c.kind = ConfigKind::kTriangle;
      c.u_prime = c.u;
    } else if (anchors.size() == 1) {
      c.kind = ConfigKind::kPathDistinct;
      c.u_prime = anchors[0];
    } else {
      return diagnose("exact neighbour sees two deficient vertices", {c.u1, y});
    }
    return c;
  }
  return diagnose("diamond vertex has no exact neighbour", {c.u1, c.u});
}

struct Chain {
  Side side;  // primary side before the double exchange
  Vertex u, u1, v, v1, v2, v_prime;
};

class Schedule {
 public:
  Schedule(const Partition& entry, SolveStats& stats, std::vector<std::string>& trace)
      : entry_(entry), g_(entry.graph()), stats_(stats), trace_(trace) {}

  Step run() {
    visited_.insert(entry_.sides());
    note("episode " + detail::describe(entry_));
    if (auto s = entry_checks(entry_)) return std::move(*s);
    auto ca = configure(entry_, Side::kA);
    if (auto* s = std::get_if<Step>(&ca)) return std::move(*s);
    auto cb = configure(entry_, Side::kB);
    if (auto* s = std::get_if<Step>(&cb)) return std::move(*s);
    return dispatch(entry_, std::get<Configuration>(ca), std::get<Configuration>(cb), nullptr);
  }

 private:
  void note(std::string line) { trace_.push_back(std::move(line)); }
  bool adj(Vertex x, Vertex y) const { return g_.adjacent(x, y); }

  Step fail(const std::string& why, VertexList near) {
    if (auto c = cycle_near(g_, std::move(near))) {
      note("cycle near failed expectation: " + why);
      return *c;
    }
    note("diagnostic: " + why);
    return Diagnostic{why, {}};
  }

  Step cycle(const FourCycle& c, VertexList near) {
    if (is_four_cycle(g_, c)) {
      note("four-cycle " + std::to_string(c.vertices[0]) + " " + std::to_string(c.vertices[1]) +
           " " + std::to_string(c.vertices[2]) + " " + std::to_string(c.vertices[3]));
      return c;
    }
    for (Vertex x : c.vertices) near.push_back(x);
    return fail("expected four-cycle is not one", std::move(near));
  }

  static Step from_probe(ProbeOutcome r) {
    if (auto* m = std::get_if<Improve>(&r)) return std::move(*m);
    if (auto* pr = std::get_if<FeasiblePair>(&r)) return *pr;
    if (auto* c = std::get_if<FourCycle>(&r)) return *c;
    return Diagnostic{"probe refined where a resolution was expected", {}};
  }

  std::variant<Configuration, Step> configure(const Partition& p, Side s) {
    auto r = detect(p, s);
    if (auto* c = std::get_if<Configuration>(&r)) {
      note("config " + config_text(*c));
      return *c;
    }
    if (auto* pr = std::get_if<FeasiblePair>(&r)) {
      note(std::string("all-deficient side ") + side_name(s) + " absorbs the opposite vertex");
      return Step{*pr};
    }
    if (auto* c = std::get_if<FourCycle>(&r)) return Step{*c};
    note("diagnostic: " + std::get<Diagnostic>(r).reason);
    return Step{std::get<Diagnostic>(r)};
  }

  // Improving moves, non-adjacent deficient pairs, positive-gain exchanges
  // and the star structure; nullopt when the partition is clean.
  std::optional<Step> entry_checks(const Partition& p) {
    if (auto m = detail::first_improving_move(p)) {
      note("improving " + m->move);
      return Step{std::move(*m)};
    }
    auto a_star = p.deficient_list(Side::kA);
    auto b_star = p.deficient_list(Side::kB);
    for (Vertex u : a_star) {
      for (Vertex v : b_star) {
        if (adj(u, v)) continue;
        ++stats_.probes;
        note("cross probe " + std::to_string(u) + " " + std::to_string(v));
        return from_probe(detail::cross_probe(p, u, v));
      }
    }
    for (Vertex u : a_star) {
      for (Vertex v : b_star) {
        if (p.slack(u) + p.slack(v) < 3) continue;
        ++stats_.probes;
        note("gain exchange " + std::to_string(u) + " " + std::to_string(v));
        auto r = detail::swap_probe(p, u, v);
        if (auto* m = std::get_if<Improve>(&r)) return Step{std::move(*m)};
        if (auto* pr = std::get_if<FeasiblePair>(&r)) return Step{*pr};
        if (auto* d = std::get_if<Diagnostic>(&r)) return Step{*d};
        return fail("positive-gain exchange stayed level", {u, v});
      }
    }
    auto star = star_structure(p);
    if (auto* c = std::get_if<FourCycle>(&star)) return cycle(*c, {});
    return std::nullopt;
  }

  // Applies the exchanges and checks that the result is again a
  // maximal-family partition: same weight, both sides degenerate.
  std::variant<Partition, Step> exchange(const Partition& p,
                                         std::initializer_list<std::pair<Vertex, Vertex>> swaps) {
    Partition next = p;
    std::string text = "exchange";
    VertexList near;
    for (auto [x, y] : swaps) {
      if (next.side(x) == next.side(y)) return fail("exchange within one side", {x, y});
      next.exchange(x, y);
      text += " " + std::to_string(x) + "<->" + std::to_string(y);
      near.push_back(x);
      near.push_back(y);
    }
    ++stats_.plateau_exchanges;
    if (++exchanges_ > kMaxExchanges) return fail("exchange budget exhausted", near);
    note(text + " " + detail::describe(next));
    if (next.weight() == p.weight() && next.is_ab_partition()) {
      if (!visited_.insert(next.sides()).second) return fail("plateau partition revisited", near);
      return next;
    }
    return recover(p, next, near);
  }

  Step recover(const Partition& before, const Partition& after, const VertexList& near) {
    if (after.weight() > before.weight() && after.is_ab_partition()) {
      note("exchange improved the weight");
      return Improve{after, "plateau exchange"};
    }
    for (Side s : {Side::kA, Side::kB}) {
      if (after.count(s) == 0 || after.side_degenerate(s)) continue;
      VertexSet good = f_core(g_, after.members(s), after.demands().of(s));
      VertexSet rest = good.complement();
      VertexSet other_good = f_core(g_, rest, after.demands().of(other(s)));
      if (!other_good.empty()) {
        note(std::string("exchange made side ") + side_name(s) + " good; pair found");
        return detail::make_pair(s, good, other_good);
      }
    }
    if (auto m = detail::first_improving_move(before)) {
      note("improving " + m->move + " before the exchange");
      return std::move(*m);
    }
    return fail("exchange left the maximal family", near);
  }

  // Cross probe on x, y in p when they are the expected deficient pair;
  // the given four-cycle when they are adjacent.
  Step probe(const Partition& p, Vertex x, Vertex y, const FourCycle& if_adjacent) {
    if (adj(x, y)) return cycle(if_adjacent, {});
    if (p.side(x) == p.side(y) || !p.deficient(x) || !p.deficient(y)) {
      VertexList near(if_adjacent.vertices.begin(), if_adjacent.vertices.end());
      return fail("probe pair " + std::to_string(x) + " " + std::to_string(y) + " not deficient",
                  near);
    }
    ++stats_.probes;
    note("probe " + std::to_string(x) + " " + std::to_string(y));
    return from_probe(detail::cross_probe(p, x, y));
  }

  // x1 ~ x ~ y ~ y1 with x1 !~ y and y1 !~ x: exchange x and y, then x1 and
  // y1 are deficient on opposite sides.
  Step special_path(const Partition& p, Vertex x1, Vertex x, Vertex y, Vertex y1) {
    note("special path " + std::to_string(x1) + " " + std::to_string(x) + " " +
         std::to_string(y) + " " + std::to_string(y1));
    if (!adj(x1, x) || !adj(x, y) || !adj(y, y1) || adj(x1, y) || adj(y1, x)) {
      return fail("not a special path", {x1, x, y, y1});
    }
    auto next = exchange(p, {{x, y}});
    if (auto* s = std::get_if<Step>(&next)) return std::move(*s);
    return probe(std::get<Partition>(next), x1, y1, FourCycle{{x1, x, y, y1}});
  }

  Step dispatch(const Partition& p, const Configuration& ca, const Configuration& cb,
                const Chain* chain) {
    Vertex u1 = ca.u1, u = ca.u, v = cb.u, v1 = cb.u1;
    if (!adj(u, v)) return fail("deficient vertices not adjacent", {u, v});
    bool left = adj(u1, v);
    bool right = adj(v1, u);
    if (!left && !right) return special_path(p, u1, u, v, v1);
    if (left && right) return cycle(FourCycle{{u1, v, v1, u}}, {});
    return left ? primary(p, ca, cb, chain) : primary(p, cb, ca, chain);
  }

  // Orientation: P.u1 ~ Q.u and Q.u1 !~ P.u.
  Step primary(const Partition& p, const Configuration& P, const Configuration& Q,
               const Chain* chain) {
    note("primary " + config_text(P) + " against " + config_text(Q));
    switch (P.kind) {
      case ConfigKind::kTriangle:
        return cycle(FourCycle{{P.u2, P.u, Q.u, P.u1}}, {});
      case ConfigKind::kPathDistinct:
        return cycle(FourCycle{{P.u1, P.u2, P.u_prime, Q.u}}, {});
      case ConfigKind::kSharedAnchor:
        return shared_anchor(p, P.u1, P.u2, P.u, Q.u, Q.u1);
      case ConfigKind::kDistinctAnchors:
        return distinct_anchors(p, P, Q, chain);
      case ConfigKind::kPath:
        return path_case(p, P, Q, chain);
    }
    return fail("unknown configuration", {});
  }

  Step shared_anchor(const Partition& p, Vertex u1, Vertex u2, Vertex u, Vertex v, Vertex v1) {
    if (adj(u2, v)) return cycle(FourCycle{{u1, u, u2, v}}, {});
    return special_path(p, u2, u, v, v1);
  }

  Step distinct_anchors(const Partition& p, const Configuration& P, const Configuration& Q,
                        const Chain* chain) {
    Vertex u1 = P.u1, u = P.u, v = Q.u, v1 = Q.u1, v2 = Q.u2;
    if (Q.kind == ConfigKind::kPath) return path_exchange(p, u1, u, Q);
    if (Q.kind != ConfigKind::kSharedAnchor && Q.kind != ConfigKind::kTriangle) {
      return fail("both sides have two deficient vertices", {u, Q.u, Q.u_prime, P.u_prime});
    }
    SideView view(p, P.side);
    for (Vertex w : view.diamond) {
      if (w == u1 || adj(w, v)) continue;
      Vertex w_anchor = view.anchors(g_, w)[0];
      if (w_anchor == u) return shared_anchor(p, u1, w, u, v, v1);
      if (!adj(w_anchor, v1)) return special_path(p, w, w_anchor, v, v1);
      if (Q.kind == ConfigKind::kTriangle) return cycle(FourCycle{{w_anchor, v, v2, v1}}, {});
      if (!adj(w_anchor, v2)) return special_path(p, w, w_anchor, v, v2);
      return cycle(FourCycle{{w_anchor, v1, v, v2}}, {});
    }
    note("every diamond vertex of " + std::string(1, side_name(P.side)) + " sees " +
         std::to_string(v));
    VertexSet core = view.star_set;
    for (Vertex w : view.diamond) core.insert(w);
    for (Vertex y : p.member_list(P.side)) {
      VertexList hits;
      for (Vertex w : g_.neighbors(y)) {
        if (core.contains(w)) hits.push_back(w);
      }
      if (hits.size() >= 2) return cycle(FourCycle{{y, hits[0], v, hits[1]}}, {});
    }
    for (Vertex x : view.rest) {
      if (view.diamond_set.contains(x)) continue;
      int outer = 0;
      Vertex link = -1;
      for (Vertex w : g_.neighbors(x)) {
        if (p.side(w) != P.side) continue;
        if (core.contains(w)) {
          link = w;
        } else {
          ++outer;
        }
      }
      if (outer > p.demand(x, P.side) - 1) continue;
      if (link < 0 || !view.diamond_set.contains(link)) {
        return fail("outer deficient vertex has no diamond neighbour", {x, link});
      }
      Configuration reduced;
      reduced.side = P.side;
      reduced.kind = ConfigKind::kPath;
      reduced.u1 = link;
      reduced.u = view.anchors(g_, link)[0];
      reduced.u2 = x;
      note("reduced to " + config_text(reduced));
      if (adj(v1, reduced.u)) return cycle(FourCycle{{reduced.u, v1, v, reduced.u1}}, {});
      return path_case(p, reduced, Q, chain);
    }
    return fail("no outer vertex is deficient", {u, u1, P.u2});
  }

  // Q is a path configuration: exchange u and v1, then u1 and v2 are
  // deficient.
  Step path_exchange(const Partition& p, Vertex u1, Vertex u, const Configuration& Q) {
    Vertex v = Q.u, v1 = Q.u1, v2 = Q.u2;
    auto next = exchange(p, {{u, v1}});
    if (auto* s = std::get_if<Step>(&next)) return std::move(*s);
    return probe(std::get<Partition>(next), u1, v2, FourCycle{{u1, v2, v1, v}});
  }

  Step path_case(const Partition& p, const Configuration& P, const Configuration& Q,
                 const Chain* chain) {
    Vertex u1 = P.u1, u = P.u, u2 = P.u2;
    Vertex v = Q.u, v1 = Q.u1, v2 = Q.u2, vp = Q.u_prime;
    switch (Q.kind) {
      case ConfigKind::kSharedAnchor: {
        if (adj(v1, v2)) {
          auto next = exchange(p, {{u, v1}});
          if (auto* s = std::get_if<Step>(&next)) return std::move(*s);
          return probe(std::get<Partition>(next), u1, v2, FourCycle{{u1, v2, v1, v}});
        }
        if (adj(u2, v)) return cycle(FourCycle{{u2, v, u, u1}}, {});
        if (adj(u1, v2)) return cycle(FourCycle{{u1, v2, v, u}}, {});
        if (adj(u2, v1)) return cycle(FourCycle{{u2, v1, v, u1}}, {});
        if (adj(v2, u)) return cycle(FourCycle{{u, v2, v, u1}}, {});
        auto next = exchange(p, {{u, v1}});
        if (auto* s = std::get_if<Step>(&next)) return std::move(*s);
        return special_path(std::get<Partition>(next), u2, u1, v, v2);
      }
      case ConfigKind::kDistinctAnchors: {
        auto next = exchange(p, {{u1, vp}});
        if (auto* s = std::get_if<Step>(&next)) return std::move(*s);
        const auto& q = std::get<Partition>(next);
        for (Vertex x : {u, u2}) {
          if (!adj(x, v2)) return probe(q, x, v2, FourCycle{{x, v2, -1, -1}});
        }
        return cycle(FourCycle{{u, u1, u2, v2}}, {});
      }
      case ConfigKind::kPath:
        return path_exchange(p, u1, u, Q);
      case ConfigKind::kTriangle: {
        auto next = exchange(p, {{u, v}, {u1, v1}});
        if (auto* s = std::get_if<Step>(&next)) return std::move(*s);
        return probe(std::get<Partition>(next), u2, v2, FourCycle{{v, v2, u2, u1}});
      }
      case ConfigKind::kPathDistinct: {
        if (chain) return chain_finish(p, P, Q, *chain);
        auto next = exchange(p, {{u, v}, {u1, v1}});
        if (auto* s = std::get_if<Step>(&next)) return std::move(*s);
        return chain_continue(std::get<Partition>(next), Chain{P.side, u, u1, v, v1, v2, vp});
      }
    }
    return fail("unknown configuration", {});
  }

  // After the double exchange: u1 sits deficient on the opposite side with
  // u and v_prime around it as a path configuration.
  Step chain_continue(const Partition& p, const Chain& c) {
    if (auto s = entry_checks(p)) return std::move(*s);
    Side moved = other(c.side);
    Configuration forced;
    forced.side = moved;
    forced.kind = ConfigKind::kPath;
    forced.u1 = c.u;
    forced.u = c.u1;
    forced.u2 = c.v_prime;
    bool valid = p.side(c.u) == moved && p.side(c.v_prime) == moved && p.deficient(c.u1) &&
                 p.slack(c.u) == 0 && p.slack(c.v_prime) == 0 && adj(c.u, c.u1) &&
                 adj(c.u, c.v_prime) && !adj(c.v_prime, c.u1);
    if (valid) {
      for (Vertex w : g_.neighbors(c.v_prime)) {
        if (p.side(w) == moved && p.deficient(w)) valid = false;
      }
    }
    if (!valid) return fail("forced configuration after the double exchange", {c.u, c.u1, c.v_prime});
    note("forced " + config_text(forced));
    auto detected = configure(p, c.side);
    if (auto* s = std::get_if<Step>(&detected)) return std::move(*s);
    const auto& d = std::get<Configuration>(detected);
    return c.side == Side::kA ? dispatch(p, d, forced, &c) : dispatch(p, forced, d, &c);
  }

  Step chain_finish(const Partition& p, const Configuration& P, const Configuration& Q,
                    const Chain& c) {
    if (P.u1 != c.u || P.u != c.u1) return fail("chain lost its forced configuration", {c.u, c.u1});
    if (Q.u != c.v) return cycle(FourCycle{{c.u, c.v, c.u1, Q.u}}, {});
    auto next = exchange(p, {{c.v2, Q.u_prime}});
    if (auto* s = std::get_if<Step>(&next)) return std::move(*s);
    return probe(std::get<Partition>(next), c.v, c.v_prime,
                 FourCycle{{c.v_prime, c.v, c.u1, c.u}});
  }

  const Partition& entry_;
  const Graph& g_;
  SolveStats& stats_;
  std::vector<std::string>& trace_;
  std::set<std::vector<Side>> visited_;
  int exchanges_ = 0;
};

}  // namespace

ConfigurationResult detect_configuration(const Partition& p, Side side) { return detect(p, side); }

std::variant<Improve, Certificate> plateau_schedule(const Partition& p, SolveStats* stats,
                                                    std::vector<std::string>* trace) {
  SolveStats local_stats;
  std::vector<std::string> local_trace;
  SolveStats& st = stats ? *stats : local_stats;
  std::vector<std::string>& tr = trace ? *trace : local_trace;
  ++st.plateau_episodes;
  Step r = Schedule(p, st, tr).run();
  if (auto* m = std::get_if<Improve>(&r)) return std::move(*m);
  if (auto* c = std::get_if<FourCycle>(&r)) return Certificate{*c};
  if (auto* d = std::get_if<Diagnostic>(&r)) {
    d->trace = tr;
    return Certificate{*d};
  }
  const auto& pair = std::get<FeasiblePair>(r);
  try {
    Partition full = extend_pair(p.graph(), p.demands(), pair);
    return Certificate{to_feasible_partition(full.sides())};
  } catch (const InternalError& e) {
    return Certificate{Diagnostic{e.what(), tr}};
  }
}

}  // namespace c4part
