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


#include <gtest/gtest.h>

#include <algorithm>

#include "c4part/constructions.hpp"
#include "c4part/error.hpp"
#include "c4part/solver.hpp"
#include "oracles.hpp"

namespace c4part {
namespace {

DemandPair constant(const Graph& g, int a, int b) {
  return {DemandFn(g.order(), a), DemandFn(g.order(), b)};
}

std::uint64_t a_mask(const Partition& p) {
  std::uint64_t m = 0;
  for (Vertex v : p.member_list(Side::kA)) m |= std::uint64_t{1} << v;
  return m;
}

bool good(const Graph& g, const VertexSet& s, const DemandFn& f) {
  if (s.empty()) return false;
  for (Vertex v : s.to_list())
    if (degree_in(g, v, s) < f[static_cast<std::size_t>(v)]) return false;
  return true;
}

void expect_pair(const Graph& g, const DemandPair& d, const FeasiblePair& pair) {
  EXPECT_TRUE(good(g, pair.a_part, d.a));
  EXPECT_TRUE(good(g, pair.b_part, d.b));
  for (Vertex v : pair.a_part.to_list()) EXPECT_FALSE(pair.b_part.contains(v));
}

// Random C4-free graph cut to its 3-core with random demands meeting the
// degree bound. Empty graph when the core is too small.
struct Instance {
  Graph g;
  DemandPair d;
};

Instance random_instance(std::uint64_t seed) {
  Rng rng(seed * 7919 + 1);
  std::size_t n = 10 + uniform_below(rng, 10);
  auto base = random_c4_free(n, n * n, seed).graph;
  auto core = f_core(base, VertexSet::full(n), constant_demand(n, 3));
  Instance in;
  if (core.size() < 6) return in;
  in.g = induced(base, core).graph;
  std::size_t m = in.g.order();
  in.d.a.resize(m);
  in.d.b.resize(m);
  for (std::size_t i = 0; i < m; ++i) {
    int deg = in.g.degree(static_cast<Vertex>(i));
    in.d.a[i] = 2 + static_cast<int>(uniform_below(rng, static_cast<std::uint64_t>(deg - 2)));
    int top = deg - in.d.a[i] + 1;
    in.d.b[i] = 2 + static_cast<int>(uniform_below(rng, static_cast<std::uint64_t>(top - 1)));
  }
  return in;
}

// Normalized demands plus the blocked partition the climb stops at.
struct Blocked {
  Graph g;
  DemandPair nd;
  std::vector<Side> sides;
};

std::vector<Blocked> blocked_states(std::size_t count) {
  std::vector<Blocked> out;
  for (std::uint64_t seed = 1; out.size() < count && seed < 20 * count; ++seed) {
    auto in = random_instance(seed);
    if (in.g.order() == 0) continue;
    Blocked b{in.g, normalize(in.g, in.d), {}};
    auto init = initial_partition(b.g, b.nd);
    if (!std::holds_alternative<Partition>(init)) continue;
    auto r = climb(std::get<Partition>(init));
    if (auto* p = std::get_if<Partition>(&r)) {
      b.sides = p->sides();
      out.push_back(std::move(b));
    }
  }
  return out;
}

TEST(Hypotheses, Examples) {
  auto t = named_graph("triangle");
  auto c = verify_hypotheses(t, constant(t, 2, 2));
  ASSERT_TRUE(c && c->violation());
  EXPECT_EQ(*c->violation(), (DegreeViolation{0, 2, 3}));
  auto k4 = named_graph("complete4");
  auto w = verify_hypotheses(k4, constant(k4, 2, 2));
  ASSERT_TRUE(w && w->four_cycle());
  EXPECT_TRUE(is_four_cycle(k4, *w->four_cycle()));
  auto p = named_graph("petersen");
  EXPECT_FALSE(verify_hypotheses(p, constant(p, 2, 2)));
  EXPECT_THROW(verify_hypotheses(p, constant(p, 1, 2)), InputError);
  EXPECT_THROW(verify_hypotheses(p, DemandPair{DemandFn(9, 2), DemandFn(10, 2)}), InputError);
}

TEST(Normalize, RaisesA) {
  auto k6 = named_graph("complete6");
  auto n = normalize(k6, constant(k6, 2, 2));
  EXPECT_EQ(n.a, DemandFn(6, 4));
  EXPECT_EQ(n.b, DemandFn(6, 2));
  auto p = named_graph("petersen");
  EXPECT_EQ(normalize(p, constant(p, 2, 2)).a, DemandFn(10, 2));
}

TEST(Weight, Examples) {
  auto t = named_graph("triangle");
  auto dt = constant(t, 2, 2);
  Partition pt(t, dt, {Side::kA, Side::kA, Side::kB});
  EXPECT_EQ(weight(t, dt, pt), 7);
  auto p = named_graph("petersen");
  auto dp = constant(p, 2, 2);
  auto pp = Partition::from_set(p, dp, VertexSet(10, {0, 1, 2, 3, 4}));
  EXPECT_EQ(weight(p, dp, pp), 30);
  EXPECT_EQ(testing::weight(p, dp.a, dp.b, 0x1f), 30);
}

TEST(Delta, FormulaValues) {
  auto p = named_graph("petersen");
  auto d = constant(p, 2, 2);
  auto part = Partition::from_set(p, d, VertexSet(10, {0, 1, 2, 3, 4, 5}));
  // 5 has one A-neighbour: slack 1.
  EXPECT_EQ(part.slack(5), 1);
  EXPECT_EQ(delta_move(part, 5), 1);
  EXPECT_EQ(part.slack(1), 0);
  EXPECT_EQ(delta_move(part, 1), -1);
  auto q = Partition::from_set(p, d, VertexSet(10, {0, 2, 3, 4, 6, 7}));
  ASSERT_EQ(q.slack(0), 1);
  ASSERT_EQ(q.slack(5), 1);
  ASSERT_TRUE(p.adjacent(0, 5));
  EXPECT_EQ(delta_swap(q, 0, 5), 0);
  ASSERT_EQ(q.slack(8), 1);
  ASSERT_FALSE(p.adjacent(0, 8));
  EXPECT_EQ(delta_swap(q, 0, 8), 2);
  EXPECT_THROW(delta_swap(q, 0, 2), InputError);
}

// Both formulas against recomputed weights on every partition of every
// graph with n <= 5 and two demand splits.
TEST(Delta, MatchesRecomputation) {
  for (std::size_t n = 2; n <= 5; ++n) {
    testing::for_each_graph(n, [&](const Graph& g) {
      for (int bv : {1, 2}) {
        DemandPair d;
        for (std::size_t i = 0; i < n; ++i) {
          d.b.push_back(bv);
          d.a.push_back(g.degree(static_cast<Vertex>(i)) - bv + 1);
        }
        for (std::uint64_t s = 1; s + 1 < (std::uint64_t{1} << n); ++s) {
          auto p = Partition(g, d, [&] {
            std::vector<Side> sides(n);
            for (std::size_t i = 0; i < n; ++i) sides[i] = (s >> i & 1) ? Side::kA : Side::kB;
            return sides;
          }());
          auto w0 = testing::weight(g, d.a, d.b, s);
          ASSERT_EQ(p.weight(), w0);
          for (std::size_t x = 0; x < n; ++x) {
            ASSERT_EQ(delta_move(p, static_cast<Vertex>(x)),
                      testing::weight(g, d.a, d.b, s ^ (std::uint64_t{1} << x)) - w0);
            for (std::size_t y = 0; y < n; ++y) {
              if ((s >> x & 1) == (s >> y & 1)) continue;
              auto t = s ^ (std::uint64_t{1} << x) ^ (std::uint64_t{1} << y);
              ASSERT_EQ(delta_swap(p, static_cast<Vertex>(x), static_cast<Vertex>(y)),
                        testing::weight(g, d.a, d.b, t) - w0);
            }
          }
        }
      }
    });
  }
}

TEST(Partition, CachedWeightTracksMoves) {
  auto g = er_polarity(5).graph;
  auto d = normalize(g, constant(g, 3, 3));
  auto p = Partition::from_set(g, d, VertexSet(31, {0, 1, 2, 3, 4, 5, 6, 7, 8}));
  Rng rng(3);
  for (int i = 0; i < 200; ++i) {
    auto x = static_cast<Vertex>(uniform_below(rng, 31));
    if (p.count(p.side(x)) < 2) continue;
    p.move(x);
    ASSERT_EQ(p.weight(), p.recompute_weight());
    ASSERT_EQ(p.weight(), testing::weight(g, d.a, d.b, a_mask(p)));
  }
}

TEST(ExtendPair, SpanningUnchanged) {
  auto g = named_graph("petersen");
  auto d = constant(g, 2, 2);
  VertexSet outer(10, {0, 1, 2, 3, 4});
  auto p = extend_pair(g, d, {outer, outer.complement()});
  EXPECT_EQ(p.members(Side::kA), outer);
}

// Two disjoint 2-good 6-sets found by subset search, two vertices left over.
TEST(ExtendPair, Heawood) {
  auto g = named_graph("heawood");
  auto m = testing::matrix(g);
  std::vector<int> two(14, 2);
  std::vector<std::uint64_t> sixes;
  for (std::uint64_t s = 0; s < (1u << 14); ++s)
    if (__builtin_popcountll(s) == 6 && testing::good(m, s, two)) sixes.push_back(s);
  std::optional<std::pair<std::uint64_t, std::uint64_t>> found;
  for (auto x : sixes) {
    for (auto y : sixes)
      if ((x & y) == 0) found = std::pair{x, y};
    if (found) break;
  }
  ASSERT_TRUE(found);
  auto to_set = [](std::uint64_t s) {
    VertexSet v(14);
    for (Vertex i = 0; i < 14; ++i)
      if (s >> i & 1) v.insert(i);
    return v;
  };
  auto d = constant(g, 2, 2);
  auto p = extend_pair(g, d, {to_set(found->first), to_set(found->second)});
  EXPECT_TRUE(verify_feasible(g, d.a, d.b, p.sides()));
  for (Vertex v : to_set(found->first).to_list()) EXPECT_EQ(p.side(v), Side::kA);
  for (Vertex v : to_set(found->second).to_list()) EXPECT_EQ(p.side(v), Side::kB);
}

TEST(ExtendPair, LeftoverJoinsA) {
  auto g = named_graph("complete7");
  auto d = constant(g, 2, 2);
  auto p = extend_pair(g, d, {VertexSet(7, {0, 1, 2}), VertexSet(7, {3, 4, 5})});
  EXPECT_EQ(p.side(6), Side::kA);
  EXPECT_TRUE(verify_feasible(g, d.a, d.b, p.sides()));
}

TEST(InitialPartition, Petersen) {
  auto g = named_graph("petersen");
  auto d = constant(g, 2, 2);
  auto r = initial_partition(g, d);
  ASSERT_TRUE(std::holds_alternative<FeasiblePair>(r));
  auto pair = std::get<FeasiblePair>(r);
  expect_pair(g, d, pair);
  EXPECT_EQ(pair.a_part.size(), 5u);
  EXPECT_EQ(pair.b_part.size(), 5u);
}

TEST(InitialPartition, ShapeInvariants) {
  auto g = er_polarity(7).graph;
  auto d = normalize(g, constant(g, 3, 4));
  auto r = initial_partition(g, d);
  if (auto* pair = std::get_if<FeasiblePair>(&r)) {
    expect_pair(g, d, *pair);
  } else {
    EXPECT_TRUE(std::get<Partition>(r).is_ab_partition());
  }
  for (std::uint64_t seed = 1; seed < 60; ++seed) {
    auto in = random_instance(seed);
    if (in.g.order() == 0) continue;
    auto nd = normalize(in.g, in.d);
    auto s = initial_partition(in.g, nd);
    if (auto* pair = std::get_if<FeasiblePair>(&s)) {
      expect_pair(in.g, nd, *pair);
    } else {
      EXPECT_TRUE(std::get<Partition>(s).is_ab_partition());
    }
  }
}

TEST(Climb, BlockedIsFixpoint) {
  auto states = blocked_states(40);
  ASSERT_GE(states.size(), 10u);
  for (auto& b : states) {
    Partition p(b.g, b.nd, b.sides);
    ASSERT_TRUE(p.is_ab_partition());
    SolveStats st;
    auto again = climb(p, &st);
    ASSERT_TRUE(std::holds_alternative<Partition>(again));
    EXPECT_EQ(std::get<Partition>(again), p);
    EXPECT_EQ(st.improving_moves, 0);
    // Blocked: deficient sets complete bipartite, no positive exchange.
    for (Vertex u : p.deficient_list(Side::kA))
      for (Vertex v : p.deficient_list(Side::kB)) {
        EXPECT_TRUE(b.g.adjacent(u, v));
        EXPECT_LE(delta_swap(p, u, v), 0);
      }
  }
}

TEST(Climb, WeightIncreases) {
  for (std::uint64_t seed = 1; seed < 80; ++seed) {
    auto in = random_instance(seed);
    if (in.g.order() == 0) continue;
    auto nd = normalize(in.g, in.d);
    auto init = initial_partition(in.g, nd);
    if (!std::holds_alternative<Partition>(init)) continue;
    const auto& start = std::get<Partition>(init);
    auto r = climb(start);
    if (auto* p = std::get_if<Partition>(&r)) {
      EXPECT_GE(p->weight(), start.weight());
      EXPECT_EQ(p->weight(), p->recompute_weight());
      EXPECT_TRUE(p->is_ab_partition());
    } else {
      expect_pair(in.g, nd, std::get<FeasiblePair>(r));
    }
  }
}

// Non-adjacent deficient pairs of ab-partitions reached from random starts.
TEST(CrossPairProbe, Harness) {
  int checked = 0;
  for (std::uint64_t seed = 1; seed < 120; ++seed) {
    auto in = random_instance(seed);
    if (in.g.order() == 0) continue;
    auto nd = normalize(in.g, in.d);
    auto init = initial_partition(in.g, nd);
    if (!std::holds_alternative<Partition>(init)) continue;
    const auto& p = std::get<Partition>(init);
    for (Vertex u : p.deficient_list(Side::kA))
      for (Vertex v : p.deficient_list(Side::kB)) {
        if (in.g.adjacent(u, v)) continue;
        ++checked;
        auto r = cross_pair_probe(p, u, v);
        if (auto* pair = std::get_if<FeasiblePair>(&r)) {
          expect_pair(in.g, nd, *pair);
        } else {
          auto* m = std::get_if<Improve>(&r);
          ASSERT_TRUE(m);
          EXPECT_GT(m->partition.weight(), p.weight());
          EXPECT_TRUE(m->partition.is_ab_partition());
        }
      }
  }
  EXPECT_GT(checked, 0);
}

TEST(CrossPairProbe, Guards) {
  auto g = named_graph("petersen");
  auto d = constant(g, 2, 2);
  auto p = Partition::from_set(g, d, VertexSet(10, {0, 1, 2, 3, 4, 5}));
  EXPECT_THROW(cross_pair_probe(p, 0, 5), InputError);
  EXPECT_THROW(cross_pair_probe(p, 1, 2), InputError);
}

TEST(StarStructure, TwoByTwo) {
  auto g = named_graph("cycle4");
  auto d = constant(g, 2, 2);
  auto p = Partition::from_set(g, d, VertexSet(4, {0, 2}));
  auto r = star_structure(p);
  ASSERT_TRUE(std::holds_alternative<FourCycle>(r));
  EXPECT_TRUE(is_four_cycle(g, std::get<FourCycle>(r)));
}

TEST(StarStructure, OutsideVertexSeesTwo) {
  // A = {0, 1, 2} with 2 ~ 0, 1; B = {3, 4}; 3 ~ 0, 1, 4.
  Graph g = Graph::build(5, {{0, 2}, {1, 2}, {0, 3}, {1, 3}, {3, 4}});
  DemandPair d{DemandFn(5, 2), DemandFn{2, 2, 2, 2, 1}};
  auto p = Partition::from_set(g, d, VertexSet(5, {0, 1, 2}));
  ASSERT_EQ(p.deficient_list(Side::kA), (VertexList{0, 1}));
  ASSERT_EQ(p.deficient_list(Side::kB), VertexList{3});
  auto r = star_structure(p);
  ASSERT_TRUE(std::holds_alternative<FourCycle>(r));
  EXPECT_EQ(std::get<FourCycle>(r).vertices, (std::array<Vertex, 4>{0, 2, 1, 3}));
}

TEST(StarStructure, HarnessRefines) {
  for (auto& b : blocked_states(40)) {
    Partition p(b.g, b.nd, b.sides);
    auto r = star_structure(p);
    auto* refine = std::get_if<Refine>(&r);
    ASSERT_TRUE(refine);
    ASSERT_TRUE(refine->singleton_side);
    EXPECT_EQ(p.deficient_list(*refine->singleton_side).size(), 1u);
  }
}

TEST(PlateauSwap, Guards) {
  auto g = named_graph("petersen");
  auto d = constant(g, 2, 2);
  auto p = Partition::from_set(g, d, VertexSet(10, {0, 1, 2, 3, 4, 5}));
  EXPECT_THROW(plateau_swap(p, 0, 1), InputError);
}

TEST(PlateauSwap, HarnessOutcomes) {
  int refines = 0;
  for (auto& b : blocked_states(60)) {
    Partition p(b.g, b.nd, b.sides);
    for (Vertex u : p.deficient_list(Side::kA))
      for (Vertex v : p.deficient_list(Side::kB)) {
        auto r = plateau_swap(p, u, v);
        if (auto* m = std::get_if<Improve>(&r)) {
          EXPECT_GT(m->partition.weight(), p.weight());
          EXPECT_TRUE(m->partition.is_ab_partition());
        } else if (auto* pair = std::get_if<FeasiblePair>(&r)) {
          expect_pair(b.g, b.nd, *pair);
        } else {
          auto* ref = std::get_if<Refine>(&r);
          ASSERT_TRUE(ref);
          if (ref->plateau) {
            ++refines;
            EXPECT_EQ(ref->plateau->weight(), p.weight());
            EXPECT_TRUE(ref->plateau->is_ab_partition());
          }
        }
      }
  }
  EXPECT_GT(refines, 0);
}

bool exact(const Partition& p, Vertex x) { return p.own_degree(x) == p.own_demand(x); }

TEST(DetectConfiguration, HarnessWitnesses) {
  std::map<ConfigKind, int> kinds;
  for (auto& b : blocked_states(80)) {
    Partition p(b.g, b.nd, b.sides);
    for (Side s : {Side::kA, Side::kB}) {
      auto r = detect_configuration(p, s);
      if (std::holds_alternative<FeasiblePair>(r)) {
        expect_pair(b.g, b.nd, std::get<FeasiblePair>(r));
        continue;
      }
      ASSERT_FALSE(std::holds_alternative<FourCycle>(r));
      ASSERT_FALSE(std::holds_alternative<Diagnostic>(r)) << std::get<Diagnostic>(r).reason;
      auto c = std::get<Configuration>(r);
      ++kinds[c.kind];
      const Graph& g = b.g;
      EXPECT_EQ(c.side, s);
      EXPECT_EQ(p.side(c.u1), s);
      EXPECT_EQ(p.side(c.u2), s);
      EXPECT_TRUE(p.deficient(c.u));
      EXPECT_TRUE(exact(p, c.u1));
      EXPECT_TRUE(g.adjacent(c.u1, c.u));
      switch (c.kind) {
        case ConfigKind::kSharedAnchor:
          EXPECT_TRUE(g.adjacent(c.u2, c.u));
          EXPECT_TRUE(exact(p, c.u2));
          break;
        case ConfigKind::kDistinctAnchors:
          EXPECT_NE(c.u, c.u_prime);
          EXPECT_TRUE(g.adjacent(c.u2, c.u_prime));
          break;
        case ConfigKind::kPath:
          EXPECT_TRUE(g.adjacent(c.u1, c.u2));
          for (Vertex y : p.deficient_list(s)) EXPECT_FALSE(g.adjacent(c.u2, y));
          break;
        case ConfigKind::kTriangle:
          EXPECT_TRUE(g.adjacent(c.u1, c.u2));
          EXPECT_TRUE(g.adjacent(c.u2, c.u));
          break;
        case ConfigKind::kPathDistinct:
          EXPECT_TRUE(g.adjacent(c.u1, c.u2));
          EXPECT_TRUE(g.adjacent(c.u2, c.u_prime));
          EXPECT_NE(c.u, c.u_prime);
          break;
      }
    }
  }
  EXPECT_GE(kinds.size(), 2u);
}

TEST(PlateauSchedule, HarnessEpisodes) {
  for (auto& b : blocked_states(60)) {
    Partition p(b.g, b.nd, b.sides);
    SolveStats st;
    std::vector<std::string> trace;
    auto r = plateau_schedule(p, &st, &trace);
    EXPECT_EQ(st.plateau_episodes, 1);
    if (auto* m = std::get_if<Improve>(&r)) {
      EXPECT_GT(m->partition.weight(), p.weight());
      EXPECT_TRUE(m->partition.is_ab_partition());
    } else {
      auto& c = std::get<Certificate>(r);
      ASSERT_EQ(c.status(), Status::kFeasible) << (c.diagnostic() ? c.diagnostic()->reason : "");
      EXPECT_TRUE(verify_feasible(b.g, b.nd.a, b.nd.b, c.partition()->sides));
    }
  }
}

TEST(Solve, Examples) {
  auto p = named_graph("petersen");
  auto r = solve(p, DemandFn(10, 2), DemandFn(10, 2));
  ASSERT_EQ(r.certificate.status(), Status::kFeasible);
  EXPECT_TRUE(verify_feasible(p, DemandFn(10, 2), DemandFn(10, 2), r.certificate.partition()->sides));
  auto t = solve(named_graph("triangle"), DemandFn(3, 2), DemandFn(3, 2));
  ASSERT_EQ(t.certificate.status(), Status::kDegreeViolation);
  EXPECT_EQ(*t.certificate.violation(), (DegreeViolation{0, 2, 3}));
  auto c = solve(named_graph("cycle4"), DemandFn(4, 2), DemandFn(4, 2));
  EXPECT_EQ(c.certificate.status(), Status::kDegreeViolation);
  auto k4 = solve(named_graph("complete4"), DemandFn(4, 2), DemandFn(4, 2));
  ASSERT_EQ(k4.certificate.status(), Status::kFourCycle);
  EXPECT_TRUE(is_four_cycle(named_graph("complete4"), *k4.certificate.four_cycle()));
  auto e7 = er_polarity(7).graph;
  auto s = solve(e7, DemandFn(57, 3), DemandFn(57, 4));
  ASSERT_EQ(s.certificate.status(), Status::kFeasible);
  EXPECT_TRUE(verify_feasible(e7, DemandFn(57, 3), DemandFn(57, 4), s.certificate.partition()->sides));
}

TEST(Solve, PartitionListsSorted) {
  auto g = named_graph("heawood");
  auto r = solve(g, DemandFn(14, 2), DemandFn(14, 2));
  auto* fp = r.certificate.partition();
  ASSERT_TRUE(fp);
  EXPECT_TRUE(std::is_sorted(fp->a_part.begin(), fp->a_part.end()));
  EXPECT_EQ(fp->a_part.size() + fp->b_part.size(), 14u);
  EXPECT_EQ(to_feasible_partition(fp->sides).a_part, fp->a_part);
}

TEST(Solve, AgreesWithOracleOnRandomInstances) {
  for (std::uint64_t seed = 1; seed < 150; ++seed) {
    auto in = random_instance(seed);
    if (in.g.order() == 0) continue;
    auto r = solve(in.g, in.d.a, in.d.b);
    ASSERT_EQ(r.certificate.status(), Status::kFeasible) << "seed " << seed;
    EXPECT_TRUE(verify_feasible(in.g, in.d.a, in.d.b, r.certificate.partition()->sides));
    if (in.g.order() <= 16) {
      EXPECT_TRUE(testing::feasible_exists(in.g, in.d.a, in.d.b));
    }
  }
}

TEST(Solve, Deterministic) {
  auto g = er_polarity(11).graph;
  DemandFn a(g.order(), 6), b(g.order(), 6);
  auto x = solve(g, a, b);
  auto y = solve(g, a, b);
  EXPECT_EQ(x.trace, y.trace);
  ASSERT_TRUE(x.certificate.partition());
  EXPECT_EQ(x.certificate.partition()->sides, y.certificate.partition()->sides);
}

TEST(SolveFrom, RandomStarts) {
  for (auto& b : blocked_states(30)) {
    auto r = solve_from(b.g, b.nd.a, b.nd.b, b.sides);
    ASSERT_EQ(r.certificate.status(), Status::kFeasible);
  }
  auto g = named_graph("petersen");
  std::vector<Side> all_a(10, Side::kA);
  all_a[0] = Side::kB;
  EXPECT_THROW(solve_from(g, DemandFn(10, 2), DemandFn(10, 2), all_a), InputError);
}

TEST(VerifyFeasible, Examples) {
  auto p = named_graph("petersen");
  DemandFn two(10, 2);
  std::vector<Side> s(10, Side::kB);
  for (int i = 0; i < 5; ++i) s[i] = Side::kA;
  EXPECT_TRUE(verify_feasible(p, two, two, s));
  auto t = named_graph("triangle");
  EXPECT_FALSE(verify_feasible(t, DemandFn(3, 2), DemandFn(3, 2), {Side::kA, Side::kA, Side::kB}));
  EXPECT_THROW(verify_feasible(t, DemandFn(3, 2), DemandFn(3, 2), std::vector<Side>(3, Side::kA)),
               InputError);
}

TEST(Names, Stable) {
  EXPECT_EQ(status_name(Status::kFeasible), "feasible");
  EXPECT_NE(config_kind_name(ConfigKind::kPath), config_kind_name(ConfigKind::kTriangle));
}

}  // namespace
}  // namespace c4part
