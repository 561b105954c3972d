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
#include <set>

#include "c4part/constructions.hpp"
#include "c4part/error.hpp"
#include "oracles.hpp"

namespace c4part {
namespace {

// Backtracking: can the edge set be split into triangles?
bool triangle_decomposable(const Graph& g, std::set<Edge> left) {
  if (left.empty()) return true;
  auto [u, v] = *left.begin();
  for (Vertex w : common_neighbors(g, u, v)) {
    Edge e1{std::min(u, w), std::max(u, w)};
    Edge e2{std::min(v, w), std::max(v, w)};
    if (!left.count(e1) || !left.count(e2)) continue;
    auto next = left;
    next.erase({u, v});
    next.erase(e1);
    next.erase(e2);
    if (triangle_decomposable(g, next)) return true;
  }
  return false;
}

bool connected(const Graph& g) {
  if (g.order() == 0) return true;
  std::vector<bool> seen(g.order(), false);
  std::vector<Vertex> stack = {0};
  seen[0] = true;
  std::size_t count = 1;
  while (!stack.empty()) {
    Vertex v = stack.back();
    stack.pop_back();
    for (Vertex w : g.neighbors(v)) {
      if (seen[static_cast<std::size_t>(w)]) continue;
      seen[static_cast<std::size_t>(w)] = true;
      ++count;
      stack.push_back(w);
    }
  }
  return count == g.order();
}

TEST(Polarity, DegreesAndOrder) {
  for (int q : {2, 3, 5, 7, 11, 13}) {
    auto pg = er_polarity(q);
    const Graph& g = pg.graph;
    auto n = static_cast<std::size_t>(q * q + q + 1);
    ASSERT_EQ(g.order(), n);
    VertexList low;
    for (std::size_t v = 0; v < n; ++v) {
      int d = g.degree(static_cast<Vertex>(v));
      ASSERT_TRUE(d == q || d == q + 1);
      if (d == q) low.push_back(static_cast<Vertex>(v));
    }
    EXPECT_EQ(low.size(), static_cast<std::size_t>(q + 1));
    EXPECT_EQ(low, pg.absolute_points);
    EXPECT_FALSE(find_four_cycle(g));
  }
}

TEST(Polarity, CoordinatesCanonical) {
  auto pg = er_polarity(5);
  ASSERT_EQ(pg.point_coords.size(), 31u);
  EXPECT_TRUE(std::is_sorted(pg.point_coords.begin(), pg.point_coords.end()));
  for (std::size_t i = 0; i < 31; ++i) {
    auto c = pg.point_coords[i];
    auto first = std::find_if(c.begin(), c.end(), [](int x) { return x != 0; });
    ASSERT_NE(first, c.end());
    EXPECT_EQ(*first, 1);
    for (std::size_t j = 0; j < 31; ++j) {
      if (i == j) continue;
      auto d = pg.point_coords[j];
      bool orth = (c[0] * d[0] + c[1] * d[1] + c[2] * d[2]) % 5 == 0;
      EXPECT_EQ(orth, pg.graph.adjacent(static_cast<Vertex>(i), static_cast<Vertex>(j)));
    }
  }
}

TEST(Polarity, QTwo) {
  auto g = er_polarity(2).graph;
  EXPECT_EQ(g.order(), 7u);
  EXPECT_EQ(g.size(), 9u);
  EXPECT_FALSE(testing::has_c4(g));
}

TEST(Polarity, QThreeStructure) {
  auto g = er_polarity(3).graph;
  ASSERT_EQ(g.order(), 13u);
  VertexSet s(13), t(13);
  for (Vertex v = 0; v < 13; ++v) (g.degree(v) == 3 ? s : t).insert(v);
  ASSERT_EQ(s.size(), 4u);
  for (Vertex u : s.to_list())
    for (Vertex v : s.to_list()) EXPECT_FALSE(g.adjacent(u, v));
  for (Vertex v : t.to_list()) EXPECT_EQ(g.degree(v), 4);
  auto sub = induced(g, t).graph;
  EXPECT_TRUE(connected(sub));
  ASSERT_EQ(sub.size(), 12u);
  auto es = sub.edges();
  EXPECT_TRUE(triangle_decomposable(sub, std::set<Edge>(es.begin(), es.end())));
}

TEST(Polarity, RejectsComposite) {
  EXPECT_THROW(er_polarity(4), InputError);
  EXPECT_THROW(er_polarity(1), InputError);
  EXPECT_TRUE(is_prime(101));
  EXPECT_FALSE(is_prime(91));
}

TEST(Named, Families) {
  EXPECT_EQ(named_graph("triangle"), Graph::build(3, {{0, 1}, {1, 2}, {0, 2}}));
  auto p = named_graph("petersen");
  EXPECT_EQ(p.order(), 10u);
  EXPECT_EQ(p.size(), 15u);
  EXPECT_EQ(p.min_degree(), 3);
  EXPECT_FALSE(testing::has_c4(p));
  for (auto [u, v] : p.edges()) EXPECT_TRUE(common_neighbors(p, u, v).empty());
  auto h = named_graph("heawood");
  EXPECT_EQ(h.size(), 21u);
  EXPECT_FALSE(find_four_cycle(h));
  EXPECT_EQ(named_graph("cycle4"), named_graph("cycle(4)"));
  EXPECT_EQ(named_graph("cycle:4"), named_graph("cycle4"));
  EXPECT_EQ(named_graph("star3").degree(0), 3);
  EXPECT_EQ(named_graph("complete5").size(), 10u);
  EXPECT_EQ(named_graph("path4").size(), 3u);
  EXPECT_THROW(named_graph("dodecahedron"), InputError);
  EXPECT_THROW(named_graph("cycle"), InputError);
}

TEST(Rng, UniformBelowRange) {
  Rng rng(7);
  for (int i = 0; i < 1000; ++i) EXPECT_LT(uniform_below(rng, 13), 13u);
  Rng a(9), b(9);
  for (int i = 0; i < 50; ++i) EXPECT_EQ(uniform_below(a, 1000), uniform_below(b, 1000));
}

TEST(RandomC4Free, PostConditions) {
  auto r = random_c4_free(4, 6, 3);
  EXPECT_FALSE(testing::has_c4(r.graph));
  EXPECT_TRUE(r.saturated);
  auto big = random_c4_free(50, 100, 1);
  EXPECT_LE(big.graph.size(), 100u);
  EXPECT_FALSE(find_four_cycle(big.graph));
  EXPECT_EQ(big.graph, random_c4_free(50, 100, 1).graph);
  EXPECT_EQ(random_c4_free(10, 15, 7).graph.edges(), random_c4_free(10, 15, 7).graph.edges());
}

// Saturated output admits no further edge.
TEST(RandomC4Free, SaturatedIsMaximal) {
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    auto r = random_c4_free(8, 100, seed);
    ASSERT_TRUE(r.saturated);
    auto es = r.graph.edges();
    for (Vertex u = 0; u < 8; ++u)
      for (Vertex v = u + 1; v < 8; ++v) {
        if (r.graph.adjacent(u, v)) continue;
        auto more = es;
        more.emplace_back(u, v);
        EXPECT_TRUE(testing::has_c4(Graph::build(8, more)));
      }
  }
}

TEST(Enumerate, Counts) {
  EXPECT_EQ(small_graph_count(3), 8u);
  EXPECT_EQ(pair_order(3), (std::vector<Edge>{{0, 1}, {0, 2}, {1, 2}}));
  std::size_t seen = 0;
  EXPECT_EQ(enumerate_small(3, {}, [&](const Graph&) { ++seen; }), 8u);
  EXPECT_EQ(seen, 8u);
}

TEST(Enumerate, C4FreeMatchesDirectCount) {
  for (std::size_t n = 1; n <= 5; ++n) {
    std::size_t want = 0;
    testing::for_each_graph(n, [&](const Graph& g) { want += !testing::has_c4(g); });
    SmallGraphFilter f;
    f.c4_free = true;
    EXPECT_EQ(enumerate_small(n, f, [](const Graph&) {}), want) << "n=" << n;
    if (n == 4) {
      EXPECT_EQ(want, 54u);
    }
  }
}

TEST(Enumerate, FiveVerticesMinDegreeThree) {
  SmallGraphFilter f;
  f.c4_free = true;
  f.min_degree = 3;
  EXPECT_EQ(enumerate_small(5, f, [](const Graph&) {}), 0u);
  std::size_t direct = 0;
  testing::for_each_graph(5, [&](const Graph& g) {
    if (g.min_degree() >= 3 && !testing::has_c4(g)) ++direct;
  });
  EXPECT_EQ(direct, 0u);
}

TEST(Enumerate, ShardsCoverRange) {
  SmallGraphFilter f;
  f.c4_free = true;
  std::size_t total = 0;
  std::uint64_t masks = small_graph_count(5);
  for (std::uint64_t b = 0; b < masks; b += 100)
    total += enumerate_small_range(5, f, b, std::min(masks, b + 100),
                                   [](std::uint64_t, const Graph&) {});
  EXPECT_EQ(total, enumerate_small(5, f, [](const Graph&) {}));
}

TEST(Enumerate, Guard) {
  EXPECT_THROW(enumerate_small(8, {}, [](const Graph&) {}), InputError);
}

}  // namespace
}  // namespace c4part
