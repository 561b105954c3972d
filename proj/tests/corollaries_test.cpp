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

#include <set>

#include "c4part/constructions.hpp"
#include "c4part/corollaries.hpp"
#include "c4part/error.hpp"

namespace c4part {
namespace {

int min_degree_inside(const Graph& g, const VertexList& part) {
  VertexSet s(g.order(), std::span<const Vertex>(part));
  int m = INT32_MAX;
  for (Vertex v : part) m = std::min(m, degree_in(g, v, s));
  return m;
}

void expect_partition(const Graph& g, const std::vector<VertexList>& parts) {
  std::set<Vertex> seen;
  for (const auto& p : parts)
    for (Vertex v : p) EXPECT_TRUE(seen.insert(v).second);
  EXPECT_EQ(seen.size(), g.order());
}

void expect_disjoint_cycles(const Graph& g, const std::vector<VertexList>& cycles, std::size_t k) {
  ASSERT_EQ(cycles.size(), k);
  std::set<Vertex> seen;
  for (const auto& c : cycles) {
    EXPECT_TRUE(is_cycle(g, c));
    for (Vertex v : c) EXPECT_TRUE(seen.insert(v).second);
  }
}

TEST(KWay, PetersenTwoTwo) {
  auto g = named_graph("petersen");
  auto r = k_way(g, {2, 2});
  ASSERT_EQ(r.index(), 0u);
  auto parts = std::get<0>(r);
  ASSERT_EQ(parts.size(), 2u);
  expect_partition(g, parts);
  for (auto& p : parts) EXPECT_GE(min_degree_inside(g, p), 2);
}

TEST(KWay, PolaritySevenThreeWay) {
  auto g = er_polarity(7).graph;
  auto r = k_way(g, {3, 3, 3});
  ASSERT_EQ(r.index(), 0u);
  auto parts = std::get<0>(r);
  ASSERT_EQ(parts.size(), 3u);
  expect_partition(g, parts);
  for (auto& p : parts) EXPECT_GE(min_degree_inside(g, p), 3);
}

TEST(KWay, SinglePart) {
  auto g = named_graph("heawood");
  auto r = k_way(g, {3});
  ASSERT_EQ(r.index(), 0u);
  EXPECT_EQ(std::get<0>(r), (std::vector<VertexList>{VertexSet::full(14).to_list()}));
}

TEST(KWay, Certificates) {
  auto r = k_way(named_graph("petersen"), {2, 3});
  ASSERT_EQ(r.index(), 1u);
  auto& c = std::get<Certificate>(r);
  ASSERT_TRUE(c.violation());
  EXPECT_EQ(c.violation()->required, 4);
  auto k = k_way(named_graph("complete5"), {2, 2});
  ASSERT_EQ(k.index(), 1u);
  EXPECT_EQ(std::get<Certificate>(k).status(), Status::kFourCycle);
  EXPECT_THROW(k_way(named_graph("petersen"), {}), InputError);
  EXPECT_THROW(k_way(named_graph("petersen"), {1, 2}), InputError);
}

TEST(Cycles, Examples) {
  auto t = named_graph("triangle");
  auto r = disjoint_cycles(t, 1);
  ASSERT_EQ(r.index(), 0u);
  expect_disjoint_cycles(t, std::get<0>(r), 1);
  auto p = named_graph("petersen");
  auto s = disjoint_cycles(p, 2);
  ASSERT_EQ(s.index(), 0u);
  expect_disjoint_cycles(p, std::get<0>(s), 2);
  auto e5 = er_polarity(5).graph;
  auto u = disjoint_cycles(e5, 4);
  ASSERT_EQ(u.index(), 0u);
  expect_disjoint_cycles(e5, std::get<0>(u), 4);
}

TEST(Cycles, Certificates) {
  auto r = disjoint_cycles(named_graph("petersen"), 3);
  ASSERT_EQ(r.index(), 1u);
  EXPECT_EQ(std::get<Certificate>(r).status(), Status::kDegreeViolation);
  auto c = disjoint_cycles(named_graph("complete4"), 2);
  ASSERT_EQ(c.index(), 1u);
  EXPECT_EQ(std::get<Certificate>(c).status(), Status::kFourCycle);
  EXPECT_THROW(disjoint_cycles(named_graph("triangle"), 0), InputError);
}

TEST(IsCycle, Basics) {
  auto g = named_graph("cycle5");
  EXPECT_TRUE(is_cycle(g, {0, 1, 2, 3, 4}));
  EXPECT_FALSE(is_cycle(g, {0, 1, 2}));
  EXPECT_FALSE(is_cycle(g, {0, 1}));
  EXPECT_FALSE(is_cycle(g, {0, 1, 2, 3, 4, 0}));
}

}  // namespace
}  // namespace c4part
