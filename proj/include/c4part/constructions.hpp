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

#ifndef C4PART_CONSTRUCTIONS_HPP_
#define C4PART_CONSTRUCTIONS_HPP_

#include <array>
#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "c4part/graph.hpp"

namespace c4part {

bool is_prime(int q);

// Orthogonality graph on the projective plane over F_q (q prime).
struct PolarityGraph {
  int q = 0;
  Graph graph;
  VertexList absolute_points;                  // v.v = 0; degree q
  std::vector<std::array<int, 3>> point_coords;  // first nonzero coordinate is 1
};

// Vertices are the canonical projective points in lexicographic order of
// their coordinates. Self-orthogonal points get no loop. Throws InputError if
// q is not prime.
PolarityGraph er_polarity(int q);

// triangle, petersen, heawood, path<n>, cycle<n>, complete<n>, star<n>.
// Sized families accept "cycle4", "cycle(4)" or "cycle:4"; star<n> has a
// centre 0 and n leaves.
Graph named_graph(std::string_view name);
std::vector<std::string> named_graph_families();

// Seeded generator used for every reproducible random choice: std::mt19937_64
// (fully specified by the C++ standard) with uniform_below() for ranges.
using Rng = std::mt19937_64;

// Uniform integer in [0, bound) by rejection on the raw 64-bit output; the
// mapping is fixed so results do not depend on the standard library.
std::uint64_t uniform_below(Rng& rng, std::uint64_t bound);

struct RandomC4FreeResult {
  Graph graph;
  bool saturated = false;  // stopped before target_m because no pair fit
};

// Random C4-free graph grown one edge at a time. Each added edge is uniform
// among the currently insertable non-edges (those closing no 4-cycle).
RandomC4FreeResult random_c4_free(std::size_t n, std::size_t target_m, std::uint64_t seed);

struct SmallGraphFilter {
  bool c4_free = false;
  int min_degree = 0;
};

// Number of vertex pairs on n vertices, in graph6 column order
// (0,1), (0,2), (1,2), (0,3), ...
std::vector<Edge> pair_order(std::size_t n);

// Streams every labeled graph on n vertices passing the filter. Edge mask bit
// k stands for pair_order(n)[k]. Throws InputError if n > 7 unless
// allow_eight is set (n = 8 walks 2^28 masks).
std::size_t enumerate_small(std::size_t n, const SmallGraphFilter& filter,
                            const std::function<void(const Graph&)>& sink,
                            bool allow_eight = false);

// The same stream restricted to edge masks in [begin, end), for sharding.
std::size_t enumerate_small_range(std::size_t n, const SmallGraphFilter& filter,
                                  std::uint64_t begin, std::uint64_t end,
                                  const std::function<void(std::uint64_t, const Graph&)>& sink);

std::uint64_t small_graph_count(std::size_t n);

}  // namespace c4part

#endif  // C4PART_CONSTRUCTIONS_HPP_
