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

// Data-parallel hot loops. Each kernel has a straightforward serial reference
// that the tests compare against and the benchmark target times.

#ifndef C4PART_KERNELS_HPP_
#define C4PART_KERNELS_HPP_

#include <cstdint>
#include <optional>
#include <span>

#include "c4part/graph.hpp"

namespace c4part::kernels {

namespace serial {

// Scans every pair u < v and intersects sorted adjacency lists.
std::optional<FourCycle> four_cycle_scan(const Graph& g);

// Smallest bitmask (bit i set <=> vertex i in A, both sides non-empty) whose
// partition is feasible for (a, b), by checking every mask in ascending order.
std::optional<std::uint64_t> first_feasible_mask(const Graph& g,
                                                 std::span<const int> a,
                                                 std::span<const int> b);

}  // namespace serial

namespace parallel {

// Path counting from each u, parallel over u with a min-reduction.
std::optional<FourCycle> four_cycle_scan(const Graph& g);

// Depth-first assignment from the highest vertex down with degree pruning;
// the top levels are split into independent subtrees run in parallel.
std::optional<std::uint64_t> first_feasible_mask(const Graph& g,
                                                 std::span<const int> a,
                                                 std::span<const int> b);

}  // namespace parallel

int max_threads();

}  // namespace c4part::kernels

#endif  // C4PART_KERNELS_HPP_
