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


// Applications of the solver: k-way partitions with per-part minimum degree
// and vertex-disjoint cycle packing in C4-free graphs.

#ifndef C4PART_COROLLARIES_HPP_
#define C4PART_COROLLARIES_HPP_

#include <variant>
#include <vector>

#include "c4part/graph.hpp"
#include "c4part/solver.hpp"

namespace c4part {

// k parts where part i induces minimum degree >= s[i], for a C4-free graph
// with minimum degree >= s_1 + ... + s_k - (k - 1). Part i is split off with
// a = s_i against b = s_{i+1} + ... + s_k - (k - i - 1), then the rest
// recurses. A failing split returns its certificate; a DegreeViolation
// names the vertex and the full bound. Throws InputError on an empty graph,
// an empty list or an entry below 2.
std::variant<std::vector<VertexList>, Certificate> k_way(const Graph& g,
                                                         const std::vector<int>& s);

// k vertex-disjoint cycles (each as its vertex sequence) in a C4-free graph
// with minimum degree >= k + 1. Throws InputError if k < 1.
std::variant<std::vector<VertexList>, Certificate> disjoint_cycles(const Graph& g, int k);

// Consecutive vertices (cyclically) adjacent, all distinct, length >= 3.
bool is_cycle(const Graph& g, const VertexList& cycle);

}  // namespace c4part

#endif  // C4PART_COROLLARIES_HPP_
