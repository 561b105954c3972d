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


// Graph and demand file formats.
//
// graph6: the standard printable encoding (size header, then the upper
// triangle in column order, six bits per byte offset by 63). An optional
// ">>graph6<<" header and a trailing newline are accepted.
//
// Edge list: first line "n m", then m lines "u v" with 0-based ids. '#'
// starts a comment; blank lines are ignored. Duplicates are rejected.
//
// Demands: a JSON object with "a_const" or an "a" array, and "b_const" or a
// "b" array. Every value must be an integer >= 2.

#ifndef C4PART_IO_HPP_
#define C4PART_IO_HPP_

#include <string>
#include <string_view>

#include "c4part/graph.hpp"
#include "c4part/partition.hpp"

namespace c4part {

// Throws ParseError with the byte offset of the first bad byte.
Graph parse_graph6(std::string_view text);
std::string encode_graph6(const Graph& g);

// Throws ParseError with a 1-based line number.
Graph parse_edge_list(std::string_view text);
std::string write_edge_list(const Graph& g);

enum class GraphFormat { kAuto, kGraph6, kEdgeList };

// kAuto picks the edge-list reader when the first content line holds two
// integers.
Graph parse_graph(std::string_view text, GraphFormat format = GraphFormat::kAuto);

// Throws InputError naming the key and index of a bad value.
DemandPair parse_demands(std::string_view doc, std::size_t n);

// One side's values from a JSON array, or from an object holding `key` (an
// array) or `key` + "_const".
DemandFn parse_demand_values(std::string_view doc, const std::string& key, std::size_t n);

}  // namespace c4part

#endif  // C4PART_IO_HPP_
