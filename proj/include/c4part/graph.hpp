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

#ifndef C4PART_GRAPH_HPP_
#define C4PART_GRAPH_HPP_

#include <array>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace c4part {

using Vertex = std::int32_t;
using VertexList = std::vector<Vertex>;  // sorted ascending, no duplicates
using Edge = std::pair<Vertex, Vertex>;

// Membership mask over the dense vertex range [0, n).
class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(std::size_t n) : bits_(n, 0) {}
  VertexSet(std::size_t n, std::initializer_list<Vertex> members);
  VertexSet(std::size_t n, std::span<const Vertex> members);

  static VertexSet full(std::size_t n);

  std::size_t universe() const { return bits_.size(); }
  std::size_t size() const { return count_; }
  bool empty() const { return count_ == 0; }

  bool contains(Vertex v) const { return bits_[static_cast<std::size_t>(v)] != 0; }
  void insert(Vertex v);
  void erase(Vertex v);

  VertexList to_list() const;
  VertexSet complement() const;

  friend bool operator==(const VertexSet& x, const VertexSet& y) {
    return x.bits_ == y.bits_;
  }

 private:
  std::vector<std::uint8_t> bits_;
  std::size_t count_ = 0;
};

// Four distinct vertices with w~x, x~y, y~z, z~w.
struct FourCycle {
  std::array<Vertex, 4> vertices{};

  friend bool operator==(const FourCycle&, const FourCycle&) = default;
};

// Immutable simple undirected graph on vertices 0..n-1 with sorted adjacency.
class Graph {
 public:
  Graph() = default;

  // Throws InputError naming the offending pair on a self-loop or an
  // out-of-range endpoint. Duplicate pairs collapse.
  static Graph build(std::size_t n, std::span<const Edge> edges);
  static Graph build(std::size_t n, std::initializer_list<Edge> edges);

  std::size_t order() const { return offsets_.empty() ? 0 : offsets_.size() - 1; }
  std::size_t size() const { return neighbors_.size() / 2; }

  std::span<const Vertex> neighbors(Vertex v) const {
    auto i = static_cast<std::size_t>(v);
    return {neighbors_.data() + offsets_[i], neighbors_.data() + offsets_[i + 1]};
  }
  int degree(Vertex v) const { return static_cast<int>(neighbors(v).size()); }
  int min_degree() const;
  bool adjacent(Vertex u, Vertex v) const;

  // Edges (u, v) with u < v in ascending lexicographic order.
  std::vector<Edge> edges() const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::vector<std::size_t> offsets_;
  std::vector<Vertex> neighbors_;
};

// Vertices adjacent to both u and v, ascending. Throws InputError if u == v.
VertexList common_neighbors(const Graph& g, Vertex u, Vertex v);

// Lexicographically first 4-cycle: smallest pair u < v with two common
// neighbours c1 < c2 (the two smallest), reported as (u, c1, v, c2).
std::optional<FourCycle> find_four_cycle(const Graph& g);

bool is_four_cycle(const Graph& g, const FourCycle& c);

int degree_in(const Graph& g, Vertex v, const VertexSet& s);

struct InducedSubgraph {
  Graph graph;
  VertexList to_parent;              // new id -> old id
  std::vector<Vertex> from_parent;   // old id -> new id, or -1
};

InducedSubgraph induced(const Graph& g, const VertexSet& s);

}  // namespace c4part

#endif  // C4PART_GRAPH_HPP_
