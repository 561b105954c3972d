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

#include "c4part/graph.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "c4part/error.hpp"
#include "c4part/kernels.hpp"

namespace c4part {

VertexSet::VertexSet(std::size_t n, std::initializer_list<Vertex> members)
    : VertexSet(n, std::span<const Vertex>(members.begin(), members.size())) {}

VertexSet::VertexSet(std::size_t n, std::span<const Vertex> members) : bits_(n, 0) {
  for (Vertex v : members) {
    if (v < 0 || static_cast<std::size_t>(v) >= n) {
      throw InputError("vertex " + std::to_string(v) + " outside [0, " +
                       std::to_string(n) + ")");
    }
    insert(v);
  }
}

VertexSet VertexSet::full(std::size_t n) {
  VertexSet s(n);
  std::fill(s.bits_.begin(), s.bits_.end(), 1);
  s.count_ = n;
  return s;
}

void VertexSet::insert(Vertex v) {
  auto& bit = bits_[static_cast<std::size_t>(v)];
  if (!bit) {
    bit = 1;
    ++count_;
  }
}

void VertexSet::erase(Vertex v) {
  auto& bit = bits_[static_cast<std::size_t>(v)];
  if (bit) {
    bit = 0;
    --count_;
  }
}

VertexList VertexSet::to_list() const {
  VertexList out;
  out.reserve(count_);
  for (std::size_t i = 0; i < bits_.size(); ++i) {
    if (bits_[i]) out.push_back(static_cast<Vertex>(i));
  }
  return out;
}

VertexSet VertexSet::complement() const {
  VertexSet s(bits_.size());
  for (std::size_t i = 0; i < bits_.size(); ++i) {
    if (!bits_[i]) s.insert(static_cast<Vertex>(i));
  }
  return s;
}

Graph Graph::build(std::size_t n, std::initializer_list<Edge> edges) {
  return build(n, std::span<const Edge>(edges.begin(), edges.size()));
}

Graph Graph::build(std::size_t n, std::span<const Edge> edges) {
  if (n > static_cast<std::size_t>(std::numeric_limits<Vertex>::max())) {
    throw InputError("graph order too large");
  }
  std::vector<std::vector<Vertex>> adj(n);
  for (const auto& [u, v] : edges) {
    auto pair_name = "(" + std::to_string(u) + ", " + std::to_string(v) + ")";
    if (u < 0 || v < 0 || static_cast<std::size_t>(u) >= n ||
        static_cast<std::size_t>(v) >= n) {
      throw InputError("edge " + pair_name + " has an endpoint outside [0, " +
                       std::to_string(n) + ")");
    }
    if (u == v) throw InputError("edge " + pair_name + " is a self-loop");
    adj[static_cast<std::size_t>(u)].push_back(v);
    adj[static_cast<std::size_t>(v)].push_back(u);
  }
  Graph g;
  g.offsets_.assign(n + 1, 0);
  for (std::size_t v = 0; v < n; ++v) {
    auto& list = adj[v];
    std::sort(list.begin(), list.end());
    list.erase(std::unique(list.begin(), list.end()), list.end());
    g.offsets_[v + 1] = g.offsets_[v] + list.size();
  }
  g.neighbors_.reserve(g.offsets_[n]);
  for (auto& list : adj) g.neighbors_.insert(g.neighbors_.end(), list.begin(), list.end());
  return g;
}

int Graph::min_degree() const {
  int best = std::numeric_limits<int>::max();
  for (std::size_t v = 0; v < order(); ++v) best = std::min(best, degree(static_cast<Vertex>(v)));
  return order() == 0 ? 0 : best;
}

bool Graph::adjacent(Vertex u, Vertex v) const {
  auto nu = neighbors(u);
  return std::binary_search(nu.begin(), nu.end(), v);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(size());
  for (std::size_t u = 0; u < order(); ++u) {
    for (Vertex v : neighbors(static_cast<Vertex>(u))) {
      if (static_cast<Vertex>(u) < v) out.emplace_back(static_cast<Vertex>(u), v);
    }
  }
  return out;
}

VertexList common_neighbors(const Graph& g, Vertex u, Vertex v) {
  if (u == v) throw InputError("common_neighbors requires distinct vertices");
  auto nu = g.neighbors(u);
  auto nv = g.neighbors(v);
  VertexList out;
  std::set_intersection(nu.begin(), nu.end(), nv.begin(), nv.end(), std::back_inserter(out));
  return out;
}

std::optional<FourCycle> find_four_cycle(const Graph& g) {
  return kernels::parallel::four_cycle_scan(g);
}

bool is_four_cycle(const Graph& g, const FourCycle& c) {
  const auto& v = c.vertices;
  for (int i = 0; i < 4; ++i) {
    if (v[i] < 0 || static_cast<std::size_t>(v[i]) >= g.order()) return false;
    for (int j = i + 1; j < 4; ++j) {
      if (v[i] == v[j]) return false;
    }
  }
  for (int i = 0; i < 4; ++i) {
    if (!g.adjacent(v[i], v[(i + 1) % 4])) return false;
  }
  return true;
}

int degree_in(const Graph& g, Vertex v, const VertexSet& s) {
  int d = 0;
  for (Vertex w : g.neighbors(v)) d += s.contains(w) ? 1 : 0;
  return d;
}

InducedSubgraph induced(const Graph& g, const VertexSet& s) {
  InducedSubgraph out;
  out.from_parent.assign(g.order(), -1);
  for (std::size_t v = 0; v < g.order(); ++v) {
    if (s.contains(static_cast<Vertex>(v))) {
      out.from_parent[v] = static_cast<Vertex>(out.to_parent.size());
      out.to_parent.push_back(static_cast<Vertex>(v));
    }
  }
  std::vector<Edge> edges;
  for (Vertex old_u : out.to_parent) {
    for (Vertex old_v : g.neighbors(old_u)) {
      if (old_u < old_v && s.contains(old_v)) {
        edges.emplace_back(out.from_parent[static_cast<std::size_t>(old_u)],
                           out.from_parent[static_cast<std::size_t>(old_v)]);
      }
    }
  }
  out.graph = Graph::build(out.to_parent.size(), edges);
  return out;
}

}  // namespace c4part
