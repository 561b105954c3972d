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

// Demand-driven cores.
//
// A set S is f-good when every u in S has at least f(u) neighbours inside S.
// The f-core of S is the union of all f-good subsets of S; it is itself
// f-good and is obtained by repeatedly deleting vertices whose degree inside
// the current set is below their demand. S contains no f-good subset exactly
// when its f-core is empty, which is the same as G[S] being (f-1)-degenerate.

#ifndef C4PART_DEGENERACY_HPP_
#define C4PART_DEGENERACY_HPP_

#include <optional>
#include <utility>
#include <vector>

#include "c4part/graph.hpp"

namespace c4part {

// Per-vertex non-negative demand, indexed by vertex id.
using DemandFn = std::vector<int>;

DemandFn constant_demand(std::size_t n, int value);

// Maximal f-good subset of s (possibly empty). Deficient vertices are
// deleted from an ascending worklist.
VertexSet f_core(const Graph& g, const VertexSet& s, const DemandFn& f);

// True iff s contains no f-good subset.
bool is_degenerate(const Graph& g, const VertexSet& s, const DemandFn& f);

// An inclusion-minimal f-good subset of s, or nullopt if f_core(s) is empty.
// Descends from f_core(s) trying removals in ascending vertex order.
std::optional<VertexSet> minimal_good(const Graph& g, const VertexSet& s, const DemandFn& f);

struct Deficiency {
  Vertex vertex;
  int slack;  // f(vertex) - d_s(vertex), at least 1

  friend bool operator==(const Deficiency&, const Deficiency&) = default;
};

// Vertices of s whose degree inside s is below their demand, ascending.
std::vector<Deficiency> deficiency_set(const Graph& g, const VertexSet& s, const DemandFn& f);

// Incremental peeling over a shrinking vertex set with an undo log. Keeps
// the invariant that the live set is f-good (or empty).
class CorePeeler {
 public:
  CorePeeler(const Graph& g, const VertexSet& s, const DemandFn& f);

  const VertexSet& members() const { return live_; }
  std::size_t size() const { return live_.size(); }

  // Deletes v and cascades. v must be live.
  void remove(Vertex v);

  std::size_t checkpoint() const { return log_.size(); }
  void rollback(std::size_t mark);

 private:
  void drop(Vertex v, std::vector<Vertex>& stack);
  void cascade(std::vector<Vertex>& stack);

  const Graph& g_;
  const DemandFn& f_;
  VertexSet live_;
  std::vector<int> degree_;
  std::vector<Vertex> log_;
};

}  // namespace c4part

#endif  // C4PART_DEGENERACY_HPP_
