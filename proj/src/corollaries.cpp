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


#include "c4part/corollaries.hpp"

#include <numeric>
#include <unordered_map>

#include "c4part/error.hpp"

namespace c4part {

namespace {

std::optional<DegreeViolation> below(const Graph& g, int need) {
  for (std::size_t i = 0; i < g.order(); ++i) {
    auto v = static_cast<Vertex>(i);
    if (g.degree(v) < need) return DegreeViolation{v, g.degree(v), need};
  }
  return std::nullopt;
}

// Walks from the smallest vertex of `part` without stepping straight back
// until a vertex repeats; the loop closed there is the cycle.
VertexList cycle_in(const Graph& g, const VertexSet& part) {
  auto members = part.to_list();
  std::unordered_map<Vertex, std::size_t> seen;
  VertexList walk;
  Vertex prev = -1;
  Vertex cur = members.front();
  while (!seen.count(cur)) {
    seen.emplace(cur, walk.size());
    walk.push_back(cur);
    Vertex next = -1;
    for (Vertex w : g.neighbors(cur)) {
      if (w != prev && part.contains(w)) {
        next = w;
        break;
      }
    }
    if (next < 0) throw InternalError("cycle walk hit a vertex of degree below 2");
    prev = cur;
    cur = next;
  }
  return VertexList(walk.begin() + static_cast<std::ptrdiff_t>(seen[cur]), walk.end());
}

}  // namespace

std::variant<std::vector<VertexList>, Certificate> k_way(const Graph& g,
                                                         const std::vector<int>& s) {
  if (g.order() == 0) throw InputError("k_way needs a non-empty graph");
  if (s.empty()) throw InputError("k_way needs at least one demand");
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] < 2) throw InputError("k_way demand below 2 at position " + std::to_string(i));
  }
  int total = std::accumulate(s.begin(), s.end(), 0) - static_cast<int>(s.size() - 1);
  if (auto v = below(g, total)) return Certificate{*v};
  if (s.size() == 1) {
    VertexList all(g.order());
    std::iota(all.begin(), all.end(), 0);
    return std::vector<VertexList>{all};
  }
  int rest = total - s[0] + 1;
  auto solved = solve(g, DemandFn(g.order(), s[0]), DemandFn(g.order(), rest));
  const auto* fp = solved.certificate.partition();
  if (!fp) return solved.certificate;
  VertexSet b_side(g.order(), std::span<const Vertex>(fp->b_part));
  auto sub = induced(g, b_side);
  auto deeper = k_way(sub.graph, std::vector<int>(s.begin() + 1, s.end()));
  if (auto* cert = std::get_if<Certificate>(&deeper)) {
    // Only a solver failure can surface here; map any witness back.
    if (auto* c = std::get_if<FourCycle>(&cert->value)) {
      for (Vertex& x : c->vertices) x = sub.to_parent[static_cast<std::size_t>(x)];
    } else if (auto* d = std::get_if<DegreeViolation>(&cert->value)) {
      d->vertex = sub.to_parent[static_cast<std::size_t>(d->vertex)];
    }
    return *cert;
  }
  std::vector<VertexList> parts{fp->a_part};
  for (auto& part : std::get<std::vector<VertexList>>(deeper)) {
    for (Vertex& x : part) x = sub.to_parent[static_cast<std::size_t>(x)];
    parts.push_back(std::move(part));
  }
  return parts;
}

std::variant<std::vector<VertexList>, Certificate> disjoint_cycles(const Graph& g, int k) {
  if (k < 1) throw InputError("disjoint_cycles needs k >= 1");
  if (g.order() == 0) throw InputError("disjoint_cycles needs a non-empty graph");
  if (auto v = below(g, k + 1)) return Certificate{*v};
  if (auto c = find_four_cycle(g)) return Certificate{*c};
  auto parts = k_way(g, std::vector<int>(static_cast<std::size_t>(k), 2));
  if (auto* cert = std::get_if<Certificate>(&parts)) return *cert;
  std::vector<VertexList> cycles;
  for (const auto& part : std::get<std::vector<VertexList>>(parts)) {
    VertexList c = cycle_in(g, VertexSet(g.order(), std::span<const Vertex>(part)));
    if (!is_cycle(g, c)) throw InternalError("extracted walk is not a cycle");
    cycles.push_back(std::move(c));
  }
  return cycles;
}

bool is_cycle(const Graph& g, const VertexList& cycle) {
  if (cycle.size() < 3) return false;
  VertexSet seen(g.order());
  for (std::size_t i = 0; i < cycle.size(); ++i) {
    Vertex x = cycle[i];
    if (x < 0 || static_cast<std::size_t>(x) >= g.order() || seen.contains(x)) return false;
    seen.insert(x);
    if (!g.adjacent(x, cycle[(i + 1) % cycle.size()])) return false;
  }
  return true;
}

}  // namespace c4part
