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

#include "c4part/partition.hpp"

#include <cassert>
#include <utility>

#include "c4part/error.hpp"

namespace c4part {

std::vector<int> DemandPair::slack(const Graph& g) const {
  std::vector<int> out(g.order());
  for (std::size_t i = 0; i < g.order(); ++i) {
    out[i] = g.degree(static_cast<Vertex>(i)) - a[i] - b[i] + 1;
  }
  return out;
}

Partition::Partition(const Graph& g, const DemandPair& d, std::vector<Side> sides)
    : g_(&g), d_(&d), side_(std::move(sides)) {
  auto n = g.order();
  if (side_.size() != n || d.a.size() != n || d.b.size() != n) {
    throw InputError("partition / demand length does not match graph order");
  }
  deg_[0].assign(n, 0);
  deg_[1].assign(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    ++count_[index(side_[i])];
    for (Vertex w : g.neighbors(static_cast<Vertex>(i))) ++deg_[index(side(w))][i];
  }
  if (count_[0] == 0 || count_[1] == 0) throw InputError("partition has an empty side");
  weight_ = recompute_weight();
}

Partition Partition::from_set(const Graph& g, const DemandPair& d, const VertexSet& a_side) {
  std::vector<Side> sides(g.order(), Side::kB);
  for (Vertex v : a_side.to_list()) sides[static_cast<std::size_t>(v)] = Side::kA;
  return Partition(g, d, std::move(sides));
}

VertexSet Partition::members(Side s) const {
  VertexSet out(order());
  for (std::size_t i = 0; i < order(); ++i) {
    if (side_[i] == s) out.insert(static_cast<Vertex>(i));
  }
  return out;
}

VertexList Partition::member_list(Side s) const {
  VertexList out;
  for (std::size_t i = 0; i < order(); ++i) {
    if (side_[i] == s) out.push_back(static_cast<Vertex>(i));
  }
  return out;
}

std::vector<Deficiency> Partition::deficient_set(Side s) const {
  std::vector<Deficiency> out;
  for (std::size_t i = 0; i < order(); ++i) {
    auto v = static_cast<Vertex>(i);
    if (side_[i] == s && deficient(v)) out.push_back({v, slack(v)});
  }
  return out;
}

VertexList Partition::deficient_list(Side s) const {
  VertexList out;
  for (const auto& d : deficient_set(s)) out.push_back(d.vertex);
  return out;
}

std::int64_t Partition::recompute_weight() const {
  std::int64_t inside = 0;
  std::int64_t demand_sum = 0;
  for (std::size_t i = 0; i < order(); ++i) {
    auto v = static_cast<Vertex>(i);
    inside += own_degree(v);
    demand_sum += demand(v, other(side(v)));
  }
  return inside / 2 + demand_sum;
}

void Partition::move(Vertex x) {
  auto xi = static_cast<std::size_t>(x);
  Side from = side_[xi];
  Side to = other(from);
  weight_ += deg_[index(to)][xi] - deg_[index(from)][xi];
  weight_ += demand(x, from) - demand(x, to);
  for (Vertex w : g_->neighbors(x)) {
    auto wi = static_cast<std::size_t>(w);
    --deg_[index(from)][wi];
    ++deg_[index(to)][wi];
  }
  side_[xi] = to;
  --count_[index(from)];
  ++count_[index(to)];
  assert(weight_ == recompute_weight());
}

void Partition::exchange(Vertex x, Vertex y) {
  if (side(x) == side(y)) throw InputError("exchange needs vertices on different sides");
  move(x);
  move(y);
}

bool Partition::side_degenerate(Side s) const {
  return is_degenerate(*g_, members(s), d_->of(s));
}

bool Partition::is_ab_partition() const {
  return count_[0] > 0 && count_[1] > 0 && side_degenerate(Side::kA) &&
         side_degenerate(Side::kB);
}

std::int64_t weight(const Graph& g, const DemandPair& d, const Partition& p) {
  if (&p.graph() != &g || &p.demands() != &d) {
    return Partition(g, d, p.sides()).recompute_weight();
  }
  return p.recompute_weight();
}

}  // namespace c4part
