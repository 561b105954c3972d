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

#ifndef C4PART_PARTITION_HPP_
#define C4PART_PARTITION_HPP_

#include <cstdint>
#include <vector>

#include "c4part/degeneracy.hpp"
#include "c4part/graph.hpp"

namespace c4part {

enum class Side : std::uint8_t { kA = 0, kB = 1 };

constexpr Side other(Side s) { return s == Side::kA ? Side::kB : Side::kA; }
constexpr int index(Side s) { return static_cast<int>(s); }
constexpr char side_name(Side s) { return s == Side::kA ? 'A' : 'B'; }

// Demand functions for the two sides. The A side must reach a(x), the B side
// b(x).
struct DemandPair {
  DemandFn a;
  DemandFn b;

  const DemandFn& of(Side s) const { return s == Side::kA ? a : b; }

  // d_G(x) - a(x) - b(x) + 1; zero everywhere after normalization.
  std::vector<int> slack(const Graph& g) const;
};

// Bipartition with cached side degrees and the potential
//   w(A, B) = e(G[A]) + e(G[B]) + sum_{x in A} b(x) + sum_{x in B} a(x).
// Keeps pointers to the graph and demands, which must outlive it.
class Partition {
 public:
  // Throws InputError if a side is empty or lengths disagree.
  Partition(const Graph& g, const DemandPair& d, std::vector<Side> sides);
  static Partition from_set(const Graph& g, const DemandPair& d, const VertexSet& a_side);

  const Graph& graph() const { return *g_; }
  const DemandPair& demands() const { return *d_; }
  std::size_t order() const { return side_.size(); }

  Side side(Vertex x) const { return side_[static_cast<std::size_t>(x)]; }
  const std::vector<Side>& sides() const { return side_; }

  // d_S(x): neighbours of x on side s.
  int degree_into(Vertex x, Side s) const {
    return deg_[index(s)][static_cast<std::size_t>(x)];
  }
  int own_degree(Vertex x) const { return degree_into(x, side(x)); }
  int demand(Vertex x, Side s) const { return d_->of(s)[static_cast<std::size_t>(x)]; }
  int own_demand(Vertex x) const { return demand(x, side(x)); }

  // Demand minus own-side degree; positive exactly on A* and B*.
  int slack(Vertex x) const { return own_demand(x) - own_degree(x); }
  bool deficient(Vertex x) const { return slack(x) > 0; }

  std::size_t count(Side s) const { return count_[index(s)]; }
  VertexSet members(Side s) const;
  VertexList member_list(Side s) const;
  // A* (or B*) with slacks, ascending.
  std::vector<Deficiency> deficient_set(Side s) const;
  VertexList deficient_list(Side s) const;

  std::int64_t weight() const { return weight_; }
  std::int64_t recompute_weight() const;

  // Moves x to the other side (may leave a side empty; callers check).
  void move(Vertex x);
  // Exchanges x and y, which must be on different sides.
  void exchange(Vertex x, Vertex y);

  // Both sides non-empty and neither contains a good subset for its demand.
  bool is_ab_partition() const;
  bool side_degenerate(Side s) const;

  friend bool operator==(const Partition& x, const Partition& y) {
    return x.side_ == y.side_;
  }

 private:
  const Graph* g_;
  const DemandPair* d_;
  std::vector<Side> side_;
  std::vector<int> deg_[2];
  std::size_t count_[2] = {0, 0};
  std::int64_t weight_ = 0;
};

std::int64_t weight(const Graph& g, const DemandPair& d, const Partition& p);

}  // namespace c4part

#endif  // C4PART_PARTITION_HPP_
