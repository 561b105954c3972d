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

#include "c4part/kernels.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <limits>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "c4part/error.hpp"

namespace c4part::kernels {

namespace {

constexpr std::size_t kMaskLimit = 24;

std::vector<std::uint32_t> adjacency_masks(const Graph& g) {
  std::vector<std::uint32_t> rows(g.order(), 0);
  for (std::size_t v = 0; v < g.order(); ++v) {
    for (Vertex w : g.neighbors(static_cast<Vertex>(v))) rows[v] |= 1u << w;
  }
  return rows;
}

void check_mask_inputs(const Graph& g, std::span<const int> a, std::span<const int> b) {
  if (g.order() > kMaskLimit) throw InputError("feasibility enumeration limited to n <= 24");
  if (a.size() != g.order() || b.size() != g.order()) {
    throw InputError("demand length does not match graph order");
  }
}

// Witness for a fixed u: smallest v > u with two common neighbours.
std::optional<FourCycle> witness_from(const Graph& g, Vertex u, std::vector<int>& count,
                                      std::vector<Vertex>& touched) {
  touched.clear();
  for (Vertex w : g.neighbors(u)) {
    for (Vertex v : g.neighbors(w)) {
      if (v <= u) continue;
      if (count[static_cast<std::size_t>(v)]++ == 0) touched.push_back(v);
    }
  }
  Vertex best = -1;
  for (Vertex v : touched) {
    if (count[static_cast<std::size_t>(v)] >= 2 && (best < 0 || v < best)) best = v;
    count[static_cast<std::size_t>(v)] = 0;
  }
  if (best < 0) return std::nullopt;
  auto common = common_neighbors(g, u, best);
  return FourCycle{{u, common[0], best, common[1]}};
}

class PrunedSearch {
 public:
  PrunedSearch(const Graph& g, std::span<const int> a, std::span<const int> b)
      : g_(g), a_(a), b_(b), n_(static_cast<int>(g.order())),
        side_(g.order(), -1), into_(2, std::vector<int>(g.order(), 0)) {}

  // Assigns vertices n-1 down to n-depth from the bits of `prefix` (bit depth-1
  // is vertex n-1). Returns false if the prefix is already infeasible.
  bool apply_prefix(std::uint64_t prefix, int depth) {
    for (int i = 0; i < depth; ++i) {
      Vertex v = n_ - 1 - i;
      int s = static_cast<int>((prefix >> (depth - 1 - i)) & 1u);
      if (!assign(v, s)) return false;
    }
    next_ = n_ - 1 - depth;
    return true;
  }

  std::optional<std::uint64_t> run() { return dfs(next_); }

 private:
  int demand(Vertex v, int s) const {
    return s == 1 ? a_[static_cast<std::size_t>(v)] : b_[static_cast<std::size_t>(v)];
  }

  bool satisfiable(Vertex v) const {
    int s = side_[static_cast<std::size_t>(v)];
    return g_.degree(v) - into_[1 - s][static_cast<std::size_t>(v)] >= demand(v, s);
  }

  bool assign(Vertex v, int s) {
    side_[static_cast<std::size_t>(v)] = s;
    bool ok = true;
    for (Vertex w : g_.neighbors(v)) {
      ++into_[s][static_cast<std::size_t>(w)];
      if (side_[static_cast<std::size_t>(w)] >= 0 && !satisfiable(w)) ok = false;
    }
    return ok && satisfiable(v);
  }

  void unassign(Vertex v) {
    int s = side_[static_cast<std::size_t>(v)];
    for (Vertex w : g_.neighbors(v)) --into_[s][static_cast<std::size_t>(w)];
    side_[static_cast<std::size_t>(v)] = -1;
  }

  std::optional<std::uint64_t> dfs(Vertex v) {
    if (v < 0) {
      std::uint64_t mask = 0;
      for (int i = 0; i < n_; ++i) {
        if (side_[static_cast<std::size_t>(i)] == 1) mask |= std::uint64_t{1} << i;
      }
      std::uint64_t full = (std::uint64_t{1} << n_) - 1;
      if (mask == 0 || mask == full) return std::nullopt;
      return mask;
    }
    for (int s = 0; s < 2; ++s) {
      bool ok = assign(v, s);
      std::optional<std::uint64_t> found;
      if (ok) found = dfs(v - 1);
      unassign(v);
      if (found) return found;
    }
    return std::nullopt;
  }

  const Graph& g_;
  std::span<const int> a_, b_;
  int n_;
  Vertex next_ = -1;
  std::vector<int> side_;
  std::vector<std::vector<int>> into_;
};

}  // namespace

int max_threads() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

namespace serial {

std::optional<FourCycle> four_cycle_scan(const Graph& g) {
  auto n = static_cast<Vertex>(g.order());
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      auto nu = g.neighbors(u);
      auto nv = g.neighbors(v);
      Vertex found[2];
      int k = 0;
      for (auto i = nu.begin(), j = nv.begin(); i != nu.end() && j != nv.end() && k < 2;) {
        if (*i < *j) {
          ++i;
        } else if (*j < *i) {
          ++j;
        } else {
          found[k++] = *i;
          ++i;
          ++j;
        }
      }
      if (k == 2) return FourCycle{{u, found[0], v, found[1]}};
    }
  }
  return std::nullopt;
}

std::optional<std::uint64_t> first_feasible_mask(const Graph& g, std::span<const int> a,
                                                 std::span<const int> b) {
  check_mask_inputs(g, a, b);
  auto n = g.order();
  if (n < 2) return std::nullopt;
  auto rows = adjacency_masks(g);
  std::uint64_t full = (std::uint64_t{1} << n) - 1;
  for (std::uint64_t mask = 1; mask < full; ++mask) {
    bool ok = true;
    for (std::size_t v = 0; v < n && ok; ++v) {
      bool in_a = (mask >> v) & 1u;
      auto own = static_cast<std::uint32_t>(in_a ? mask : (~mask & full));
      int d = std::popcount(rows[v] & own);
      ok = d >= (in_a ? a[v] : b[v]);
    }
    if (ok) return mask;
  }
  return std::nullopt;
}

}  // namespace serial

namespace parallel {

std::optional<FourCycle> four_cycle_scan(const Graph& g) {
  auto n = static_cast<Vertex>(g.order());
  std::atomic<Vertex> best_u{std::numeric_limits<Vertex>::max()};
  std::vector<std::optional<FourCycle>> per_thread(static_cast<std::size_t>(max_threads()));

#pragma omp parallel
  {
    std::vector<int> count(g.order(), 0);
    std::vector<Vertex> touched;
    std::optional<FourCycle> mine;
#pragma omp for schedule(dynamic, 16)
    for (Vertex u = 0; u < n; ++u) {
      if (u > best_u.load(std::memory_order_relaxed)) continue;
      if (auto c = witness_from(g, u, count, touched)) {
        if (!mine || u < mine->vertices[0]) mine = c;
        Vertex cur = best_u.load();
        while (u < cur && !best_u.compare_exchange_weak(cur, u)) {
        }
      }
    }
#ifdef _OPENMP
    per_thread[static_cast<std::size_t>(omp_get_thread_num())] = mine;
#else
    per_thread[0] = mine;
#endif
  }

  std::optional<FourCycle> out;
  for (const auto& c : per_thread) {
    if (c && (!out || c->vertices[0] < out->vertices[0])) out = c;
  }
  return out;
}

std::optional<std::uint64_t> first_feasible_mask(const Graph& g, std::span<const int> a,
                                                 std::span<const int> b) {
  check_mask_inputs(g, a, b);
  int n = static_cast<int>(g.order());
  if (n < 2) return std::nullopt;
  int depth = std::min(n, 6);
  auto prefixes = static_cast<std::int64_t>(1) << depth;
  std::vector<std::optional<std::uint64_t>> found(static_cast<std::size_t>(prefixes));
  std::atomic<std::int64_t> best{prefixes};

#pragma omp parallel for schedule(dynamic, 1)
  for (std::int64_t p = 0; p < prefixes; ++p) {
    if (p > best.load(std::memory_order_relaxed)) continue;
    PrunedSearch search(g, a, b);
    if (!search.apply_prefix(static_cast<std::uint64_t>(p), depth)) continue;
    found[static_cast<std::size_t>(p)] = search.run();
    if (found[static_cast<std::size_t>(p)]) {
      std::int64_t cur = best.load();
      while (p < cur && !best.compare_exchange_weak(cur, p)) {
      }
    }
  }
  for (const auto& f : found) {
    if (f) return f;
  }
  return std::nullopt;
}

}  // namespace parallel

}  // namespace c4part::kernels
