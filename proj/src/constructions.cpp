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

#include "c4part/constructions.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <charconv>
#include <limits>
#include <optional>

#include "c4part/error.hpp"

namespace c4part {

bool is_prime(int q) {
  if (q < 2) return false;
  for (int d = 2; d * d <= q; ++d) {
    if (q % d == 0) return false;
  }
  return true;
}

PolarityGraph er_polarity(int q) {
  if (!is_prime(q)) throw InputError("polarity graph needs a prime q, got " + std::to_string(q));
  PolarityGraph out;
  out.q = q;
  auto& pts = out.point_coords;
  pts.push_back({0, 0, 1});
  for (int z = 0; z < q; ++z) pts.push_back({0, 1, z});
  for (int y = 0; y < q; ++y) {
    for (int z = 0; z < q; ++z) pts.push_back({1, y, z});
  }
  auto n = static_cast<std::int64_t>(pts.size());
  auto dot = [&](std::size_t i, std::size_t j) {
    const auto& p = pts[i];
    const auto& r = pts[j];
    return (static_cast<std::int64_t>(p[0]) * r[0] + static_cast<std::int64_t>(p[1]) * r[1] +
            static_cast<std::int64_t>(p[2]) * r[2]) % q;
  };

  std::vector<std::vector<Vertex>> later(pts.size());
#pragma omp parallel for schedule(dynamic, 64)
  for (std::int64_t i = 0; i < n; ++i) {
    for (std::int64_t j = i + 1; j < n; ++j) {
      if (dot(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) == 0) {
        later[static_cast<std::size_t>(i)].push_back(static_cast<Vertex>(j));
      }
    }
  }
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    if (dot(i, i) == 0) out.absolute_points.push_back(static_cast<Vertex>(i));
    for (Vertex j : later[i]) edges.emplace_back(static_cast<Vertex>(i), j);
  }
  out.graph = Graph::build(pts.size(), edges);
  return out;
}

namespace {

Graph cycle_graph(std::size_t n) {
  std::vector<Edge> e;
  for (std::size_t i = 0; i < n; ++i) {
    e.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>((i + 1) % n));
  }
  return Graph::build(n, e);
}

std::optional<std::size_t> parse_size_suffix(std::string_view rest) {
  if (rest.empty()) return std::nullopt;
  if (rest.front() == '(' && rest.back() == ')') {
    rest = rest.substr(1, rest.size() - 2);
  } else if (rest.front() == ':') {
    rest = rest.substr(1);
  }
  std::size_t value = 0;
  auto [ptr, ec] = std::from_chars(rest.data(), rest.data() + rest.size(), value);
  if (ec != std::errc() || ptr != rest.data() + rest.size()) return std::nullopt;
  return value;
}

[[noreturn]] void unknown_name(std::string_view name) {
  std::string msg = "unknown graph name '" + std::string(name) + "'; supported:";
  for (const auto& f : named_graph_families()) msg += " " + f;
  throw InputError(msg);
}

}  // namespace

std::vector<std::string> named_graph_families() {
  return {"triangle", "petersen", "heawood", "path<n>", "cycle<n>", "complete<n>", "star<n>"};
}

Graph named_graph(std::string_view name) {
  if (name == "triangle") return cycle_graph(3);
  if (name == "petersen") {
    std::vector<Edge> e;
    for (Vertex i = 0; i < 5; ++i) {
      e.emplace_back(i, (i + 1) % 5);
      e.emplace_back(5 + i, 5 + (i + 2) % 5);
      e.emplace_back(i, i + 5);
    }
    return Graph::build(10, e);
  }
  if (name == "heawood") {
    std::vector<Edge> e;
    for (Vertex i = 0; i < 14; ++i) {
      e.emplace_back(i, (i + 1) % 14);
      if (i % 2 == 0) e.emplace_back(i, (i + 5) % 14);
    }
    return Graph::build(14, e);
  }
  for (std::string_view family : {"path", "cycle", "complete", "star"}) {
    if (!name.starts_with(family)) continue;
    auto size = parse_size_suffix(name.substr(family.size()));
    if (!size) unknown_name(name);
    std::size_t k = *size;
    std::vector<Edge> e;
    if (family == "path") {
      for (std::size_t i = 0; i + 1 < k; ++i) {
        e.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(i + 1));
      }
      return Graph::build(k, e);
    }
    if (family == "cycle") {
      if (k < 3) throw InputError("cycle needs at least 3 vertices");
      return cycle_graph(k);
    }
    if (family == "complete") {
      for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = i + 1; j < k; ++j) {
          e.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(j));
        }
      }
      return Graph::build(k, e);
    }
    for (std::size_t i = 1; i <= k; ++i) e.emplace_back(0, static_cast<Vertex>(i));
    return Graph::build(k + 1, e);
  }
  unknown_name(name);
}

std::uint64_t uniform_below(Rng& rng, std::uint64_t bound) {
  if (bound == 0) throw InputError("uniform_below needs a positive bound");
  // Reject the top partial block so every residue is equally likely.
  std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                        std::numeric_limits<std::uint64_t>::max() % bound;
  std::uint64_t x;
  do {
    x = rng();
  } while (x >= limit);
  return x % bound;
}

RandomC4FreeResult random_c4_free(std::size_t n, std::size_t target_m, std::uint64_t seed) {
  if (n == 0) throw InputError("random_c4_free needs n >= 1");
  Rng rng(seed);
  auto pairs = pair_order(n);
  // Fisher-Yates; the first insertable pair of a uniform order is uniform
  // among the insertable ones, and rejected pairs never become insertable.
  for (std::size_t i = pairs.size(); i > 1; --i) {
    std::swap(pairs[i - 1], pairs[uniform_below(rng, i)]);
  }
  std::vector<std::vector<Vertex>> adj(n);
  std::vector<std::uint8_t> matrix(n * n, 0);
  auto linked = [&](Vertex x, Vertex y) {
    return matrix[static_cast<std::size_t>(x) * n + static_cast<std::size_t>(y)] != 0;
  };
  auto closes_four_cycle = [&](Vertex u, Vertex v) {
    for (Vertex w : adj[static_cast<std::size_t>(u)]) {
      for (Vertex x : adj[static_cast<std::size_t>(w)]) {
        if (x != u && x != v && linked(x, v)) return true;
      }
    }
    return false;
  };

  std::vector<Edge> edges;
  for (const auto& [u, v] : pairs) {
    if (edges.size() >= target_m) break;
    if (closes_four_cycle(u, v)) continue;
    adj[static_cast<std::size_t>(u)].push_back(v);
    adj[static_cast<std::size_t>(v)].push_back(u);
    matrix[static_cast<std::size_t>(u) * n + static_cast<std::size_t>(v)] = 1;
    matrix[static_cast<std::size_t>(v) * n + static_cast<std::size_t>(u)] = 1;
    edges.emplace_back(u, v);
  }
  RandomC4FreeResult out;
  out.saturated = edges.size() < target_m;
  out.graph = Graph::build(n, edges);
  return out;
}

std::vector<Edge> pair_order(std::size_t n) {
  std::vector<Edge> out;
  for (std::size_t j = 1; j < n; ++j) {
    for (std::size_t i = 0; i < j; ++i) out.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(j));
  }
  return out;
}

std::uint64_t small_graph_count(std::size_t n) {
  return std::uint64_t{1} << (n * (n - (n > 0 ? 1 : 0)) / 2);
}

std::size_t enumerate_small_range(std::size_t n, const SmallGraphFilter& filter,
                                  std::uint64_t begin, std::uint64_t end,
                                  const std::function<void(std::uint64_t, const Graph&)>& sink) {
  if (n > 8) throw InputError("small graph enumeration supports n <= 8");
  auto pairs = pair_order(n);
  end = std::min(end, small_graph_count(n));
  std::size_t emitted = 0;
  std::vector<Edge> edges;
  for (std::uint64_t mask = begin; mask < end; ++mask) {
    std::uint8_t rows[8] = {};
    for (std::size_t k = 0; k < pairs.size(); ++k) {
      if ((mask >> k) & 1u) {
        rows[pairs[k].first] |= static_cast<std::uint8_t>(1u << pairs[k].second);
        rows[pairs[k].second] |= static_cast<std::uint8_t>(1u << pairs[k].first);
      }
    }
    bool keep = true;
    for (std::size_t v = 0; v < n && keep; ++v) keep = std::popcount(rows[v]) >= filter.min_degree;
    if (keep && filter.c4_free) {
      for (std::size_t u = 0; u < n && keep; ++u) {
        for (std::size_t v = u + 1; v < n && keep; ++v) {
          keep = std::popcount(static_cast<unsigned>(rows[u] & rows[v])) < 2;
        }
      }
    }
    if (!keep) continue;
    edges.clear();
    for (std::size_t k = 0; k < pairs.size(); ++k) {
      if ((mask >> k) & 1u) edges.push_back(pairs[k]);
    }
    sink(mask, Graph::build(n, edges));
    ++emitted;
  }
  return emitted;
}

std::size_t enumerate_small(std::size_t n, const SmallGraphFilter& filter,
                            const std::function<void(const Graph&)>& sink, bool allow_eight) {
  if (n > 8 || (n == 8 && !allow_eight)) {
    throw InputError("small graph enumeration is limited to n <= 7 (n = 8 needs the override)");
  }
  return enumerate_small_range(n, filter, 0, small_graph_count(n),
                               [&](std::uint64_t, const Graph& g) { sink(g); });
}

}  // namespace c4part
