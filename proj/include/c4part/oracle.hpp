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


// Brute-force ground truth for the solver.

#ifndef C4PART_ORACLE_HPP_
#define C4PART_ORACLE_HPP_

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "c4part/graph.hpp"
#include "c4part/partition.hpp"

namespace c4part {

// Sides for the mask convention of the oracle: bit i set <=> i in A.
std::vector<Side> sides_from_mask(std::size_t n, std::uint64_t mask);

// The feasible partition whose A-side bitmask is smallest, or nullopt.
// Throws InputError if n > 24 or lengths disagree.
std::optional<std::vector<Side>> exists_feasible(const Graph& g, const DemandFn& a,
                                                 const DemandFn& b);

// Demands with d(x) = a(x) + b(x) - 2 everywhere and a, b >= 2.
struct TightnessInstance {
  std::shared_ptr<const Graph> graph;
  DemandFn a;
  DemandFn b;
  std::vector<int> slack_check;  // d(x) - a(x) - b(x) + 2

  // Throws InputError naming the first vertex breaking the invariants.
  static TightnessInstance make(std::shared_ptr<const Graph> g, DemandFn a, DemandFn b);
};

// True iff the instance admits no feasible partition.
bool verify_tightness(const TightnessInstance& inst);

// Every tight split a(x) + b(x) = d(x) + 2 with no feasible partition, in
// lexicographic order of a. Empty if some vertex has degree below 2. Throws
// InputError if n > 16. At most `limit` instances are returned; `total`
// receives the full count when given.
std::vector<TightnessInstance> search_tight_functions(const Graph& g,
                                                      std::size_t limit = SIZE_MAX,
                                                      std::uint64_t* total = nullptr);

struct CrosscheckOptions {
  std::size_t n_max = 7;
  std::vector<std::pair<int, int>> grid = {{2, 2}, {2, 3}, {3, 2}, {3, 3}};
  bool allow_eight = false;
};

struct CrosscheckEntry {
  int a = 0;
  int b = 0;
  std::uint64_t instances = 0;  // graphs with min degree >= a + b - 1
  std::uint64_t solver_feasible = 0;
  std::uint64_t oracle_feasible = 0;
  std::uint64_t plateau_episodes = 0;
};

struct Discrepancy {
  std::size_t n = 0;
  std::vector<Edge> edges;
  int a = 0;  // constant demands; 0 when per-vertex
  int b = 0;
  std::string reason;
  DemandFn a_values;  // per-vertex demands (stress only)
  DemandFn b_values;
  std::vector<Side> start;  // random start, when used
  std::vector<std::string> trace;
};

struct CrosscheckReport {
  std::vector<std::uint64_t> c4_free_graphs;  // per n = 1..n_max
  std::vector<CrosscheckEntry> entries;       // one per grid point
  std::vector<Discrepancy> discrepancies;
};

// Solver against oracle on every labeled C4-free graph with n <= n_max.
// Throws InputError if n_max > 7 (8 with allow_eight) or a grid value < 2.
CrosscheckReport crosscheck(const CrosscheckOptions& opt);

struct StressOptions {
  std::size_t instances = 200;
  std::size_t n_min = 8;
  std::size_t n_max = 22;
  std::uint64_t seed = 1;
  bool random_starts = true;
};

struct StressReport {
  std::uint64_t instances = 0;
  std::uint64_t oracle_checked = 0;
  std::uint64_t plateau_episodes = 0;
  std::uint64_t plateau_exchanges = 0;
  // Solver trace lines reduced to their leading words, with counts.
  std::map<std::string, std::uint64_t> events;
  std::vector<Discrepancy> discrepancies;
};

// Leading words of a trace line, up to the first number or "key=value";
// "primary" lines keep both configuration kinds.
std::string trace_event(const std::string& line);

// Random C4-free graphs cut down to their 3-core, random per-vertex demands
// meeting the degree bound, solved from the initial partition and (with
// random_starts) from a random ab-partition. Oracle agreement for n <= 24.
StressReport stress(const StressOptions& opt);

}  // namespace c4part

#endif  // C4PART_ORACLE_HPP_
