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

// Certified partitioning of C4-free graphs under minimum-degree demands.
//
// Given demands a, b >= 2 with d(x) >= a(x) + b(x) - 1 everywhere, solve()
// returns a partition (A, B) where every x in A has at least a(x) neighbours
// in A and every x in B at least b(x) in B, or a certificate explaining why
// the hypotheses fail (a degree violation or a 4-cycle).
//
// The search works on "ab-partitions": partitions in which neither side
// contains a good subset for its own demand. It hill-climbs the potential
// w(A, B) (see Partition) with three move types. At a local maximum the
// deficient sets A* and B* are probed; every probe either finds a disjoint
// good pair (which extends to a feasible partition), a strictly heavier
// ab-partition, or a 4-cycle. Probes may walk through equal-weight
// "plateau" exchanges; each exchanged partition is re-validated before use.

#ifndef C4PART_SOLVER_HPP_
#define C4PART_SOLVER_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "c4part/degeneracy.hpp"
#include "c4part/graph.hpp"
#include "c4part/partition.hpp"

namespace c4part {

// Disjoint a-good / b-good sets.
struct FeasiblePair {
  VertexSet a_part;
  VertexSet b_part;
};

struct FeasiblePartition {
  std::vector<Side> sides;
  VertexList a_part;
  VertexList b_part;
};

struct DegreeViolation {
  Vertex vertex = -1;
  int degree = 0;
  int required = 0;  // a + b - 1

  friend bool operator==(const DegreeViolation&, const DegreeViolation&) = default;
};

struct Diagnostic {
  std::string reason;
  std::vector<std::string> trace;
};

enum class Status { kFeasible, kFourCycle, kDegreeViolation, kDiagnostic };

std::string status_name(Status s);

struct Certificate {
  std::variant<FeasiblePartition, FourCycle, DegreeViolation, Diagnostic> value;

  Status status() const { return static_cast<Status>(value.index()); }
  const FeasiblePartition* partition() const { return std::get_if<FeasiblePartition>(&value); }
  const FourCycle* four_cycle() const { return std::get_if<FourCycle>(&value); }
  const DegreeViolation* violation() const { return std::get_if<DegreeViolation>(&value); }
  const Diagnostic* diagnostic() const { return std::get_if<Diagnostic>(&value); }
};

// --- probe results --------------------------------------------------------

struct Improve {
  Partition partition;
  std::string move;
};

struct Refine {
  std::vector<std::string> facts;
  std::optional<Partition> plateau;    // equal-weight partition reached, if any
  std::optional<Side> singleton_side;  // side whose deficient set is a single vertex
};

using ProbeOutcome = std::variant<Improve, FeasiblePair, FourCycle, Refine>;

// Local patterns of exact-demand vertices around the deficient set P* of a
// side P at a blocked state. Witness slots:
//   kSharedAnchor     u1, u2 exact, both adjacent to anchor u in P*
//   kDistinctAnchors  u1 ~ u, u2 ~ u_prime, with u != u_prime in P*
//   kPath             u1 ~ u2, u1 ~ u in P*, u2 has no neighbour in P*
//   kTriangle         u1, u2, u form a triangle, u2 has demand + 1 inside P
//   kPathDistinct     u1 ~ u2, u1 ~ u, u2 ~ u_prime != u, u2 has demand + 1
enum class ConfigKind { kSharedAnchor = 1, kDistinctAnchors, kPath, kTriangle, kPathDistinct };

std::string config_kind_name(ConfigKind k);

struct Configuration {
  Side side = Side::kA;
  ConfigKind kind = ConfigKind::kSharedAnchor;
  Vertex u1 = -1;
  Vertex u = -1;
  Vertex u2 = -1;
  Vertex u_prime = -1;  // equals u for kSharedAnchor / kTriangle, -1 for kPath
};

// u1 ~ u ~ v ~ v1 with u in A*, v in B*, u1 an exact vertex of A and v1 an
// exact vertex of B.
struct SpecialPath {
  Vertex u1 = -1;
  Vertex u = -1;
  Vertex v = -1;
  Vertex v1 = -1;
};

using ConfigurationResult = std::variant<Configuration, FeasiblePair, FourCycle, Diagnostic>;

struct SolveStats {
  std::int64_t iterations = 0;
  std::int64_t improving_moves = 0;
  std::int64_t plateau_episodes = 0;
  std::int64_t plateau_exchanges = 0;
  std::int64_t probes = 0;
};

struct SolveResult {
  Certificate certificate;
  SolveStats stats;
  std::vector<std::string> trace;  // moves, probes and exchanges, in order
};

// --- operations -------------------------------------------------------------

// DegreeViolation for the smallest vertex with d(x) < a(x) + b(x) - 1, else a
// 4-cycle witness if one exists, else nullopt. Throws InputError if a demand
// is below 2 or lengths disagree.
std::optional<Certificate> verify_hypotheses(const Graph& g, const DemandPair& d);

// Raises a so that d(x) = a(x) + b(x) - 1 exactly; b is unchanged.
DemandPair normalize(const Graph& g, const DemandPair& d);

std::int64_t weight(const Graph& g, const DemandPair& d, const Partition& p);

// Weight change from moving x to the other side: 2 * slack - 1. Requires
// normalized demands.
std::int64_t delta_move(const Partition& p, Vertex x);

// Weight change from exchanging u and v (opposite sides):
// 2 * (slack(u) + slack(v) - 1 - [u ~ v]).
std::int64_t delta_swap(const Partition& p, Vertex u, Vertex v);

// Grows a feasible pair into a feasible partition: vertices outside the pair
// join A (smallest id first) while they have a(x) neighbours there; the rest
// join B. Throws InternalError if the result does not verify.
Partition extend_pair(const Graph& g, const DemandPair& d, const FeasiblePair& pair);

// A minimal a-good M, then either a pair (M, b-core of the rest) or the
// ab-partition (M - x, rest + x) for the smallest exact-demand x in M.
std::variant<Partition, FeasiblePair> initial_partition(const Graph& g, const DemandPair& d);

// Strictly improving moves until blocked, first match by ascending id:
// move a deficient vertex across when that keeps the target side degenerate,
// then a non-adjacent deficient cross pair ends the climb with a good pair,
// then adjacent exchanges with positive gain. `p` must be an ab-partition
// over normalized demands.
std::variant<Partition, FeasiblePair> climb(const Partition& p, SolveStats* stats = nullptr);

// For deficient u, v on opposite sides with u !~ v: the cores of each side
// extended by the other vertex form a disjoint good pair, or one core is
// empty and moving that vertex is an Improve. Throws InputError on bad input.
ProbeOutcome cross_pair_probe(const Partition& p, Vertex u, Vertex v);

// Requires A* x B* complete bipartite. Returns a 4-cycle if both deficient
// sets have two vertices or an outside vertex sees two deficient vertices of
// one side; otherwise Refine naming the singleton side.
ProbeOutcome star_structure(const Partition& p);

// Exchange of adjacent deficient u, v. Degenerate result: Improve if the
// gain is positive, Refine with the plateau partition if zero. Otherwise a
// good pair or the single move of v (or u) as Improve. Throws InternalError
// if no branch applies.
ProbeOutcome plateau_swap(const Partition& p, Vertex u, Vertex v);

// Classifies side `side` of a blocked, star-structured partition.
ConfigurationResult detect_configuration(const Partition& p, Side side);

// One plateau episode from a blocked partition.
std::variant<Improve, Certificate> plateau_schedule(const Partition& p, SolveStats* stats = nullptr,
                                                    std::vector<std::string>* trace = nullptr);

SolveResult solve(const Graph& g, const DemandFn& a, const DemandFn& b);

// The same search started from a given ab-partition of the normalized
// demands instead of the initial one. Throws InputError if `start` is not one.
SolveResult solve_from(const Graph& g, const DemandFn& a, const DemandFn& b,
                       const std::vector<Side>& start);

// Every x in A has a(x) neighbours in A and every x in B has b(x) in B.
// Throws InputError if a side is empty or lengths disagree.
bool verify_feasible(const Graph& g, const DemandFn& a, const DemandFn& b,
                     const std::vector<Side>& sides);

FeasiblePartition to_feasible_partition(const std::vector<Side>& sides);

}  // namespace c4part

#endif  // C4PART_SOLVER_HPP_
