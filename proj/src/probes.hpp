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

// Helpers shared by the climb and the plateau schedule. Not installed.

#ifndef C4PART_SRC_PROBES_HPP_
#define C4PART_SRC_PROBES_HPP_

#include <optional>
#include <string>

#include "c4part/solver.hpp"

namespace c4part::detail {

// f_core of side s plus `add`, under the demand of side s.
VertexSet core_with(const Partition& p, Side s, Vertex add);

// Moving deficient x across, if the target side stays degenerate and the
// source side keeps a vertex.
std::optional<Improve> improving_move(const Partition& p, Vertex x);

// First improving single move over A* then B*, ascending.
std::optional<Improve> first_improving_move(const Partition& p);

// No validation of the preconditions; throws InternalError on overlap.
ProbeOutcome cross_probe(const Partition& p, Vertex u, Vertex v);

// plateau_swap without the input checks. Diagnostic on branch exhaustion.
std::variant<Improve, FeasiblePair, Refine, Diagnostic> swap_probe(const Partition& p, Vertex u,
                                                                   Vertex v);

FeasiblePair make_pair(Side s, const VertexSet& on_s, const VertexSet& on_other);

std::string describe(const Partition& p);

}  // namespace c4part::detail

#endif  // C4PART_SRC_PROBES_HPP_
