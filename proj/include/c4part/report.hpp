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


// Structured reports. Every document has a deterministic body; wall-clock
// measurements live only under the "timing" key.

#ifndef C4PART_REPORT_HPP_
#define C4PART_REPORT_HPP_

#include <optional>
#include <string>
#include <vector>

#include "c4part/oracle.hpp"
#include "c4part/solver.hpp"
#include "json.hpp"

namespace c4part {

using Json = nlohmann::ordered_json;

// 0 feasible, 2 four-cycle, 3 degree violation, 4 diagnostic.
int exit_code(Status s);

Json demand_summary(const DemandFn& f);

// "status" plus the matching payload: partition {A, B}, witness, violation
// or diagnostic {reason, trace}.
Json certificate_json(const Certificate& c);

struct SolveExtras {
  std::optional<double> wall_time_ms;
  // Set when a diagnostic was replaced by the brute-force partition.
  std::optional<std::vector<Side>> fallback_partition;
  bool fallback_attempted = false;
};

// SolveReport: status, partition / witness / violation / diagnostic, stats,
// input echo, and "timing" when a wall time is given.
Json solve_report(const Graph& g, const DemandFn& a, const DemandFn& b, const SolveResult& r,
                  const SolveExtras& extras = {});

Json crosscheck_json(const CrosscheckReport& r);
Json stress_json(const StressReport& r);
Json discrepancy_json(const Discrepancy& d);

// Report without the "timing" member, for reproducibility checks.
Json deterministic_part(Json report);

}  // namespace c4part

#endif  // C4PART_REPORT_HPP_
