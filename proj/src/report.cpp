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


#include "c4part/report.hpp"

#include <algorithm>

namespace c4part {

int exit_code(Status s) {
  switch (s) {
    case Status::kFeasible:
      return 0;
    case Status::kFourCycle:
      return 2;
    case Status::kDegreeViolation:
      return 3;
    case Status::kDiagnostic:
      return 4;
  }
  return 4;
}

Json demand_summary(const DemandFn& f) {
  Json out;
  if (f.empty()) {
    out["constant"] = true;
    return out;
  }
  auto [lo, hi] = std::minmax_element(f.begin(), f.end());
  out["min"] = *lo;
  out["max"] = *hi;
  out["constant"] = *lo == *hi;
  return out;
}

Json certificate_json(const Certificate& c) {
  Json out;
  out["status"] = status_name(c.status());
  if (const auto* p = c.partition()) {
    out["partition"] = {{"A", p->a_part}, {"B", p->b_part}};
  } else if (const auto* w = c.four_cycle()) {
    out["witness"] = w->vertices;
  } else if (const auto* v = c.violation()) {
    out["violation"] = {{"vertex", v->vertex}, {"degree", v->degree}, {"required", v->required}};
  } else if (const auto* d = c.diagnostic()) {
    out["diagnostic"] = {{"reason", d->reason}, {"trace", d->trace}};
  }
  return out;
}

Json solve_report(const Graph& g, const DemandFn& a, const DemandFn& b, const SolveResult& r,
                  const SolveExtras& extras) {
  Json out = certificate_json(r.certificate);
  if (extras.fallback_attempted) {
    Json fb;
    fb["method"] = "oracle";
    if (extras.fallback_partition) {
      auto fp = to_feasible_partition(*extras.fallback_partition);
      fb["found"] = true;
      out["status"] = status_name(Status::kFeasible);
      out["partition"] = {{"A", fp.a_part}, {"B", fp.b_part}};
    } else {
      fb["found"] = false;
    }
    out["fallback"] = fb;
  }
  out["stats"] = {{"iterations", r.stats.iterations},
                  {"improving_moves", r.stats.improving_moves},
                  {"plateau_episodes", r.stats.plateau_episodes},
                  {"plateau_exchanges", r.stats.plateau_exchanges},
                  {"probes", r.stats.probes}};
  out["input"] = {{"n", g.order()},
                  {"m", g.size()},
                  {"demands", {{"a", demand_summary(a)}, {"b", demand_summary(b)}}}};
  if (extras.wall_time_ms) out["timing"] = {{"wall_time_ms", *extras.wall_time_ms}};
  return out;
}

Json discrepancy_json(const Discrepancy& d) {
  Json edges = Json::array();
  for (auto [u, v] : d.edges) edges.push_back({u, v});
  return {{"n", d.n}, {"a", d.a}, {"b", d.b}, {"reason", d.reason}, {"edges", edges}};
}

Json crosscheck_json(const CrosscheckReport& r) {
  Json out;
  out["c4_free_graphs"] = r.c4_free_graphs;
  Json entries = Json::array();
  for (const auto& e : r.entries) {
    entries.push_back({{"a", e.a},
                       {"b", e.b},
                       {"instances", e.instances},
                       {"solver_feasible", e.solver_feasible},
                       {"oracle_feasible", e.oracle_feasible},
                       {"plateau_episodes", e.plateau_episodes}});
  }
  out["grid"] = entries;
  Json bad = Json::array();
  for (const auto& d : r.discrepancies) bad.push_back(discrepancy_json(d));
  out["discrepancies"] = bad;
  return out;
}

Json stress_json(const StressReport& r) {
  Json bad = Json::array();
  for (const auto& d : r.discrepancies) bad.push_back(discrepancy_json(d));
  return {{"instances", r.instances},
          {"oracle_checked", r.oracle_checked},
          {"plateau_episodes", r.plateau_episodes},
          {"plateau_exchanges", r.plateau_exchanges},
          {"events", r.events},
          {"discrepancies", bad}};
}

Json deterministic_part(Json report) {
  report.erase("timing");
  return report;
}

}  // namespace c4part
