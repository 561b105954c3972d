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


// Serial reference kernels against their OpenMP counterparts.

#include <benchmark/benchmark.h>

#include <vector>

#include "c4part/constructions.hpp"
#include "c4part/kernels.hpp"

namespace {

using c4part::Graph;

// Polarity graphs are C4-free, so every scan runs to completion.
const Graph& scan_graph(int q) {
  static std::vector<std::pair<int, Graph>> cache;
  for (auto& [k, g] : cache) {
    if (k == q) return g;
  }
  cache.emplace_back(q, c4part::er_polarity(q).graph);
  return cache.back().second;
}

void BM_FourCycleSerial(benchmark::State& state) {
  const Graph& g = scan_graph(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(c4part::kernels::serial::four_cycle_scan(g));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(g.order()));
}

void BM_FourCycleParallel(benchmark::State& state) {
  const Graph& g = scan_graph(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(c4part::kernels::parallel::four_cycle_scan(g));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(g.order()));
}

// Triangle-free, infeasible for a = b = 2: every mask is rejected.
const Graph& mask_graph(std::size_t n) {
  static std::vector<std::pair<std::size_t, Graph>> cache;
  for (auto& [k, g] : cache) {
    if (k == n) return g;
  }
  cache.emplace_back(n, c4part::named_graph("cycle" + std::to_string(n)));
  return cache.back().second;
}

void BM_FeasibleMaskSerial(benchmark::State& state) {
  auto n = static_cast<std::size_t>(state.range(0));
  const Graph& g = mask_graph(n);
  std::vector<int> a(n, 2), b(n, 2);
  for (auto _ : state) {
    benchmark::DoNotOptimize(c4part::kernels::serial::first_feasible_mask(g, a, b));
  }
}

void BM_FeasibleMaskParallel(benchmark::State& state) {
  auto n = static_cast<std::size_t>(state.range(0));
  const Graph& g = mask_graph(n);
  std::vector<int> a(n, 2), b(n, 2);
  for (auto _ : state) {
    benchmark::DoNotOptimize(c4part::kernels::parallel::first_feasible_mask(g, a, b));
  }
}

}  // namespace

BENCHMARK(BM_FourCycleSerial)->Arg(7)->Arg(13)->Arg(23)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_FourCycleParallel)->Arg(7)->Arg(13)->Arg(23)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_FeasibleMaskSerial)->Arg(12)->Arg(16)->Arg(20)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_FeasibleMaskParallel)->Arg(12)->Arg(16)->Arg(20)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
