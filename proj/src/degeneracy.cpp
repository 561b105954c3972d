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

#include "c4part/degeneracy.hpp"

#include "c4part/error.hpp"

namespace c4part {

namespace {

void check_lengths(const Graph& g, const VertexSet& s, const DemandFn& f) {
  if (s.universe() != g.order() || f.size() != g.order()) {
    throw InputError("vertex set / demand length does not match graph order");
  }
}

}  // namespace

DemandFn constant_demand(std::size_t n, int value) { return DemandFn(n, value); }

CorePeeler::CorePeeler(const Graph& g, const VertexSet& s, const DemandFn& f)
    : g_(g), f_(f), live_(s), degree_(g.order(), 0) {
  check_lengths(g, s, f);
  std::vector<Vertex> stack;
  for (std::size_t i = 0; i < g.order(); ++i) {
    auto v = static_cast<Vertex>(i);
    if (live_.contains(v)) degree_[i] = degree_in(g, v, live_);
  }
  for (std::size_t i = 0; i < g.order(); ++i) {
    auto v = static_cast<Vertex>(i);
    if (live_.contains(v) && degree_[i] < f_[i]) drop(v, stack);
    cascade(stack);
  }
  // The initial peel is not undoable.
  log_.clear();
}

void CorePeeler::drop(Vertex v, std::vector<Vertex>& stack) {
  live_.erase(v);
  log_.push_back(v);
  stack.push_back(v);
}

void CorePeeler::cascade(std::vector<Vertex>& stack) {
  while (!stack.empty()) {
    Vertex v = stack.back();
    stack.pop_back();
    for (Vertex w : g_.neighbors(v)) {
      if (!live_.contains(w)) continue;
      auto wi = static_cast<std::size_t>(w);
      if (--degree_[wi] < f_[wi]) drop(w, stack);
    }
  }
}

void CorePeeler::remove(Vertex v) {
  if (!live_.contains(v)) throw InputError("CorePeeler::remove on a deleted vertex");
  std::vector<Vertex> stack;
  drop(v, stack);
  cascade(stack);
}

void CorePeeler::rollback(std::size_t mark) {
  while (log_.size() > mark) {
    Vertex v = log_.back();
    log_.pop_back();
    int d = 0;
    for (Vertex w : g_.neighbors(v)) {
      if (live_.contains(w)) {
        ++degree_[static_cast<std::size_t>(w)];
        ++d;
      }
    }
    degree_[static_cast<std::size_t>(v)] = d;
    live_.insert(v);
  }
}

VertexSet f_core(const Graph& g, const VertexSet& s, const DemandFn& f) {
  return CorePeeler(g, s, f).members();
}

bool is_degenerate(const Graph& g, const VertexSet& s, const DemandFn& f) {
  return f_core(g, s, f).empty();
}

std::optional<VertexSet> minimal_good(const Graph& g, const VertexSet& s, const DemandFn& f) {
  CorePeeler peeler(g, s, f);
  if (peeler.size() == 0) return std::nullopt;
  // A vertex whose removal empties the core keeps doing so for every subset,
  // so one ascending pass equals the restart-after-shrink descent.
  for (std::size_t i = 0; i < g.order(); ++i) {
    auto v = static_cast<Vertex>(i);
    if (!peeler.members().contains(v)) continue;
    auto mark = peeler.checkpoint();
    peeler.remove(v);
    if (peeler.size() == 0) peeler.rollback(mark);
  }
  return peeler.members();
}

std::vector<Deficiency> deficiency_set(const Graph& g, const VertexSet& s, const DemandFn& f) {
  check_lengths(g, s, f);
  std::vector<Deficiency> out;
  for (std::size_t i = 0; i < g.order(); ++i) {
    auto v = static_cast<Vertex>(i);
    if (!s.contains(v)) continue;
    int d = degree_in(g, v, s);
    if (d <= f[i] - 1) out.push_back({v, f[i] - d});
  }
  return out;
}

}  // namespace c4part
