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


#include "c4part/io.hpp"

#include <charconv>
#include <cstdint>
#include <set>

#include "c4part/error.hpp"
#include "json.hpp"

namespace c4part {

namespace {

constexpr std::string_view kGraph6Header = ">>graph6<<";

std::string_view trim_line_end(std::string_view s) {
  while (!s.empty() && (s.back() == '\n' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

}  // namespace

Graph parse_graph6(std::string_view text) {
  std::size_t base = 0;
  if (text.starts_with(kGraph6Header)) base = kGraph6Header.size();
  std::string_view body = trim_line_end(text.substr(base));
  auto value = [&](std::size_t i) -> std::uint64_t {
    if (i >= body.size()) throw ParseError("graph6 text ends early", base + i);
    auto c = static_cast<unsigned char>(body[i]);
    if (c < 63 || c > 126) throw ParseError("graph6 byte out of range", base + i);
    return c - 63u;
  };
  std::uint64_t n = 0;
  std::size_t pos = 0;
  if (value(0) != 63) {
    n = value(0);
    pos = 1;
  } else if (value(1) != 63) {
    for (std::size_t i = 1; i <= 3; ++i) n = (n << 6) | value(i);
    pos = 4;
  } else {
    for (std::size_t i = 2; i <= 7; ++i) n = (n << 6) | value(i);
    pos = 8;
  }
  std::uint64_t bits = n * (n == 0 ? 0 : n - 1) / 2;
  std::uint64_t bytes = (bits + 5) / 6;
  if (body.size() - pos != bytes) {
    throw ParseError("graph6 length does not match n = " + std::to_string(n),
                     base + std::min<std::size_t>(body.size(), pos + bytes));
  }
  std::vector<Edge> edges;
  std::uint64_t k = 0;
  for (std::uint64_t j = 1; j < n; ++j) {
    for (std::uint64_t i = 0; i < j; ++i, ++k) {
      std::uint64_t byte = value(pos + k / 6);
      if ((byte >> (5 - k % 6)) & 1u) edges.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(j));
    }
  }
  for (; k < bytes * 6; ++k) {
    if ((value(pos + k / 6) >> (5 - k % 6)) & 1u) {
      throw ParseError("graph6 padding bits must be zero", base + pos + k / 6);
    }
  }
  return Graph::build(static_cast<std::size_t>(n), edges);
}

std::string encode_graph6(const Graph& g) {
  std::uint64_t n = g.order();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + 63));
  } else if (n <= 258047) {
    out.push_back(126);
    for (int shift = 12; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
  } else {
    out.append(2, static_cast<char>(126));
    for (int shift = 30; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
  }
  int acc = 0;
  int filled = 0;
  for (std::uint64_t j = 1; j < n; ++j) {
    for (std::uint64_t i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(static_cast<Vertex>(i), static_cast<Vertex>(j)) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(acc + 63));
        acc = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>((acc << (6 - filled)) + 63));
  return out;
}

Graph parse_edge_list(std::string_view text) {
  std::size_t line_no = 0;
  std::size_t n = 0;
  std::size_t m = 0;
  bool header = false;
  std::vector<Edge> edges;
  std::set<Edge> seen;
  auto numbers = [&](std::string_view line) {
    std::vector<long long> out;
    std::size_t i = 0;
    while (i < line.size()) {
      while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
      if (i == line.size()) break;
      long long v = 0;
      auto [ptr, ec] = std::from_chars(line.data() + i, line.data() + line.size(), v);
      if (ec != std::errc() || (ptr != line.data() + line.size() && *ptr != ' ' && *ptr != '\t' &&
                                *ptr != '\r')) {
        throw ParseError("edge list: expected an integer on line " + std::to_string(line_no), line_no);
      }
      out.push_back(v);
      i = static_cast<std::size_t>(ptr - line.data());
    }
    return out;
  };
  while (!text.empty()) {
    auto cut = text.find('\n');
    std::string_view line = text.substr(0, cut);
    text = cut == std::string_view::npos ? std::string_view{} : text.substr(cut + 1);
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    auto nums = numbers(line);
    if (nums.empty()) continue;
    auto where = " on line " + std::to_string(line_no);
    if (nums.size() != 2) throw ParseError("edge list: expected two integers" + where, line_no);
    if (!header) {
      if (nums[0] < 0 || nums[1] < 0) throw ParseError("edge list: negative header" + where, line_no);
      n = static_cast<std::size_t>(nums[0]);
      m = static_cast<std::size_t>(nums[1]);
      header = true;
      continue;
    }
    if (edges.size() == m) throw ParseError("edge list: more than m edges" + where, line_no);
    auto u = nums[0];
    auto v = nums[1];
    if (u < 0 || v < 0 || static_cast<std::size_t>(u) >= n || static_cast<std::size_t>(v) >= n) {
      throw ParseError("edge list: vertex out of range" + where, line_no);
    }
    if (u == v) throw ParseError("edge list: self-loop" + where, line_no);
    Edge e{static_cast<Vertex>(std::min(u, v)), static_cast<Vertex>(std::max(u, v))};
    if (!seen.insert(e).second) throw ParseError("edge list: duplicate edge" + where, line_no);
    edges.push_back(e);
  }
  if (!header) throw ParseError("edge list: missing header", line_no + 1);
  if (edges.size() != m) {
    throw ParseError("edge list: expected " + std::to_string(m) + " edges, found " +
                         std::to_string(edges.size()),
                     line_no + 1);
  }
  return Graph::build(n, edges);
}

std::string write_edge_list(const Graph& g) {
  std::string out = std::to_string(g.order()) + " " + std::to_string(g.size()) + "\n";
  for (auto [u, v] : g.edges()) out += std::to_string(u) + " " + std::to_string(v) + "\n";
  return out;
}

Graph parse_graph(std::string_view text, GraphFormat format) {
  if (format == GraphFormat::kAuto) {
    format = GraphFormat::kGraph6;
    std::string_view rest = text;
    while (!rest.empty()) {
      auto cut = rest.find('\n');
      std::string_view line = rest.substr(0, cut);
      rest = cut == std::string_view::npos ? std::string_view{} : rest.substr(cut + 1);
      if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
      if (line.find_first_not_of(" \t\r") == std::string_view::npos) continue;
      if (line.find_first_not_of("0123456789 \t\r") == std::string_view::npos) {
        format = GraphFormat::kEdgeList;
      }
      break;
    }
  }
  return format == GraphFormat::kEdgeList ? parse_edge_list(text) : parse_graph6(text);
}

namespace {

DemandFn values_of(const nlohmann::json& doc, const std::string& key, std::size_t n) {
  auto check = [&](const nlohmann::json& v, const std::string& where) {
    if (!v.is_number_integer()) throw InputError(where + " is not an integer");
    auto x = v.get<long long>();
    if (x < 2) throw InputError(where + " = " + std::to_string(x) + " is below 2");
    if (x > 1'000'000'000) throw InputError(where + " is too large");
    return static_cast<int>(x);
  };
  if (doc.is_array()) {
    if (doc.size() != n) {
      throw InputError(key + " has " + std::to_string(doc.size()) + " values for " +
                       std::to_string(n) + " vertices");
    }
    DemandFn out(n);
    for (std::size_t i = 0; i < n; ++i) out[i] = check(doc[i], key + "[" + std::to_string(i) + "]");
    return out;
  }
  if (!doc.is_object()) throw InputError("demand document must be a JSON object or array");
  bool has_list = doc.contains(key);
  bool has_const = doc.contains(key + "_const");
  if (has_list == has_const) {
    throw InputError("demand document needs exactly one of '" + key + "' and '" + key + "_const'");
  }
  if (has_const) return DemandFn(n, check(doc.at(key + "_const"), key + "_const"));
  const auto& list = doc.at(key);
  if (!list.is_array()) throw InputError("'" + key + "' must be an array");
  return values_of(list, key, n);
}

nlohmann::json parse_json(std::string_view doc) {
  try {
    return nlohmann::json::parse(doc);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("demand document: ") + e.what(), e.byte);
  }
}

}  // namespace

DemandPair parse_demands(std::string_view doc, std::size_t n) {
  auto j = parse_json(doc);
  if (!j.is_object()) throw InputError("demand document must be a JSON object");
  return DemandPair{values_of(j, "a", n), values_of(j, "b", n)};
}

DemandFn parse_demand_values(std::string_view doc, const std::string& key, std::size_t n) {
  return values_of(parse_json(doc), key, n);
}

}  // namespace c4part
