// Copyright 2026 The gallai-paths Authors
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

#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <set>
#include <vector>

#include "gallai/graph.hpp"

namespace gallai {

inline constexpr std::size_t kMaxEnumerateOrder = 8;
inline constexpr std::size_t kMaxCanonicalOrder = 11;

namespace enum_detail {

// Bit for pair i<j in graph6 order, most significant first.
inline std::uint64_t pair_bit(std::size_t n, std::size_t i, std::size_t j) {
  if (i > j) std::swap(i, j);
  const std::size_t total = n * (n - 1) / 2;
  return std::uint64_t{1} << (total - 1 - (j * (j - 1) / 2 + i));
}

inline std::uint64_t code_of(const Graph& g, const std::vector<Vertex>& label) {
  std::uint64_t code = 0;
  for (const Edge& e : g.edges()) code |= pair_bit(g.order(), label[e.a], label[e.b]);
  return code;
}

// Isomorphism-invariant vertex colors by iterated neighbor-color refinement.
inline std::vector<std::size_t> refine(const Graph& g) {
  const std::size_t n = g.order();
  std::vector<std::size_t> color(n);
  for (Vertex v = 0; v < n; ++v) color[v] = g.degree(v);
  for (std::size_t round = 0; round < n; ++round) {
    std::vector<std::pair<std::size_t, std::vector<std::size_t>>> sig(n);
    for (Vertex v = 0; v < n; ++v) {
      sig[v].first = color[v];
      for (Vertex x : g.neighbors(v)) sig[v].second.push_back(color[x]);
      std::sort(sig[v].second.begin(), sig[v].second.end());
    }
    auto keys = sig;
    std::sort(keys.begin(), keys.end());
    keys.erase(std::unique(keys.begin(), keys.end()), keys.end());
    std::vector<std::size_t> next(n);
    for (Vertex v = 0; v < n; ++v) {
      next[v] = static_cast<std::size_t>(std::lower_bound(keys.begin(), keys.end(), sig[v]) - keys.begin());
    }
    const auto classes = [](const std::vector<std::size_t>& c) {
      return std::set<std::size_t>(c.begin(), c.end()).size();
    };
    const bool stable = classes(next) == classes(color);
    color = std::move(next);
    if (stable) break;
  }
  return color;
}

}  // namespace enum_detail

/// Canonical adjacency code: the minimum upper-triangle bit string over all
/// labelings that respect the refined color classes. Two graphs of the same
/// order are isomorphic iff their codes are equal.
inline std::uint64_t canonical_code(const Graph& g) {
  const std::size_t n = g.order();
  if (n > kMaxCanonicalOrder) throw PreconditionError("canonical_code: order too large");
  if (n < 2) return 0;
  const auto color = enum_detail::refine(g);
  std::map<std::size_t, std::vector<Vertex>> cells;
  for (Vertex v = 0; v < n; ++v) cells[color[v]].push_back(v);
  std::vector<std::vector<Vertex>> order;
  for (auto& [c, vs] : cells) order.push_back(vs);

  std::vector<Vertex> label(n);
  std::uint64_t best = ~std::uint64_t{0};
  auto rec = [&](auto&& self, std::size_t cell, Vertex base) -> void {
    if (cell == order.size()) {
      best = std::min(best, enum_detail::code_of(g, label));
      return;
    }
    auto vs = order[cell];
    do {
      for (std::size_t i = 0; i < vs.size(); ++i) label[vs[i]] = base + static_cast<Vertex>(i);
      self(self, cell + 1, base + static_cast<Vertex>(vs.size()));
    } while (std::next_permutation(vs.begin(), vs.end()));
  };
  rec(rec, 0, 0);
  return best;
}

inline Graph from_code(std::size_t n, std::uint64_t code) {
  std::vector<Edge> edges;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i) {
      if (code & enum_detail::pair_bit(n, i, j)) edges.emplace_back(i, j);
    }
  }
  return Graph::from_edges(n, edges);
}

inline Graph canonical_form(const Graph& g) { return from_code(g.order(), canonical_code(g)); }

/// One representative per isomorphism class of connected graphs on n
/// vertices with max degree at most max_deg, in canonical labeling, ordered
/// by canonical code.
inline std::vector<Graph> enumerate_connected(std::size_t n, std::size_t max_deg) {
  if (n > kMaxEnumerateOrder) {
    throw PreconditionError("enumerate_connected: n=" + std::to_string(n) +
                            " is beyond the internal limit; pipe a graph6 stream instead");
  }
  if (n == 0) return {};
  std::vector<std::uint64_t> level{0};  // K1
  for (std::size_t k = 2; k <= n; ++k) {
    std::set<std::uint64_t> next;
    for (std::uint64_t code : level) {
      const Graph h = from_code(k - 1, code);
      std::vector<Vertex> open;
      for (Vertex v = 0; v + 1 < k; ++v) {
        if (h.degree(v) < max_deg) open.push_back(v);
      }
      // Every connected graph arises by attaching a vertex to a connected
      // graph, since some vertex is not a cut vertex.
      for (std::uint32_t s = 1; s < (1u << open.size()); ++s) {
        if (static_cast<std::size_t>(std::popcount(s)) > max_deg) continue;
        std::vector<Edge> edges = h.edges();
        for (std::size_t i = 0; i < open.size(); ++i) {
          if (s & (1u << i)) edges.emplace_back(open[i], static_cast<Vertex>(k - 1));
        }
        next.insert(canonical_code(Graph::from_edges(k, edges)));
      }
    }
    level.assign(next.begin(), next.end());
  }
  std::vector<Graph> out;
  out.reserve(level.size());
  for (std::uint64_t code : level) out.push_back(from_code(n, code));
  return out;
}

}  // namespace gallai
