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

// Test-side oracles and generators. Nothing here calls into the detectors,
// canonical form or search it is used to check.
#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "gallai/gallai.hpp"

namespace gallai::testing {

inline Graph complete(std::size_t n) {
  std::vector<Edge> es;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i) es.emplace_back(i, j);
  }
  return Graph::from_edges(n, es);
}

inline Graph cycle(std::size_t n) {
  std::vector<Edge> es;
  for (Vertex i = 0; i < n; ++i) es.emplace_back(i, static_cast<Vertex>((i + 1) % n));
  return Graph::from_edges(n, es);
}

inline Graph path_graph(std::size_t n) {
  std::vector<Edge> es;
  for (Vertex i = 0; i + 1 < n; ++i) es.emplace_back(i, i + 1);
  return Graph::from_edges(n, es);
}

inline Graph petersen() {
  return Graph::from_edges(10, {{0, 1}, {0, 4}, {0, 5}, {1, 2}, {1, 6}, {2, 3}, {2, 7}, {3, 4},
                                {3, 8}, {4, 9}, {5, 7}, {5, 8}, {6, 8}, {6, 9}, {7, 9}});
}

// Two K4s on 0..3 and 4..7 joined by the bridge 0-4.
inline Graph two_k4_bridge() {
  std::vector<Edge> es{{0, 4}};
  for (Vertex base : {0u, 4u}) {
    for (Vertex j = 1; j < 4; ++j) {
      for (Vertex i = 0; i < j; ++i) es.emplace_back(base + i, base + j);
    }
  }
  return Graph::from_edges(8, es);
}

// Connected, max degree <= max_deg: a random tree plus `extra` random edges.
inline Graph random_connected(std::mt19937_64& rng, std::size_t n, std::size_t max_deg,
                              std::size_t extra) {
  std::vector<Edge> es;
  std::vector<std::size_t> deg(n);
  auto pick = [&](Vertex lo, Vertex hi) { return std::uniform_int_distribution<Vertex>(lo, hi)(rng); };
  for (Vertex v = 1; v < n; ++v) {
    while (true) {
      const Vertex p = pick(0, v - 1);
      if (deg[p] < max_deg) {
        es.emplace_back(p, v);
        ++deg[p], ++deg[v];
        break;
      }
    }
  }
  for (std::size_t tries = 0; tries < 50 * n && extra > 0; ++tries) {
    const Vertex a = pick(0, static_cast<Vertex>(n - 1)), b = pick(0, static_cast<Vertex>(n - 1));
    if (a == b || deg[a] >= max_deg || deg[b] >= max_deg) continue;
    if (std::find(es.begin(), es.end(), Edge(a, b)) != es.end()) continue;
    es.emplace_back(a, b);
    ++deg[a], ++deg[b];
    --extra;
  }
  return Graph::from_edges(n, es);
}

inline std::vector<Vertex> random_permutation(std::mt19937_64& rng, std::size_t n) {
  std::vector<Vertex> p(n);
  std::iota(p.begin(), p.end(), Vertex{0});
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

inline Graph relabel(const Graph& g, const std::vector<Vertex>& perm) {
  std::vector<Edge> es;
  for (const Edge& e : g.edges()) es.emplace_back(perm[e.a], perm[e.b]);
  return Graph::from_edges(g.order(), es);
}

// A good decomposition of g that generally differs from solve(g): solve a
// random relabelling and map back.
inline PathDecomposition shuffled_solution(std::mt19937_64& rng, const Graph& g) {
  if (g.size() == 0) return {};
  const auto perm = random_permutation(rng, g.order());
  auto d = solve(relabel(g, perm)).decomposition;
  std::vector<Vertex> inv(perm.size());
  for (Vertex i = 0; i < perm.size(); ++i) inv[perm[i]] = i;
  for (auto& p : d.paths) {
    for (auto& x : p.vertices) x = inv[x];
  }
  return d;
}

// ---------------------------------------------------------------------------
// Minimum path partition by subset DP over all simple paths.

inline std::size_t naive_min_paths(const Graph& g) {
  const auto edges = g.edges();
  const std::size_t m = edges.size();
  if (m == 0) return 0;
  std::map<std::pair<Vertex, Vertex>, std::size_t> index;
  for (std::size_t i = 0; i < m; ++i) {
    index[{edges[i].a, edges[i].b}] = i;
    index[{edges[i].b, edges[i].a}] = i;
  }
  std::vector<std::uint32_t> paths;  // edge masks of all simple paths
  std::vector<bool> on(g.order());
  std::function<void(Vertex, std::uint32_t)> walk = [&](Vertex v, std::uint32_t mask) {
    if (mask) paths.push_back(mask);
    for (Vertex x : g.neighbors(v)) {
      if (on[x]) continue;
      on[x] = true;
      walk(x, mask | (1u << index[{v, x}]));
      on[x] = false;
    }
  };
  for (Vertex s = 0; s < g.order(); ++s) {
    on[s] = true;
    walk(s, 0);
    on[s] = false;
  }
  std::sort(paths.begin(), paths.end());
  paths.erase(std::unique(paths.begin(), paths.end()), paths.end());
  const std::uint32_t full = (1u << m) - 1;
  std::vector<std::uint8_t> best(full + 1, 0xff);
  best[0] = 0;
  for (std::uint32_t mask = 1; mask <= full; ++mask) {
    const std::uint32_t low = mask & (~mask + 1);
    for (std::uint32_t p : paths) {
      if ((p & low) && (p & ~mask) == 0 && best[mask ^ p] != 0xff) {
        best[mask] = std::min<std::uint8_t>(best[mask], static_cast<std::uint8_t>(best[mask ^ p] + 1));
      }
    }
  }
  return best[full];
}

// ---------------------------------------------------------------------------
// Canonical form by brute force over all n! labelings.

inline std::string brute_canonical(const Graph& g) {
  const std::size_t n = g.order();
  std::vector<Vertex> perm(n);
  std::iota(perm.begin(), perm.end(), Vertex{0});
  std::string best;
  do {
    std::string s;
    for (Vertex j = 1; j < n; ++j) {
      for (Vertex i = 0; i < j; ++i) s.push_back(g.has_edge(perm[i], perm[j]) ? '1' : '0');
    }
    if (best.empty() || s < best) best = s;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

// All labelled graphs on n vertices, one bit per pair.
inline std::vector<Graph> all_labelled(std::size_t n) {
  std::vector<std::pair<Vertex, Vertex>> pairs;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i) pairs.emplace_back(i, j);
  }
  std::vector<Graph> out;
  for (std::uint32_t mask = 0; mask < (1u << pairs.size()); ++mask) {
    std::vector<Edge> es;
    for (std::size_t k = 0; k < pairs.size(); ++k) {
      if (mask & (1u << k)) es.emplace_back(pairs[k].first, pairs[k].second);
    }
    out.push_back(Graph::from_edges(n, es));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Configurations straight from their definitions, by exhaustive scan.

inline bool bridge_by_deletion(const Graph& g, Vertex a, Vertex b) {
  std::vector<bool> seen(g.order());
  std::vector<Vertex> stack{a};
  seen[a] = true;
  while (!stack.empty()) {
    Vertex v = stack.back();
    stack.pop_back();
    for (Vertex x : g.neighbors(v)) {
      if ((v == a && x == b) || (v == b && x == a) || seen[x]) continue;
      seen[x] = true;
      stack.push_back(x);
    }
  }
  return !seen[b];
}

inline std::vector<Vertex> others(const Graph& g, Vertex u, Vertex skip) {
  std::vector<Vertex> out;
  for (Vertex x : g.neighbors(u)) {
    if (x != skip) out.push_back(x);
  }
  return out;
}

inline bool naive_c1(const Graph& g) {
  for (Vertex u = 0; u < g.order(); ++u) {
    auto nb = g.neighbors(u);
    if (nb.size() == 2 && !g.has_edge(nb[0], nb[1])) return true;
  }
  return false;
}

inline bool naive_c2(const Graph& g) {
  for (const Edge& e : g.edges()) {
    if (g.degree(e.a) % 2 == 0 && g.degree(e.b) % 2 == 0 && bridge_by_deletion(g, e.a, e.b)) return true;
  }
  return false;
}

inline std::size_t common_count(const Graph& g, Vertex u, Vertex v) {
  std::size_t c = 0;
  for (Vertex x = 0; x < g.order(); ++x) c += x != u && x != v && g.has_edge(u, x) && g.has_edge(v, x);
  return c;
}

inline bool naive_c3(const Graph& g) {
  for (const Edge& e : g.edges()) {
    if (g.degree(e.a) == 4 && g.degree(e.b) == 4 && common_count(g, e.a, e.b) == 2) return true;
  }
  return false;
}

inline bool naive_c4_edge(const Graph& g, Vertex u, Vertex v) {
  if (g.degree(u) != 4 || g.degree(v) != 4) return false;
  auto t = others(g, u, v), w = others(g, v, u);
  std::sort(t.begin(), t.end());
  do {
    auto ws = w;
    std::sort(ws.begin(), ws.end());
    do {
      if (!g.has_edge(t[0], t[1]) && !g.has_edge(ws[0], ws[1]) && t[2] != ws[2]) return true;
    } while (std::next_permutation(ws.begin(), ws.end()));
  } while (std::next_permutation(t.begin(), t.end()));
  return false;
}

inline bool naive_c4(const Graph& g) {
  for (const Edge& e : g.edges()) {
    if (naive_c4_edge(g, e.a, e.b)) return true;
  }
  return false;
}

inline bool naive_c5(const Graph& g) {
  const auto ok = [&](Vertex x) { return g.degree(x) == 2 || g.degree(x) == 4; };
  for (Vertex u = 0; u < g.order(); ++u) {
    if (g.degree(u) != 4) continue;
    for (Vertex v = 0; v < g.order(); ++v) {
      for (Vertex w = 0; w < g.order(); ++w) {
        if (u == v || v == w || u == w) continue;
        if (g.has_edge(u, v) && g.has_edge(v, w) && g.has_edge(u, w) && ok(v) && ok(w)) return true;
      }
    }
  }
  return false;
}

// First configuration present under the priority order, 0 if none.
inline int naive_first_config(const Graph& g) {
  if (naive_c1(g)) return 1;
  if (naive_c2(g)) return 2;
  if (naive_c3(g)) return 3;
  if (naive_c4(g)) return 4;
  if (naive_c5(g)) return 5;
  return 0;
}

// ---------------------------------------------------------------------------
// One constructed instance per sub-case.

struct SubCaseFixture {
  SubCase sub_case;
  Graph graph;
  Occurrence occ;
};

inline std::vector<SubCaseFixture> sub_case_fixtures() {
  std::vector<SubCaseFixture> f;
  // c1: the 4-cycle.
  f.push_back({SubCase::kC1, cycle(4), OccC1{0, 1, 3}});
  f.push_back({SubCase::kC2, two_k4_bridge(), OccC2{0, 4}});
  // c3 sparse: uv with common x, y and private u', v'; none of xu', u'y,
  // yv', v'x present; a tail keeps everything connected.
  f.push_back({SubCase::kC3Sparse,
               Graph::from_edges(7, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 5},
                                     {4, 6}, {5, 6}, {2, 6}}),
               OccC3{0, 1, 2, 3, 4, 5}});
  // c3 full: all four edges present.
  f.push_back({SubCase::kC3Full,
               Graph::from_edges(6, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 5},
                                     {2, 4}, {4, 3}, {3, 5}, {5, 2}}),
               OccC3{0, 1, 2, 3, 4, 5}});
  // c3 partial: two of the four present.
  f.push_back({SubCase::kC3Partial,
               Graph::from_edges(6, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 5},
                                     {2, 4}, {3, 5}}),
               OccC3{0, 1, 2, 3, 4, 5}});
  // c4 with three common neighbours, two non-edges among them.
  f.push_back({SubCase::kC4Common3,
               Graph::from_edges(6, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 4},
                                     {2, 5}, {3, 5}, {4, 5}}),
               OccC4{0, 1, {2, 3, 4}, {3, 4, 2}}});
  // c4 where G - u has three components.
  f.push_back({SubCase::kC4CutVertex,
               Graph::from_edges(8, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 4}, {1, 5}, {1, 6},
                                     {5, 6}, {4, 7}, {5, 7}}),
               OccC4{0, 1, {2, 3, 4}, {4, 5, 6}}});
  // c4 where G - u - v has four components.
  f.push_back({SubCase::kC4FourComponents,
               Graph::from_edges(10, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 5}, {1, 6}, {1, 7},
                                      {2, 5}, {3, 6}, {4, 8}, {7, 9}}),
               OccC4{0, 1, {2, 3, 4}, {5, 6, 7}}});
  // c4 with G - u - v + t1t2 + w1w2 connected.
  f.push_back({SubCase::kC4Connected,
               Graph::from_edges(8, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 5}, {1, 6}, {1, 7},
                                     {2, 5}, {3, 6}, {4, 7}, {2, 6}}),
               OccC4{0, 1, {2, 3, 4}, {5, 6, 7}}});
  // c5, pair 0-1 with common {2,3,4}, none of them adjacent.
  f.push_back({SubCase::kC5Common3TwoMissing,
               Graph::from_edges(7, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 4},
                                     {2, 5}, {2, 6}, {3, 5}, {4, 6}, {5, 6}}),
               OccC5{0, 1, 2}});
  // c5, common {2,3,4} with only 3-4 missing.
  f.push_back({SubCase::kC5Common3OneMissing,
               Graph::from_edges(6, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 4},
                                     {2, 3}, {2, 4}, {3, 5}, {4, 5}}),
               OccC5{0, 1, 2}});
  // c5, common {2,3,4} forming a triangle: K5 plus a pendant at 3.
  f.push_back({SubCase::kC5Common3Triangle,
               Graph::from_edges(6, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 4},
                                     {2, 3}, {2, 4}, {3, 4}, {3, 5}}),
               OccC5{0, 1, 2}});
  // c5 with a degree-2 triangle vertex.
  f.push_back({SubCase::kC5Degree2,
               Graph::from_edges(5, {{0, 1}, {0, 2}, {1, 2}, {0, 3}, {0, 4}}), OccC5{0, 1, 2}});
  // c5, all degree 4, outer vertices on a 6-cycle.
  f.push_back({SubCase::kC5NonCut,
               Graph::from_edges(9, {{0, 1}, {0, 2}, {1, 2}, {0, 3}, {0, 4}, {1, 5}, {1, 6},
                                     {2, 7}, {2, 8}, {3, 5}, {5, 7}, {7, 4}, {4, 6}, {6, 8},
                                     {8, 3}}),
               OccC5{0, 1, 2}});
  // c5, all degree 4, six pendant outer vertices.
  f.push_back({SubCase::kC5AllCut,
               Graph::from_edges(9, {{0, 1}, {0, 2}, {1, 2}, {0, 3}, {0, 4}, {1, 5}, {1, 6},
                                     {2, 7}, {2, 8}}),
               OccC5{0, 1, 2}});
  return f;
}

}  // namespace gallai::testing
