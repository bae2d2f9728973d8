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
#include <compare>
#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace gallai {

using Vertex = std::uint32_t;

inline constexpr Vertex kNoVertex = std::numeric_limits<Vertex>::max();

/// Raised when an operation is called outside its contract.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Unordered vertex pair, stored with a < b.
struct Edge {
  Vertex a = 0;
  Vertex b = 0;

  constexpr Edge() = default;
  constexpr Edge(Vertex u, Vertex v) : a(u < v ? u : v), b(u < v ? v : u) {}

  constexpr bool touches(Vertex v) const { return a == v || b == v; }
  constexpr Vertex other(Vertex v) const { return a == v ? b : a; }

  friend constexpr auto operator<=>(const Edge&, const Edge&) = default;
};

/// Simple undirected graph on vertices 0..n-1 with sorted adjacency.
///
/// Value type: every structural change produces a new Graph, so a parent
/// and its reduced children can be held side by side.
class Graph {
 public:
  Graph() = default;
  explicit Graph(std::size_t n) : adj_(n) {}

  /// Builds a graph from an edge list. Loops, duplicates and ids >= n throw.
  static Graph from_edges(std::size_t n, std::span<const Edge> edges) {
    Graph g(n);
    for (const Edge& e : edges) {
      if (e.a == e.b) {
        throw PreconditionError("self-loop at vertex " + std::to_string(e.a));
      }
      if (e.b >= n) {
        throw PreconditionError("edge endpoint " + std::to_string(e.b) +
                                " out of range");
      }
      g.adj_[e.a].push_back(e.b);
      g.adj_[e.b].push_back(e.a);
    }
    for (auto& list : g.adj_) {
      std::sort(list.begin(), list.end());
      if (std::adjacent_find(list.begin(), list.end()) != list.end()) {
        throw PreconditionError("duplicate edge");
      }
    }
    g.m_ = edges.size();
    return g;
  }

  static Graph from_edges(std::size_t n,
                          std::initializer_list<std::pair<Vertex, Vertex>> es) {
    std::vector<Edge> edges;
    edges.reserve(es.size());
    for (auto [u, v] : es) edges.emplace_back(u, v);
    return from_edges(n, edges);
  }

  std::size_t order() const { return adj_.size(); }
  std::size_t size() const { return m_; }

  std::span<const Vertex> neighbors(Vertex v) const {
    check_vertex(v);
    return adj_[v];
  }

  std::size_t degree(Vertex v) const {
    check_vertex(v);
    return adj_[v].size();
  }

  bool has_edge(Vertex u, Vertex v) const {
    if (u >= order() || v >= order()) return false;
    const auto& list = adj_[u];
    return std::binary_search(list.begin(), list.end(), v);
  }

  /// All edges in lexicographic order.
  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    out.reserve(m_);
    for (Vertex u = 0; u < order(); ++u) {
      for (Vertex v : adj_[u]) {
        if (u < v) out.emplace_back(u, v);
      }
    }
    return out;
  }

  void check_vertex(Vertex v) const {
    if (v >= order()) {
      throw std::out_of_range("vertex " + std::to_string(v) +
                              " out of range for graph of order " +
                              std::to_string(order()));
    }
  }

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::vector<std::vector<Vertex>> adj_;
  std::size_t m_ = 0;
};

/// Relabeling produced by vertex deletion and edge contraction.
///
/// `forward[old]` is the new id or kNoVertex for a removed vertex. When an
/// edge (a, b) was contracted, both map to `merged->into`.
struct VertexMap {
  struct Merge {
    Vertex a = 0;
    Vertex b = 0;
    Vertex into = 0;
  };

  std::vector<Vertex> forward;
  std::optional<Merge> merged;

  std::size_t child_order() const {
    Vertex top = 0;
    bool any = false;
    for (Vertex v : forward) {
      if (v != kNoVertex) {
        top = std::max(top, v);
        any = true;
      }
    }
    return any ? top + 1 : 0;
  }

  /// new id -> one old id (for the merged vertex: `merged->a`).
  std::vector<Vertex> backward() const {
    std::vector<Vertex> back(child_order(), kNoVertex);
    for (Vertex old = 0; old < forward.size(); ++old) {
      Vertex nv = forward[old];
      if (nv != kNoVertex && back[nv] == kNoVertex) back[nv] = old;
    }
    if (merged) back[merged->into] = merged->a;
    return back;
  }

  static VertexMap identity(std::size_t n) {
    VertexMap map;
    map.forward.resize(n);
    for (Vertex v = 0; v < n; ++v) map.forward[v] = v;
    return map;
  }
};

/// Composes `first` (parent -> mid) with `second` (mid -> child).
inline VertexMap compose(const VertexMap& first, const VertexMap& second) {
  VertexMap out;
  out.forward.resize(first.forward.size(), kNoVertex);
  for (Vertex old = 0; old < first.forward.size(); ++old) {
    Vertex mid = first.forward[old];
    if (mid != kNoVertex) out.forward[old] = second.forward.at(mid);
  }
  if (first.merged && second.merged) {
    throw PreconditionError("cannot compose two contractions");
  }
  if (first.merged) {
    out.merged = VertexMap::Merge{first.merged->a, first.merged->b,
                                  second.forward.at(first.merged->into)};
  } else if (second.merged) {
    const auto back = first.backward();
    out.merged = VertexMap::Merge{back.at(second.merged->a),
                                  back.at(second.merged->b),
                                  second.merged->into};
  }
  return out;
}

// ---------------------------------------------------------------------------
// Queries

inline std::size_t degree(const Graph& g, Vertex v) { return g.degree(v); }

inline std::size_t max_degree(const Graph& g) {
  if (g.order() == 0) throw PreconditionError("max_degree of empty graph");
  std::size_t best = 0;
  for (Vertex v = 0; v < g.order(); ++v) best = std::max(best, g.degree(v));
  return best;
}

/// Connected components, each sorted, ordered by smallest member.
inline std::vector<std::vector<Vertex>> components(const Graph& g) {
  std::vector<std::vector<Vertex>> out;
  std::vector<char> seen(g.order(), 0);
  std::vector<Vertex> stack;
  for (Vertex s = 0; s < g.order(); ++s) {
    if (seen[s]) continue;
    std::vector<Vertex> comp;
    seen[s] = 1;
    stack.push_back(s);
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      comp.push_back(v);
      for (Vertex w : g.neighbors(v)) {
        if (!seen[w]) {
          seen[w] = 1;
          stack.push_back(w);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

inline bool is_connected(const Graph& g) { return components(g).size() <= 1; }

/// Bridges via iterative low-link DFS; O(n + m). Sorted output.
inline std::vector<Edge> bridges(const Graph& g) {
  const std::size_t n = g.order();
  std::vector<Edge> out;
  std::vector<std::uint32_t> disc(n, 0), low(n, 0);
  std::uint32_t timer = 0;

  struct Frame {
    Vertex v;
    Vertex parent;
    std::size_t next;
  };
  std::vector<Frame> stack;

  for (Vertex root = 0; root < n; ++root) {
    if (disc[root] != 0) continue;
    disc[root] = low[root] = ++timer;
    stack.push_back({root, kNoVertex, 0});
    while (!stack.empty()) {
      Frame& f = stack.back();
      auto nbrs = g.neighbors(f.v);
      if (f.next < nbrs.size()) {
        Vertex w = nbrs[f.next++];
        if (w == f.parent) continue;  // simple graph: one parent edge
        if (disc[w] == 0) {
          disc[w] = low[w] = ++timer;
          stack.push_back({w, f.v, 0});
        } else {
          low[f.v] = std::min(low[f.v], disc[w]);
        }
      } else {
        Frame done = f;
        stack.pop_back();
        if (done.parent != kNoVertex) {
          low[done.parent] = std::min(low[done.parent], low[done.v]);
          if (low[done.v] > disc[done.parent]) {
            out.emplace_back(done.parent, done.v);
          }
        }
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

inline bool is_bridge(const Graph& g, Vertex u, Vertex v) {
  auto all = bridges(g);
  return std::binary_search(all.begin(), all.end(), Edge(u, v));
}

inline std::vector<Vertex> common_neighbors(const Graph& g, Vertex u, Vertex v) {
  if (u == v) throw PreconditionError("common_neighbors needs distinct vertices");
  auto a = g.neighbors(u);
  auto b = g.neighbors(v);
  std::vector<Vertex> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                        std::back_inserter(out));
  return out;
}

inline bool is_forest(const Graph& g) {
  return g.size() + components(g).size() == g.order();
}

inline bool is_complete(const Graph& g) {
  const std::size_t n = g.order();
  return g.size() == n * (n - (n > 0 ? 1 : 0)) / 2;
}

/// K_{2k+1} with at most k-1 edges deleted, k >= 1.
inline bool is_odd_semi_clique(const Graph& g) {
  const std::size_t n = g.order();
  if (n < 3 || n % 2 == 0) return false;
  const std::size_t k = (n - 1) / 2;
  const std::size_t full = n * (n - 1) / 2;
  return g.size() + (k - 1) >= full;
}

// ---------------------------------------------------------------------------
// Constructions

inline Graph add_edge(const Graph& g, Vertex u, Vertex v) {
  g.check_vertex(u);
  g.check_vertex(v);
  if (u == v) throw PreconditionError("add_edge: self-loop");
  if (g.has_edge(u, v)) {
    throw PreconditionError("add_edge: edge " + std::to_string(u) + "-" +
                            std::to_string(v) + " already present");
  }
  auto es = g.edges();
  es.emplace_back(u, v);
  return Graph::from_edges(g.order(), es);
}

inline Graph delete_edge(const Graph& g, Vertex u, Vertex v) {
  if (!g.has_edge(u, v)) {
    throw PreconditionError("delete_edge: edge " + std::to_string(u) + "-" +
                            std::to_string(v) + " not present");
  }
  auto es = g.edges();
  es.erase(std::find(es.begin(), es.end(), Edge(u, v)));
  return Graph::from_edges(g.order(), es);
}

/// Induced subgraph on V \ removed, ids compacted in ascending order.
inline std::pair<Graph, VertexMap> delete_vertices(
    const Graph& g, std::span<const Vertex> removed) {
  VertexMap map;
  map.forward.assign(g.order(), 0);
  for (Vertex v : removed) {
    g.check_vertex(v);
    map.forward[v] = kNoVertex;
  }
  Vertex next = 0;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (map.forward[v] != kNoVertex) map.forward[v] = next++;
  }
  std::vector<Edge> es;
  for (const Edge& e : g.edges()) {
    Vertex a = map.forward[e.a], b = map.forward[e.b];
    if (a != kNoVertex && b != kNoVertex) es.emplace_back(a, b);
  }
  return {Graph::from_edges(next, es), std::move(map)};
}

inline std::pair<Graph, VertexMap> delete_vertices(
    const Graph& g, std::initializer_list<Vertex> removed) {
  return delete_vertices(g, std::span<const Vertex>(removed.begin(), removed.size()));
}

/// Induced subgraph on `kept` (any order); ids compacted ascending.
inline std::pair<Graph, VertexMap> induced_subgraph(const Graph& g,
                                                    std::span<const Vertex> kept) {
  std::vector<char> keep(g.order(), 0);
  for (Vertex v : kept) keep.at(v) = 1;
  std::vector<Vertex> removed;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (!keep[v]) removed.push_back(v);
  }
  return delete_vertices(g, removed);
}

/// Contracts uv into one vertex. u and v must share no neighbor.
///
/// The merged vertex takes the compacted position of min(u, v); the other
/// endpoint's slot is removed.
inline std::pair<Graph, VertexMap> contract_edge(const Graph& g, Vertex u, Vertex v) {
  if (!g.has_edge(u, v)) {
    throw PreconditionError("contract_edge: " + std::to_string(u) + "-" +
                            std::to_string(v) + " is not an edge");
  }
  if (!common_neighbors(g, u, v).empty()) {
    throw PreconditionError("contract_edge: endpoints share a neighbor");
  }
  const Vertex keep = std::min(u, v), drop = std::max(u, v);
  VertexMap map;
  map.forward.resize(g.order());
  Vertex next = 0;
  for (Vertex x = 0; x < g.order(); ++x) {
    map.forward[x] = (x == drop) ? kNoVertex : next++;
  }
  map.forward[drop] = map.forward[keep];
  map.merged = VertexMap::Merge{u, v, map.forward[keep]};

  std::vector<Edge> es;
  for (const Edge& e : g.edges()) {
    if (e == Edge(u, v)) continue;
    es.emplace_back(map.forward[e.a], map.forward[e.b]);
  }
  return {Graph::from_edges(next, es), std::move(map)};
}

/// Subgraph induced by the even-degree vertices.
inline std::pair<Graph, VertexMap> induced_even_subgraph(const Graph& g) {
  std::vector<Vertex> odd;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (g.degree(v) % 2 == 1) odd.push_back(v);
  }
  return delete_vertices(g, odd);
}

}  // namespace gallai
