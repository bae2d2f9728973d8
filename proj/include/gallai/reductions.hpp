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

// Reduction of a configuration occurrence to smaller connected graphs, and
// the lift that turns good decompositions of those graphs back into a
// decomposition of the original.
//
// Every lift is built from the editing primitives in decomposition.hpp and is
// verified against the parent graph before it is returned. A failed check is
// a bug in a recipe and is reported as LiftError, never patched up.

#pragma once

#include <array>
#include <map>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "gallai/configurations.hpp"
#include "gallai/decomposition.hpp"
#include "gallai/graph.hpp"

namespace gallai {

/// A reduction or lift reached a state its recipe rules out.
class LiftError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

enum class SubCase {
  kC1,
  kC2,
  kC3Sparse,   // at most one of xu', u'y, yv', v'x present
  kC3Full,     // all four present
  kC3Partial,  // two or three present
  kC4Common3,  // u, v share three neighbors
  kC4CutVertex,  // G - u (or G - v) has three components
  kC4FourComponents,  // G - u - v has four components
  kC4Connected,  // none of the above
  kC5Common3TwoMissing,
  kC5Common3OneMissing,
  kC5Common3Triangle,
  kC5Degree2,
  kC5NonCut,
  kC5AllCut,
};

inline constexpr std::array kAllSubCases{
    SubCase::kC1,          SubCase::kC2,
    SubCase::kC3Sparse,    SubCase::kC3Full,
    SubCase::kC3Partial,   SubCase::kC4Common3,
    SubCase::kC4CutVertex, SubCase::kC4FourComponents,
    SubCase::kC4Connected, SubCase::kC5Common3TwoMissing,
    SubCase::kC5Common3OneMissing, SubCase::kC5Common3Triangle,
    SubCase::kC5Degree2,   SubCase::kC5NonCut,
    SubCase::kC5AllCut,
};

inline std::string to_string(SubCase s) {
  switch (s) {
    case SubCase::kC1: return "c1";
    case SubCase::kC2: return "c2";
    case SubCase::kC3Sparse: return "c3.sparse";
    case SubCase::kC3Full: return "c3.full";
    case SubCase::kC3Partial: return "c3.partial";
    case SubCase::kC4Common3: return "c4.common3";
    case SubCase::kC4CutVertex: return "c4.cut-vertex";
    case SubCase::kC4FourComponents: return "c4.four-components";
    case SubCase::kC4Connected: return "c4.connected";
    case SubCase::kC5Common3TwoMissing: return "c5.common3-two-missing";
    case SubCase::kC5Common3OneMissing: return "c5.common3-one-missing";
    case SubCase::kC5Common3Triangle: return "c5.common3-triangle";
    case SubCase::kC5Degree2: return "c5.degree2";
    case SubCase::kC5NonCut: return "c5.non-cut";
    case SubCase::kC5AllCut: return "c5.all-cut";
  }
  return "?";
}

inline Config config_of(SubCase s) {
  switch (s) {
    case SubCase::kC1: return Config::kC1;
    case SubCase::kC2: return Config::kC2;
    case SubCase::kC3Sparse:
    case SubCase::kC3Full:
    case SubCase::kC3Partial: return Config::kC3;
    case SubCase::kC4Common3:
    case SubCase::kC4CutVertex:
    case SubCase::kC4FourComponents:
    case SubCase::kC4Connected: return Config::kC4;
    default: return Config::kC5;
  }
}

/// Most paths a lift may add beyond the children's total. C2 saves one.
inline int path_budget(SubCase s) {
  switch (s) {
    case SubCase::kC2: return -1;
    case SubCase::kC1:
    case SubCase::kC4CutVertex:
    case SubCase::kC4FourComponents:
    case SubCase::kC5AllCut: return 0;
    default: return 1;
  }
}

/// Named vertices of the chosen sub-case, in parent ids. Which fields are
/// meaningful depends on the sub-case; unused ones stay kNoVertex.
struct Roles {
  Vertex u = kNoVertex, v = kNoVertex, w = kNoVertex;
  Vertex x = kNoVertex, y = kNoVertex, z = kNoVertex;
  Vertex up = kNoVertex, vp = kNoVertex;
  std::array<Vertex, 3> t{kNoVertex, kNoVertex, kNoVertex};
  std::array<Vertex, 3> ws{kNoVertex, kNoVertex, kNoVertex};
  std::array<Vertex, 2> x12{kNoVertex, kNoVertex};
  std::array<Vertex, 2> y12{kNoVertex, kNoVertex};
  std::array<Vertex, 2> z12{kNoVertex, kNoVertex};
  bool flag = false;  // C3 sparse: xy was added to the child
};

struct SyntheticEdge {
  std::size_t child = 0;
  Edge in_child;
  Edge in_parent;  // may name the merged placeholder
};

struct LiftPlan {
  Config config = Config::kC1;
  SubCase sub_case = SubCase::kC1;
  std::size_t parent_order = 0;
  std::vector<SyntheticEdge> synthetic;
  /// Per child: child id -> parent id. A contracted vertex maps to
  /// `merged_placeholder()`, which the recipe resolves.
  std::vector<std::vector<Vertex>> to_parent;
  Roles roles;

  Vertex merged_placeholder() const { return static_cast<Vertex>(parent_order); }
};

struct ReducedChild {
  Graph graph;
  VertexMap map;  // parent -> child
};

struct ReducedInstance {
  std::vector<ReducedChild> children;
  LiftPlan plan;
};

namespace detail {

inline std::vector<ReducedChild> split_into_children(const Graph& h, const VertexMap& base) {
  std::vector<ReducedChild> out;
  for (const auto& comp : components(h)) {
    auto [c, m] = induced_subgraph(h, comp);
    if (c.size() == 0) throw LiftError("reduction left an edgeless component");
    out.push_back({std::move(c), compose(base, m)});
  }
  return out;
}

/// G - removed + extra (parent ids), split into connected children.
inline std::vector<ReducedChild> derive(const Graph& g, std::vector<Vertex> removed,
                                        const std::vector<Edge>& extra) {
  auto [h, map] = delete_vertices(g, removed);
  for (const Edge& e : extra) h = add_edge(h, map.forward.at(e.a), map.forward.at(e.b));
  return split_into_children(h, map);
}

inline bool connected_after(const Graph& g, std::vector<Vertex> removed,
                            const std::vector<Edge>& extra) {
  auto [h, map] = delete_vertices(g, removed);
  for (const Edge& e : extra) {
    Vertex a = map.forward.at(e.a), b = map.forward.at(e.b);
    if (h.has_edge(a, b)) return false;
    h = add_edge(h, a, b);
  }
  return is_connected(h);
}

inline std::size_t components_after(const Graph& g, std::vector<Vertex> removed) {
  return components(delete_vertices(g, removed).first).size();
}

inline void fill_plan(ReducedInstance& r, const Graph& g, SubCase s,
                      const std::vector<Edge>& synthetic_parent) {
  r.plan.config = config_of(s);
  r.plan.sub_case = s;
  r.plan.parent_order = g.order();
  for (const auto& child : r.children) {
    auto back = child.map.backward();
    if (child.map.merged) back[child.map.merged->into] = r.plan.merged_placeholder();
    r.plan.to_parent.push_back(std::move(back));
  }
  for (const Edge& e : synthetic_parent) {
    bool found = false;
    for (std::size_t c = 0; c < r.children.size() && !found; ++c) {
      const auto& back = r.plan.to_parent[c];
      for (const Edge& ce : r.children[c].graph.edges()) {
        if (Edge(back[ce.a], back[ce.b]) == e) {
          r.plan.synthetic.push_back({c, ce, e});
          found = true;
          break;
        }
      }
    }
    if (!found) throw LiftError("synthetic edge missing from every child");
  }
}

inline void require(bool cond, const char* what) {
  if (!cond) throw LiftError(what);
}

inline Vertex other_of(const std::array<Vertex, 2>& pair, Vertex a) {
  return pair[0] == a ? pair[1] : pair[0];
}

}  // namespace detail

// ---------------------------------------------------------------------------
// reduce

inline ReducedInstance reduce(const Graph& g, const OccC1& o) {
  ReducedInstance r;
  std::vector<Edge> syn{Edge(o.v, o.w)};
  r.children = detail::derive(g, {o.u}, syn);
  r.plan.roles.u = o.u;
  r.plan.roles.v = o.v;
  r.plan.roles.w = o.w;
  detail::fill_plan(r, g, SubCase::kC1, syn);
  return r;
}

inline ReducedInstance reduce(const Graph& g, const OccC2& o) {
  ReducedInstance r;
  Graph h = delete_edge(g, o.u, o.v);
  r.children = detail::split_into_children(h, VertexMap::identity(g.order()));
  detail::require(r.children.size() == 2, "C2: deleting the bridge must give two parts");
  if (r.children[0].map.forward[o.u] == kNoVertex) std::swap(r.children[0], r.children[1]);
  r.plan.roles.u = o.u;
  r.plan.roles.v = o.v;
  detail::fill_plan(r, g, SubCase::kC2, {});
  return r;
}

inline ReducedInstance reduce(const Graph& g, const OccC3& o) {
  ReducedInstance r;
  Roles& ro = r.plan.roles;
  const std::vector<Vertex> uv{o.u, o.v};
  const int present = g.has_edge(o.x, o.up) + g.has_edge(o.up, o.y) +
                      g.has_edge(o.y, o.vp) + g.has_edge(o.vp, o.x);
  if (present <= 1) {
    // Label so that the present edge, if any, is xu'.
    Vertex x = o.x, y = o.y, u = o.u, v = o.v, up = o.up, vp = o.vp;
    for (int swap_xy = 0; swap_xy < 2; ++swap_xy) {
      for (int swap_uv = 0; swap_uv < 2; ++swap_uv) {
        Vertex cx = swap_xy ? o.y : o.x, cy = swap_xy ? o.x : o.y;
        Vertex cu = swap_uv ? o.v : o.u, cv = swap_uv ? o.u : o.v;
        Vertex cup = swap_uv ? o.vp : o.up, cvp = swap_uv ? o.up : o.vp;
        if (present == 1 && g.has_edge(cx, cup)) {
          x = cx, y = cy, u = cu, v = cv, up = cup, vp = cvp;
          swap_xy = swap_uv = 2;
        }
      }
    }
    std::vector<Edge> syn{Edge(up, y), Edge(vp, x)};
    if (!detail::connected_after(g, uv, syn)) {
      syn.emplace_back(x, y);
      ro.flag = true;
    }
    r.children = detail::derive(g, uv, syn);
    ro.u = u, ro.v = v, ro.x = x, ro.y = y, ro.up = up, ro.vp = vp;
    detail::require(r.children.size() == 1, "C3 sparse: child must be connected");
    detail::fill_plan(r, g, SubCase::kC3Sparse, syn);
  } else if (present == 4) {
    r.children = detail::derive(g, uv, {});
    ro.u = o.u, ro.v = o.v, ro.x = o.x, ro.y = o.y, ro.up = o.up, ro.vp = o.vp;
    detail::require(r.children.size() == 1, "C3 full: G - u - v must be connected");
    detail::fill_plan(r, g, SubCase::kC3Full, {});
  } else {
    // Candidates in the fixed order xu', u'y, yv', v'x. The chosen edge a-p'
    // is stored as x = a, up = p', u = owner of p'.
    struct Cand {
      Vertex a, b, p, q, pp, qp;
    };
    const std::array<Cand, 4> cands{{{o.x, o.y, o.u, o.v, o.up, o.vp},
                                     {o.y, o.x, o.u, o.v, o.up, o.vp},
                                     {o.y, o.x, o.v, o.u, o.vp, o.up},
                                     {o.x, o.y, o.v, o.u, o.vp, o.up}}};
    bool chosen = false;
    for (const Cand& c : cands) {
      if (g.has_edge(c.a, c.pp)) continue;
      std::vector<Edge> syn{Edge(c.a, c.pp)};
      if (!detail::connected_after(g, uv, syn)) continue;
      r.children = detail::derive(g, uv, syn);
      ro.x = c.a, ro.y = c.b, ro.u = c.p, ro.v = c.q, ro.up = c.pp, ro.vp = c.qp;
      detail::fill_plan(r, g, SubCase::kC3Partial, syn);
      chosen = true;
      break;
    }
    detail::require(chosen, "C3 partial: no missing edge reconnects G - u - v");
  }
  return r;
}

inline ReducedInstance reduce(const Graph& g, const OccC4& o) {
  ReducedInstance r;
  Roles& ro = r.plan.roles;
  const std::vector<Vertex> uv{o.u, o.v};
  auto common = common_neighbors(g, o.u, o.v);
  detail::require(common.size() != 2, "C4 with two common neighbors is C3");

  if (common.size() == 3) {
    // Two non-edges among the common neighbors share a center vertex.
    for (std::size_t i = 0; i < 3; ++i) {
      Vertex c = common[i], a = common[(i + 1) % 3], b = common[(i + 2) % 3];
      if (a > b) std::swap(a, b);
      if (g.has_edge(c, a) || g.has_edge(c, b)) continue;
      std::vector<Edge> syn{Edge(a, c), Edge(c, b)};
      r.children = detail::derive(g, uv, syn);
      detail::require(r.children.size() == 1, "C4 common3: child must be connected");
      ro.u = o.u, ro.v = o.v, ro.x = a, ro.y = c, ro.z = b;
      detail::fill_plan(r, g, SubCase::kC4Common3, syn);
      return r;
    }
    throw LiftError("C4 common3: no vertex misses both others");
  }

  for (int side = 0; side < 2; ++side) {
    const Vertex p = side == 0 ? o.u : o.v, q = side == 0 ? o.v : o.u;
    auto [gp, mp] = delete_vertices(g, {p});
    auto comps = components(gp);
    if (comps.size() < 3) continue;
    detail::require(comps.size() == 3, "C4 cut: G - u has more than three components");
    auto comp_of = [&](Vertex x) {
      Vertex cx = mp.forward[x];
      for (std::size_t i = 0; i < comps.size(); ++i) {
        if (std::binary_search(comps[i].begin(), comps[i].end(), cx)) return i;
      }
      return comps.size();
    };
    const auto ts = detail::others3(g, p, q);
    std::vector<Vertex> with_q, apart;
    for (Vertex t : ts) (comp_of(t) == comp_of(q) ? with_q : apart).push_back(t);
    detail::require(with_q.size() == 1 && apart.size() == 2 &&
                        comp_of(apart[0]) != comp_of(apart[1]),
                    "C4 cut: unexpected component structure");
    std::vector<Edge> syn{Edge(apart[0], apart[1])};
    r.children = detail::derive(g, {p}, syn);
    detail::require(r.children.size() == 2, "C4 cut: expected two children");
    if (r.children[0].map.forward[q] != kNoVertex) std::swap(r.children[0], r.children[1]);
    ro.u = p, ro.v = q;
    ro.t = {apart[0], apart[1], with_q[0]};
    detail::fill_plan(r, g, SubCase::kC4CutVertex, syn);
    return r;
  }

  const auto ts = detail::others3(g, o.u, o.v);
  const auto wsv = detail::others3(g, o.v, o.u);
  auto [h, hm] = delete_vertices(g, uv);
  auto comps = components(h);
  if (comps.size() >= 4) {
    detail::require(comps.size() == 4, "C4: G - u - v has more than four components");
    auto in = [&](const std::vector<Vertex>& comp, Vertex x) {
      return std::binary_search(comp.begin(), comp.end(), hm.forward[x]);
    };
    std::vector<std::pair<Vertex, Vertex>> both;
    Vertex t_only = kNoVertex, w_only = kNoVertex;
    for (const auto& comp : comps) {
      std::vector<Vertex> tin, win;
      for (Vertex t : ts) if (in(comp, t)) tin.push_back(t);
      for (Vertex w : wsv) if (in(comp, w)) win.push_back(w);
      detail::require(tin.size() <= 1 && win.size() <= 1 && !(tin.empty() && win.empty()),
                      "C4 four components: unexpected structure");
      if (!tin.empty() && !win.empty()) {
        both.emplace_back(tin[0], win[0]);
      } else if (!tin.empty()) {
        t_only = tin[0];
      } else {
        w_only = win[0];
      }
    }
    detail::require(both.size() == 2 && t_only != kNoVertex && w_only != kNoVertex,
                    "C4 four components: unexpected structure");
    ro.u = o.u, ro.v = o.v;
    ro.t = {both[0].first, both[1].first, t_only};
    ro.ws = {both[0].second, both[1].second, w_only};
    std::vector<Edge> syn{Edge(ro.t[0], ro.t[1]), Edge(ro.ws[0], ro.ws[1]),
                          Edge(ro.t[2], ro.ws[2])};
    r.children = detail::derive(g, uv, syn);
    detail::require(r.children.size() == 2, "C4 four components: expected two children");
    if (r.children[0].map.forward[ro.t[0]] == kNoVertex) std::swap(r.children[0], r.children[1]);
    detail::fill_plan(r, g, SubCase::kC4FourComponents, syn);
    return r;
  }

  // Connected case: lexicographically first labeling that keeps the child
  // connected.
  std::optional<std::array<Vertex, 6>> best;
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) {
      std::array<Vertex, 3> t{ts[(i + 1) % 3], ts[(i + 2) % 3], ts[i]};
      std::array<Vertex, 3> w{wsv[(j + 1) % 3], wsv[(j + 2) % 3], wsv[j]};
      if (t[0] > t[1]) std::swap(t[0], t[1]);
      if (w[0] > w[1]) std::swap(w[0], w[1]);
      if (g.has_edge(t[0], t[1]) || g.has_edge(w[0], w[1]) || t[2] == w[2]) continue;
      if (!detail::connected_after(g, uv, {Edge(t[0], t[1]), Edge(w[0], w[1])})) continue;
      std::array<Vertex, 6> key{t[0], t[1], t[2], w[0], w[1], w[2]};
      if (!best || key < *best) best = key;
    }
  }
  detail::require(best.has_value(), "C4 connected: no labeling keeps the child connected");
  ro.u = o.u, ro.v = o.v;
  ro.t = {(*best)[0], (*best)[1], (*best)[2]};
  ro.ws = {(*best)[3], (*best)[4], (*best)[5]};
  std::vector<Edge> syn{Edge(ro.t[0], ro.t[1]), Edge(ro.ws[0], ro.ws[1])};
  r.children = detail::derive(g, uv, syn);
  detail::require(r.children.size() == 1, "C4 connected: child must be connected");
  detail::fill_plan(r, g, SubCase::kC4Connected, syn);
  return r;
}

inline ReducedInstance reduce(const Graph& g, const OccC5& o) {
  ReducedInstance r;
  Roles& ro = r.plan.roles;

  // A pair of degree-4 triangle vertices with three common neighbors.
  const std::array<std::array<Vertex, 3>, 3> pairs{
      {{o.u, o.v, o.w}, {o.u, o.w, o.v}, {o.v, o.w, o.u}}};
  for (const auto& [a, b, c] : pairs) {
    if (g.degree(a) != 4 || g.degree(b) != 4) continue;
    auto common = common_neighbors(g, a, b);
    if (common.size() != 3) continue;
    const std::vector<Vertex> ab{a, b};
    ro.u = a, ro.v = b;
    int missing = 0;
    for (std::size_t i = 0; i < 3; ++i) {
      missing += !g.has_edge(common[i], common[(i + 1) % 3]);
    }
    if (missing >= 2) {
      for (std::size_t i = 0; i < 3; ++i) {
        Vertex center = common[i], p = common[(i + 1) % 3], q = common[(i + 2) % 3];
        if (p > q) std::swap(p, q);
        if (g.has_edge(center, p) || g.has_edge(center, q)) continue;
        std::vector<Edge> syn{Edge(p, center), Edge(center, q)};
        r.children = detail::derive(g, ab, syn);
        ro.x = p, ro.w = center, ro.y = q;
        detail::require(r.children.size() == 1, "C5 common3: child must be connected");
        detail::fill_plan(r, g, SubCase::kC5Common3TwoMissing, syn);
        return r;
      }
      throw LiftError("C5 common3: no center for the two missing edges");
    }
    if (missing == 1) {
      for (std::size_t i = 0; i < 3; ++i) {
        Vertex p = common[i], q = common[(i + 1) % 3], apex = common[(i + 2) % 3];
        if (g.has_edge(p, q)) continue;
        std::vector<Edge> syn{Edge(p, q)};
        r.children = detail::derive(g, ab, syn);
        ro.x = std::min(p, q), ro.y = std::max(p, q), ro.w = apex;
        detail::require(r.children.size() == 1, "C5 common3: child must be connected");
        detail::fill_plan(r, g, SubCase::kC5Common3OneMissing, syn);
        return r;
      }
    }
    r.children = detail::derive(g, ab, {});
    ro.w = c;
    const auto xy = detail::others2(g, a, b, c);
    ro.x = xy[0], ro.y = xy[1];
    detail::require(r.children.size() == 1, "C5 common3: G - u - v must be connected");
    detail::fill_plan(r, g, SubCase::kC5Common3Triangle, {});
    return r;
  }

  if (g.degree(o.v) == 2 || g.degree(o.w) == 2) {
    const Vertex u = o.u;
    const Vertex v = g.degree(o.v) == 2 ? o.v : o.w;
    const Vertex w = v == o.v ? o.w : o.v;
    auto [h1, m1] = delete_vertices(g, {v});
    auto [h2, m2] = contract_edge(h1, m1.forward[u], m1.forward[w]);
    detail::require(is_connected(h2), "C5 degree2: child must be connected");
    r.children.push_back({std::move(h2), compose(m1, m2)});
    ro.u = u, ro.v = v, ro.w = w;
    ro.x12 = detail::others2(g, u, v, w);
    detail::fill_plan(r, g, SubCase::kC5Degree2, {});
    return r;
  }

  // All three vertices have degree 4 and no pair shares an outside neighbor.
  for (const auto& [a, b, c] : pairs) {
    detail::require(g.degree(a) == 4 && common_neighbors(g, a, b) == std::vector<Vertex>{c},
                    "C5: triangle pair shares an outside neighbor");
  }
  const auto all_bridges = bridges(g);
  auto bridge = [&](Vertex a, Vertex b) {
    return std::binary_search(all_bridges.begin(), all_bridges.end(), Edge(a, b));
  };
  const std::array<Vertex, 3> tri{o.u, o.v, o.w};
  for (std::size_t i = 0; i < 3; ++i) {
    const Vertex owner = tri[i];
    const Vertex b = tri[(i + 1) % 3], c = tri[(i + 2) % 3];
    for (Vertex outer : detail::others2(g, owner, b, c)) {
      if (bridge(owner, outer)) continue;
      ro.u = owner, ro.v = std::min(b, c), ro.w = std::max(b, c);
      ro.x12 = {outer, detail::other_of(detail::others2(g, owner, b, c), outer)};
      ro.y12 = detail::others2(g, ro.v, ro.u, ro.w);
      ro.z12 = detail::others2(g, ro.w, ro.u, ro.v);
      auto [h1, m1] = delete_vertices(g, {ro.u});
      auto [h2, m2] = contract_edge(h1, m1.forward[ro.v], m1.forward[ro.w]);
      VertexMap m = compose(m1, m2);
      h2 = add_edge(h2, m.merged->into, m.forward[ro.x12[1]]);
      detail::require(is_connected(h2), "C5 non-cut: child must be connected");
      r.children.push_back({std::move(h2), std::move(m)});
      detail::fill_plan(r, g, SubCase::kC5NonCut, {});
      Edge syn_parent(r.plan.merged_placeholder(), ro.x12[1]);
      Edge syn_child(r.children[0].map.merged->into, r.children[0].map.forward[ro.x12[1]]);
      r.plan.synthetic.push_back({0, syn_child, syn_parent});
      return r;
    }
  }

  ro.u = o.u, ro.v = o.v, ro.w = o.w;
  ro.x12 = detail::others2(g, o.u, o.v, o.w);
  ro.y12 = detail::others2(g, o.v, o.u, o.w);
  ro.z12 = detail::others2(g, o.w, o.u, o.v);
  std::vector<Edge> syn{Edge(ro.x12[0], ro.y12[0]), Edge(ro.x12[1], ro.y12[1]),
                        Edge(ro.z12[0], ro.z12[1])};
  r.children = detail::derive(g, {o.u, o.v, o.w}, syn);
  detail::require(r.children.size() == 3, "C5 all-cut: expected three children");
  detail::fill_plan(r, g, SubCase::kC5AllCut, syn);
  return r;
}

/// Builds the reduced instance for `occ`, which must validate in `g`.
inline ReducedInstance reduce(const Graph& g, const Occurrence& occ) {
  if (!validate(g, occ)) {
    throw PreconditionError("reduce: occurrence " + describe(occ) +
                            " does not validate in the graph");
  }
  return std::visit([&g](const auto& o) { return reduce(g, o); }, occ);
}

}  // namespace gallai

#include "gallai/lift.hpp"
