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

#include <functional>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "gallai/decomposition.hpp"
#include "gallai/reductions.hpp"

namespace gallai {

namespace lift_detail {

using Pred = std::function<bool(const Path&)>;

inline std::size_t find_path(const PathDecomposition& d, const Pred& pred) {
  for (std::size_t i = 0; i < d.paths.size(); ++i) {
    if (pred(d.paths[i])) return i;
  }
  throw LiftError("lift: expected path not found");
}

inline std::size_t find_edge(const PathDecomposition& d, Vertex a, Vertex b) {
  auto i = d.find_edge(a, b);
  if (i == PathDecomposition::npos) {
    throw LiftError("lift: edge " + std::to_string(a) + "-" + std::to_string(b) +
                    " not found");
  }
  return i;
}

/// Replaces the placeholder `ph` in path i by `seq`, oriented so that
/// seq.front() sits next to `toward` (any side when toward is kNoVertex).
inline PathDecomposition substitute(PathDecomposition d, std::size_t i, Vertex ph,
                                    std::vector<Vertex> seq, Vertex toward) {
  auto& pv = d.paths[i].vertices;
  auto it = std::find(pv.begin(), pv.end(), ph);
  if (it == pv.end()) throw LiftError("lift: placeholder not on path");
  const auto pos = static_cast<std::size_t>(it - pv.begin());
  const Vertex prev = pos > 0 ? pv[pos - 1] : kNoVertex;
  const Vertex next = pos + 1 < pv.size() ? pv[pos + 1] : kNoVertex;
  if (toward != kNoVertex && toward == next) std::reverse(seq.begin(), seq.end());
  if (toward != kNoVertex && toward != prev && toward != next) {
    throw LiftError("lift: placeholder is not next to the expected vertex");
  }
  if (prev != kNoVertex && next != kNoVertex) {
    std::vector<Vertex> r{prev};
    r.insert(r.end(), seq.begin(), seq.end());
    r.push_back(next);
    return replace_subpath(std::move(d), i, Path{prev, ph, next}, Path(std::move(r)));
  }
  // Endpoint: the placeholder is a coordinate, not an edit, so splice in place.
  pv.erase(it);
  pv.insert(pv.begin() + static_cast<long>(pos), seq.begin(), seq.end());
  if (!d.paths[i].is_simple()) throw LiftError("lift: substitution is not simple");
  return d;
}

/// Orders an edge set as a single simple path, if it is one.
inline std::optional<Path> as_path(const std::vector<Edge>& edges) {
  if (edges.empty()) return std::nullopt;
  std::map<Vertex, std::vector<Vertex>> adj;
  for (const Edge& e : edges) {
    adj[e.a].push_back(e.b);
    adj[e.b].push_back(e.a);
  }
  Vertex start = kNoVertex;
  for (const auto& [v, nb] : adj) {
    if (nb.size() > 2) return std::nullopt;
    if (nb.size() == 1 && start == kNoVertex) start = v;
  }
  if (start == kNoVertex) return std::nullopt;  // cycle
  Path p{start};
  Vertex prev = kNoVertex, cur = start;
  while (true) {
    Vertex nxt = kNoVertex;
    for (Vertex x : adj[cur]) {
      if (x != prev) nxt = x;
    }
    if (nxt == kNoVertex) break;
    p.vertices.push_back(nxt);
    prev = cur;
    cur = nxt;
  }
  if (p.length() != edges.size()) return std::nullopt;  // disconnected
  return p;
}

inline std::vector<Edge> uncovered(const Graph& g, const PathDecomposition& d) {
  std::set<Edge> used;
  for (const auto& p : d.paths) {
    for (const Edge& e : p.edges()) used.insert(e);
  }
  std::vector<Edge> out;
  for (const Edge& e : g.edges()) {
    if (!used.contains(e)) out.push_back(e);
  }
  return out;
}

inline PathDecomposition lift_c2(PathDecomposition d, std::size_t first_child_paths,
                                 const Roles& ro) {
  std::size_t iu = PathDecomposition::npos, iv = PathDecomposition::npos;
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (i < first_child_paths && iu == PathDecomposition::npos && d.paths[i].is_endpoint(ro.u)) iu = i;
    if (i >= first_child_paths && iv == PathDecomposition::npos && d.paths[i].is_endpoint(ro.v)) iv = i;
  }
  if (iu == PathDecomposition::npos || iv == PathDecomposition::npos) {
    throw LiftError("C2: no path ends at a bridge endpoint");
  }
  Path pv = d.paths[iv];
  d.paths.erase(d.paths.begin() + static_cast<long>(iv));
  d = extend(std::move(d), iu, Path{ro.u, ro.v});
  return extend(std::move(d), iu, std::move(pv));
}

inline PathDecomposition lift_c3_sparse(PathDecomposition d, const Roles& ro) {
  const Vertex u = ro.u, v = ro.v, x = ro.x, y = ro.y, up = ro.up, vp = ro.vp;
  if (!ro.flag) {
    d = replace_edge(std::move(d), vp, x, Path{x, v, vp});
    d = replace_edge(std::move(d), up, y, Path{up, u, y});
    return add_path(std::move(d), Path{x, u, v, y});
  }
  const auto ia = find_edge(d, up, y), ib = find_edge(d, vp, x), ic = find_edge(d, x, y);
  if (ic != ia && ic != ib) {
    d = replace_edge(std::move(d), vp, x, Path{x, v, vp});
    d = replace_edge(std::move(d), up, y, Path{up, u, y});
    return replace_edge(std::move(d), x, y, Path{x, u, v, y});
  }
  if (ic == ib && ic != ia) {
    d = replace_subpath(std::move(d), ic, Path{y, x, vp}, Path{y, u, x, v, vp});
    return replace_edge(std::move(d), up, y, Path{up, u, v, y});
  }
  if (ic == ia && ic != ib) {
    d = replace_subpath(std::move(d), ic, Path{x, y, up}, Path{x, v, y, u, up});
    return replace_edge(std::move(d), vp, x, Path{vp, v, u, x});
  }
  // One path runs u'-y-x-v' through all three synthetic edges.
  d = split_at(std::move(d), ic, x);
  const auto left = find_edge(d, y, x);
  d = replace_subpath(std::move(d), left, Path{up, y, x}, Path{up, u, y, v, x});
  const auto right = find_edge(d, x, vp);
  return replace_subpath(std::move(d), right, Path{x, vp}, Path{x, u, v, vp});
}

inline PathDecomposition lift_c4_cut(PathDecomposition d, const Roles& ro) {
  const Vertex p = ro.u, q = ro.v, tb = ro.t[0], tc = ro.t[1], ta = ro.t[2];
  d = replace_edge(std::move(d), tb, tc, Path{tb, p, tc});
  d = split_at(std::move(d), find_edge(d, tb, p), p);
  auto qi = find_path(d, [&](const Path& pa) { return pa.is_endpoint(q) && !pa.contains(p); });
  Path qpath = d.paths[qi];
  d.paths.erase(d.paths.begin() + static_cast<long>(qi));
  auto left = find_edge(d, tb, p);
  d = extend(std::move(d), left, Path{p, q});
  d = extend(std::move(d), left, std::move(qpath));
  return extend(std::move(d), find_edge(d, p, tc), Path{p, ta});
}

// w has degree 2 once u and v are gone, so it ends every path through
// exactly one of xw, wy.
inline PathDecomposition lift_c5_triangle(PathDecomposition d, const Roles& ro) {
  const Vertex u = ro.u, v = ro.v, w = ro.w;
  Vertex x = ro.x, y = ro.y;
  const auto ixw = find_edge(d, x, w), iwy = find_edge(d, w, y);
  if (ixw == iwy) {
    // x-w-y inside one path S; xy lies on another path.
    d = replace_edge(std::move(d), x, y, Path{x, u, y});
    const auto s = find_edge(d, x, w);
    const std::size_t before = d.size();
    d = split_at(std::move(d), s, y);
    Path tail{y, x, v, w, u};
    if (d.size() == before) {
      d = extend(std::move(d), s, Path{y, v, u});
      return add_path(std::move(d), std::move(tail));
    }
    const bool front_has_w = d.paths[s].contains(w);
    d = extend(std::move(d), front_has_w ? s : s + 1, Path{y, v, u});
    return extend(std::move(d), front_has_w ? s + 1 : s, std::move(tail));
  }
  if (find_edge(d, x, y) == iwy) std::swap(x, y);
  // Q: the path ending x-w now ends x-u.
  d = substitute(std::move(d), find_edge(d, x, w), w, {u}, x);
  const auto ip = find_edge(d, x, y);
  const std::size_t before = d.size();
  d = split_at(std::move(d), ip, y);
  Path tail{y, u, v, x, w};
  if (d.size() == before) {
    d = extend(std::move(d), ip, Path{y, v, w});
    d = add_path(std::move(d), std::move(tail));
  } else {
    const bool front_has_xy = d.paths[ip].has_edge(x, y);
    d = extend(std::move(d), front_has_xy ? ip : ip + 1, Path{y, v, w});
    d = extend(std::move(d), front_has_xy ? ip + 1 : ip, std::move(tail));
  }
  // R: the path ending y-w.
  const auto ir = find_path(d, [&](const Path& p) {
    return p.has_edge(w, y) && !p.has_edge(v, w);
  });
  return extend(std::move(d), ir, Path{w, u});
}

inline PathDecomposition lift_c5_degree2(PathDecomposition d, const Roles& ro, Vertex ph) {
  const Vertex u = ro.u, v = ro.v, w = ro.w, x1 = ro.x12[0], x2 = ro.x12[1];
  const auto ia = find_edge(d, ph, x1), ib = find_edge(d, ph, x2);
  if (ia == ib) {
    d = substitute(std::move(d), ia, ph, {u}, kNoVertex);
    d = split_at(std::move(d), ia, u);
    d = extend(std::move(d), find_edge(d, x1, u), Path{u, w});
    d = extend(std::move(d), find_edge(d, x2, u), Path{u, v, w});
  } else {
    d = substitute(std::move(d), ia, ph, {u, w}, x1);
    d = substitute(std::move(d), ib, ph, {u, v, w}, x2);
  }
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (d.paths[i].contains(ph)) d = substitute(std::move(d), i, ph, {w}, kNoVertex);
  }
  return d;
}

inline PathDecomposition lift_c5_noncut(const Graph& g, PathDecomposition d, const Roles& ro,
                                        Vertex ph) {
  const Vertex u = ro.u, v = ro.v, w = ro.w, x2 = ro.x12[1];
  auto in_y = [&](Vertex t) { return t == ro.y12[0] || t == ro.y12[1]; };
  auto in_z = [&](Vertex t) { return t == ro.z12[0] || t == ro.z12[1]; };
  auto owner = [&](Vertex t) -> Vertex {
    if (in_y(t)) return v;
    if (in_z(t)) return w;
    if (t == x2) return u;
    throw LiftError("C5 non-cut: unexpected neighbor of the contracted vertex");
  };

  int through_yz = 0;
  for (std::size_t i = 0; i < d.size(); ++i) {
    const auto& pv = d.paths[i].vertices;
    auto it = std::find(pv.begin(), pv.end(), ph);
    if (it == pv.end()) continue;
    const Vertex prev = it != pv.begin() ? *(it - 1) : kNoVertex;
    const Vertex next = it + 1 != pv.end() ? *(it + 1) : kNoVertex;
    if (prev == kNoVertex || next == kNoVertex) {
      const Vertex t = prev == kNoVertex ? next : prev;
      d = substitute(std::move(d), i, ph, {owner(t)}, kNoVertex);
      continue;
    }
    const Vertex ry = in_y(prev) ? prev : (in_y(next) ? next : kNoVertex);
    const Vertex rz = in_z(prev) ? prev : (in_z(next) ? next : kNoVertex);
    if (ry != kNoVertex && rz != kNoVertex) {
      // ysz: yvwz first, yvuwz for the second one.
      std::vector<Vertex> seq = through_yz++ == 0 ? std::vector<Vertex>{v, w}
                                                  : std::vector<Vertex>{v, u, w};
      d = substitute(std::move(d), i, ph, std::move(seq), ry);
    } else if (prev == x2 || next == x2) {
      const Vertex t = prev == x2 ? next : prev;
      d = substitute(std::move(d), i, ph, {u, owner(t)}, x2);
    } else if (owner(prev) == owner(next)) {
      d = substitute(std::move(d), i, ph, {owner(prev)}, kNoVertex);
    } else {
      throw LiftError("C5 non-cut: unexpected pattern through the contracted vertex");
    }
  }

  auto residual = uncovered(g, d);
  if (!as_path(residual)) {
    // Extend a path ending in the triangle by uncovered triangle edges so the
    // remainder becomes a path.
    const std::array<Vertex, 3> tri{u, v, w};
    auto is_free = [&](Vertex a, Vertex b) {
      return std::find(residual.begin(), residual.end(), Edge(a, b)) != residual.end();
    };
    std::vector<std::vector<Vertex>> tails;
    for (Vertex r : tri) {
      for (Vertex o : tri) {
        if (o != r && is_free(r, o)) tails.push_back({r, o});
      }
    }
    for (Vertex r : tri) {
      for (Vertex o : tri) {
        for (Vertex o2 : tri) {
          if (o == r || o2 == r || o2 == o) continue;
          if (is_free(r, o) && is_free(o, o2)) tails.push_back({r, o, o2});
        }
      }
    }
    bool done = false;
    for (std::size_t i = 0; i < d.size() && !done; ++i) {
      for (const auto& tail : tails) {
        const Path& p = d.paths[i];
        if (!p.is_endpoint(tail[0])) continue;
        bool clash = false;
        for (std::size_t k = 1; k < tail.size(); ++k) clash |= p.contains(tail[k]);
        if (clash) continue;
        std::vector<Edge> rest;
        Path tp(tail);
        for (const Edge& e : residual) {
          if (!tp.has_edge(e.a, e.b)) rest.push_back(e);
        }
        if (!rest.empty() && !as_path(rest)) continue;
        d = extend(std::move(d), i, tp);
        residual = std::move(rest);
        done = true;
        break;
      }
    }
    if (!done) throw LiftError("C5 non-cut: remaining edges do not induce a path");
  }
  if (!residual.empty()) d = add_path(std::move(d), *as_path(residual));
  return d;
}

}  // namespace lift_detail

/// Turns decompositions of the children of `red` into a decomposition of
/// `parent`. Throws PreconditionError on an invalid child decomposition and
/// LiftError if the result fails verification or the path-count accounting.
inline PathDecomposition lift(const Graph& parent, const ReducedInstance& red,
                              std::span<const PathDecomposition> child_decomps) {
  using namespace lift_detail;
  const LiftPlan& plan = red.plan;
  if (child_decomps.size() != red.children.size()) {
    throw PreconditionError("lift: expected one decomposition per child");
  }
  PathDecomposition d;
  std::size_t first_child_paths = 0;
  for (std::size_t c = 0; c < red.children.size(); ++c) {
    auto report = verify(red.children[c].graph, child_decomps[c]);
    if (!report.valid) {
      throw PreconditionError("lift: child decomposition " + std::to_string(c) +
                              " is invalid: " + report.violations.front().describe());
    }
    for (const Path& p : child_decomps[c].paths) {
      Path q;
      for (Vertex x : p.vertices) q.vertices.push_back(plan.to_parent[c].at(x));
      d.paths.push_back(std::move(q));
    }
    if (c == 0) first_child_paths = d.size();
  }
  const std::size_t child_total = d.size();

  const Roles& ro = plan.roles;
  const Vertex ph = plan.merged_placeholder();
  try {
  switch (plan.sub_case) {
    case SubCase::kC1:
      d = replace_edge(std::move(d), ro.v, ro.w, Path{ro.v, ro.u, ro.w});
      break;
    case SubCase::kC2:
      d = lift_c2(std::move(d), first_child_paths, ro);
      break;
    case SubCase::kC3Sparse:
      d = lift_c3_sparse(std::move(d), ro);
      break;
    case SubCase::kC3Full:
      d = replace_edge(std::move(d), ro.x, ro.up, Path{ro.x, ro.v, ro.u, ro.up});
      d = add_path(std::move(d), Path{ro.up, ro.x, ro.u, ro.y, ro.v, ro.vp});
      break;
    case SubCase::kC3Partial:
      d = replace_edge(std::move(d), ro.x, ro.up, Path{ro.x, ro.v, ro.u, ro.up});
      d = add_path(std::move(d), Path{ro.x, ro.u, ro.y, ro.v, ro.vp});
      break;
    case SubCase::kC4Common3:
      d = replace_edge(std::move(d), ro.x, ro.y, Path{ro.x, ro.u, ro.y});
      d = replace_edge(std::move(d), ro.y, ro.z, Path{ro.y, ro.v, ro.z});
      d = add_path(std::move(d), Path{ro.x, ro.v, ro.u, ro.z});
      break;
    case SubCase::kC4CutVertex:
      d = lift_c4_cut(std::move(d), ro);
      break;
    case SubCase::kC4FourComponents:
      d = replace_edge(std::move(d), ro.t[0], ro.t[1], Path{ro.t[0], ro.u, ro.t[1]});
      d = replace_edge(std::move(d), ro.ws[0], ro.ws[1], Path{ro.ws[0], ro.v, ro.ws[1]});
      d = replace_edge(std::move(d), ro.t[2], ro.ws[2], Path{ro.t[2], ro.u, ro.v, ro.ws[2]});
      break;
    case SubCase::kC4Connected:
      d = replace_edge(std::move(d), ro.t[0], ro.t[1], Path{ro.t[0], ro.u, ro.t[1]});
      d = replace_edge(std::move(d), ro.ws[0], ro.ws[1], Path{ro.ws[0], ro.v, ro.ws[1]});
      d = add_path(std::move(d), Path{ro.t[2], ro.u, ro.v, ro.ws[2]});
      break;
    case SubCase::kC5Common3TwoMissing:
      d = replace_edge(std::move(d), ro.x, ro.w, Path{ro.x, ro.u, ro.w});
      d = replace_edge(std::move(d), ro.w, ro.y, Path{ro.w, ro.v, ro.y});
      d = add_path(std::move(d), Path{ro.x, ro.v, ro.u, ro.y});
      break;
    case SubCase::kC5Common3OneMissing:
      d = replace_edge(std::move(d), ro.x, ro.y, Path{ro.x, ro.u, ro.v, ro.y});
      d = add_path(std::move(d), Path{ro.x, ro.v, ro.w, ro.u, ro.y});
      break;
    case SubCase::kC5Common3Triangle:
      d = lift_c5_triangle(std::move(d), ro);
      break;
    case SubCase::kC5Degree2:
      d = lift_c5_degree2(std::move(d), ro, ph);
      break;
    case SubCase::kC5NonCut:
      d = lift_c5_noncut(parent, std::move(d), ro, ph);
      break;
    case SubCase::kC5AllCut:
      d = replace_edge(std::move(d), ro.x12[0], ro.y12[0],
                       Path{ro.x12[0], ro.u, ro.v, ro.y12[0]});
      d = replace_edge(std::move(d), ro.x12[1], ro.y12[1],
                       Path{ro.x12[1], ro.u, ro.w, ro.v, ro.y12[1]});
      d = replace_edge(std::move(d), ro.z12[0], ro.z12[1], Path{ro.z12[0], ro.w, ro.z12[1]});
      break;
  }
  } catch (const DecompositionError& e) {
    throw LiftError("lift " + to_string(plan.sub_case) + ": " + e.what());
  }

  auto report = verify(parent, d);
  if (!report.valid) {
    throw LiftError("lift " + to_string(plan.sub_case) + " produced an invalid decomposition: " +
                    report.violations.front().describe());
  }
  const long limit = static_cast<long>(child_total) + path_budget(plan.sub_case);
  if (static_cast<long>(d.size()) > limit) {
    throw LiftError("lift " + to_string(plan.sub_case) + " used " + std::to_string(d.size()) +
                    " paths, accounting allows " + std::to_string(limit));
  }
  return d;
}

}  // namespace gallai
