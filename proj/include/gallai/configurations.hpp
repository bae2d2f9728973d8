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

// Detection of the five reducible configurations.
//
//   C1  degree-2 vertex u whose neighbors v, w are non-adjacent
//   C2  bridge uv with d(u), d(v) both even
//   C3  edge uv, d(u) = d(v) = 4, exactly two common neighbors x, y
//   C4  edge uv, d(u) = d(v) = 4, other neighbors t1..t3 / w1..w3 with
//       t1t2, w1w2 non-edges and t3 != w3
//   C5  triangle uvw with d(u) = 4 and d(v), d(w) in {2, 4}
//
// detect() returns the first occurrence under the priority C1 < C2 < C3 <
// C4 < C5, scanning vertices and edges in ascending id order. The reduction
// for each configuration relies on the higher-priority ones being absent.

#pragma once

#include <array>
#include <optional>
#include <sstream>
#include <string>
#include <variant>

#include "gallai/graph.hpp"

namespace gallai {

enum class Config { kC1 = 1, kC2, kC3, kC4, kC5 };

inline std::string to_string(Config c) {
  return "C" + std::to_string(static_cast<int>(c));
}

struct OccC1 {
  Vertex u, v, w;
  friend bool operator==(const OccC1&, const OccC1&) = default;
};

struct OccC2 {
  Vertex u, v;
  friend bool operator==(const OccC2&, const OccC2&) = default;
};

struct OccC3 {
  Vertex u, v, x, y, up, vp;  // up/vp: the remaining neighbor of u/v
  friend bool operator==(const OccC3&, const OccC3&) = default;
};

struct OccC4 {
  Vertex u, v;
  std::array<Vertex, 3> t;  // N(u) - v, labeled so t[0]t[1] is a non-edge
  std::array<Vertex, 3> w;  // N(v) - u, labeled so w[0]w[1] is a non-edge
  friend bool operator==(const OccC4&, const OccC4&) = default;
};

struct OccC5 {
  Vertex u, v, w;  // d(u) = 4
  // Neighbors outside the triangle, ascending; kNoVertex when absent.
  std::array<Vertex, 2> x{kNoVertex, kNoVertex};
  std::array<Vertex, 2> y{kNoVertex, kNoVertex};
  std::array<Vertex, 2> z{kNoVertex, kNoVertex};
  friend bool operator==(const OccC5&, const OccC5&) = default;
};

using Occurrence = std::variant<OccC1, OccC2, OccC3, OccC4, OccC5>;

inline Config config_of(const Occurrence& occ) {
  return static_cast<Config>(occ.index() + 1);
}

inline std::string describe(const Occurrence& occ) {
  std::ostringstream os;
  os << to_string(config_of(occ)) << "{";
  std::visit(
      [&os](const auto& o) {
        using T = std::decay_t<decltype(o)>;
        if constexpr (std::is_same_v<T, OccC1>) {
          os << "u=" << o.u << ", v=" << o.v << ", w=" << o.w;
        } else if constexpr (std::is_same_v<T, OccC2>) {
          os << "u=" << o.u << ", v=" << o.v;
        } else if constexpr (std::is_same_v<T, OccC3>) {
          os << "u=" << o.u << ", v=" << o.v << ", x=" << o.x << ", y=" << o.y
             << ", u'=" << o.up << ", v'=" << o.vp;
        } else if constexpr (std::is_same_v<T, OccC4>) {
          os << "u=" << o.u << ", v=" << o.v << ", t=" << o.t[0] << "," << o.t[1]
             << "," << o.t[2] << ", w=" << o.w[0] << "," << o.w[1] << "," << o.w[2];
        } else {
          os << "u=" << o.u << ", v=" << o.v << ", w=" << o.w;
        }
      },
      occ);
  os << "}";
  return os.str();
}

namespace detail {

inline std::array<Vertex, 3> others3(const Graph& g, Vertex center, Vertex skip) {
  std::array<Vertex, 3> out{};
  std::size_t k = 0;
  for (Vertex x : g.neighbors(center)) {
    if (x != skip) out.at(k++) = x;
  }
  return out;
}

inline std::array<Vertex, 2> others2(const Graph& g, Vertex center, Vertex skip1,
                                     Vertex skip2) {
  std::array<Vertex, 2> out{kNoVertex, kNoVertex};
  std::size_t k = 0;
  for (Vertex x : g.neighbors(center)) {
    if (x != skip1 && x != skip2 && k < 2) out[k++] = x;
  }
  return out;
}

/// Lexicographically smallest C4 labeling of (t, w), if one exists.
inline std::optional<OccC4> c4_labeling(const Graph& g, Vertex u, Vertex v) {
  const auto ts = others3(g, u, v);
  const auto ws = others3(g, v, u);
  std::optional<OccC4> best;
  auto key = [](const OccC4& o) {
    return std::array<Vertex, 6>{o.t[0], o.t[1], o.t[2], o.w[0], o.w[1], o.w[2]};
  };
  for (std::size_t i = 0; i < 3; ++i) {
    std::array<Vertex, 3> t{ts[(i + 1) % 3], ts[(i + 2) % 3], ts[i]};
    if (t[0] > t[1]) std::swap(t[0], t[1]);
    if (g.has_edge(t[0], t[1])) continue;
    for (std::size_t j = 0; j < 3; ++j) {
      std::array<Vertex, 3> w{ws[(j + 1) % 3], ws[(j + 2) % 3], ws[j]};
      if (w[0] > w[1]) std::swap(w[0], w[1]);
      if (g.has_edge(w[0], w[1]) || t[2] == w[2]) continue;
      OccC4 cand{u, v, t, w};
      if (!best || key(cand) < key(*best)) best = cand;
    }
  }
  return best;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Per-configuration detectors

inline std::optional<OccC1> detect_c1(const Graph& g) {
  for (Vertex u = 0; u < g.order(); ++u) {
    if (g.degree(u) != 2) continue;
    auto n = g.neighbors(u);
    if (!g.has_edge(n[0], n[1])) return OccC1{u, n[0], n[1]};
  }
  return std::nullopt;
}

inline std::optional<OccC2> detect_c2(const Graph& g) {
  for (const Edge& e : bridges(g)) {
    if (g.degree(e.a) % 2 == 0 && g.degree(e.b) % 2 == 0) return OccC2{e.a, e.b};
  }
  return std::nullopt;
}

inline std::optional<OccC3> detect_c3(const Graph& g) {
  for (const Edge& e : g.edges()) {
    if (g.degree(e.a) != 4 || g.degree(e.b) != 4) continue;
    auto common = common_neighbors(g, e.a, e.b);
    if (common.size() != 2) continue;
    Vertex up = kNoVertex, vp = kNoVertex;
    for (Vertex x : g.neighbors(e.a)) {
      if (x != e.b && x != common[0] && x != common[1]) up = x;
    }
    for (Vertex x : g.neighbors(e.b)) {
      if (x != e.a && x != common[0] && x != common[1]) vp = x;
    }
    return OccC3{e.a, e.b, common[0], common[1], up, vp};
  }
  return std::nullopt;
}

inline std::optional<OccC4> detect_c4(const Graph& g) {
  for (const Edge& e : g.edges()) {
    if (g.degree(e.a) != 4 || g.degree(e.b) != 4) continue;
    if (auto occ = detail::c4_labeling(g, e.a, e.b)) return occ;
  }
  return std::nullopt;
}

inline std::optional<OccC5> detect_c5(const Graph& g) {
  auto deg24 = [&g](Vertex x) { return g.degree(x) == 2 || g.degree(x) == 4; };
  for (Vertex u = 0; u < g.order(); ++u) {
    if (g.degree(u) != 4) continue;
    auto n = g.neighbors(u);
    for (std::size_t i = 0; i < n.size(); ++i) {
      for (std::size_t j = i + 1; j < n.size(); ++j) {
        Vertex v = n[i], w = n[j];
        if (!g.has_edge(v, w) || !deg24(v) || !deg24(w)) continue;
        OccC5 occ{u, v, w};
        occ.x = detail::others2(g, u, v, w);
        occ.y = detail::others2(g, v, u, w);
        occ.z = detail::others2(g, w, u, v);
        return occ;
      }
    }
  }
  return std::nullopt;
}

inline std::optional<Occurrence> detect(const Graph& g) {
  if (auto o = detect_c1(g)) return *o;
  if (auto o = detect_c2(g)) return *o;
  if (auto o = detect_c3(g)) return *o;
  if (auto o = detect_c4(g)) return *o;
  if (auto o = detect_c5(g)) return *o;
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Validation against the host graph

inline bool validate(const Graph& g, const OccC1& o) {
  auto ok = [&](Vertex x) { return x < g.order(); };
  if (!ok(o.u) || !ok(o.v) || !ok(o.w) || o.v == o.w) return false;
  return g.degree(o.u) == 2 && g.has_edge(o.u, o.v) && g.has_edge(o.u, o.w) &&
         !g.has_edge(o.v, o.w);
}

inline bool validate(const Graph& g, const OccC2& o) {
  if (o.u >= g.order() || o.v >= g.order() || !g.has_edge(o.u, o.v)) return false;
  return g.degree(o.u) % 2 == 0 && g.degree(o.v) % 2 == 0 && is_bridge(g, o.u, o.v);
}

inline bool validate(const Graph& g, const OccC3& o) {
  for (Vertex x : {o.u, o.v, o.x, o.y, o.up, o.vp}) {
    if (x >= g.order()) return false;
  }
  if (!g.has_edge(o.u, o.v) || g.degree(o.u) != 4 || g.degree(o.v) != 4) return false;
  auto common = common_neighbors(g, o.u, o.v);
  if (common.size() != 2 || common[0] != std::min(o.x, o.y) ||
      common[1] != std::max(o.x, o.y)) {
    return false;
  }
  return o.up != o.vp && g.has_edge(o.u, o.up) && g.has_edge(o.v, o.vp) &&
         o.up != o.v && o.vp != o.u && o.up != o.x && o.up != o.y && o.vp != o.x &&
         o.vp != o.y;
}

inline bool validate(const Graph& g, const OccC4& o) {
  if (o.u >= g.order() || o.v >= g.order() || !g.has_edge(o.u, o.v)) return false;
  if (g.degree(o.u) != 4 || g.degree(o.v) != 4) return false;
  auto ts = o.t, ws = o.w;
  std::sort(ts.begin(), ts.end());
  std::sort(ws.begin(), ws.end());
  if (ts != detail::others3(g, o.u, o.v) || ws != detail::others3(g, o.v, o.u)) {
    return false;
  }
  return !g.has_edge(o.t[0], o.t[1]) && !g.has_edge(o.w[0], o.w[1]) && o.t[2] != o.w[2];
}

inline bool validate(const Graph& g, const OccC5& o) {
  for (Vertex x : {o.u, o.v, o.w}) {
    if (x >= g.order()) return false;
  }
  if (!g.has_edge(o.u, o.v) || !g.has_edge(o.u, o.w) || !g.has_edge(o.v, o.w)) {
    return false;
  }
  auto deg24 = [&g](Vertex x) { return g.degree(x) == 2 || g.degree(x) == 4; };
  if (g.degree(o.u) != 4 || !deg24(o.v) || !deg24(o.w)) return false;
  // Extras are optional; when present they must be the actual outer neighbors.
  const std::array<Vertex, 2> none{kNoVertex, kNoVertex};
  auto extras_ok = [&](const std::array<Vertex, 2>& named, Vertex c, Vertex a, Vertex b) {
    return named == none || named == detail::others2(g, c, a, b);
  };
  return extras_ok(o.x, o.u, o.v, o.w) && extras_ok(o.y, o.v, o.u, o.w) &&
         extras_ok(o.z, o.w, o.u, o.v);
}

inline bool validate(const Graph& g, const Occurrence& occ) {
  return std::visit([&g](const auto& o) { return validate(g, o); }, occ);
}

}  // namespace gallai
