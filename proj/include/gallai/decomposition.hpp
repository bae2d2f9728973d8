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
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "gallai/graph.hpp"

namespace gallai {

/// An editing primitive was applied outside its preconditions.
class DecompositionError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// A path given by its vertex sequence (at least two vertices once valid).
struct Path {
  std::vector<Vertex> vertices;

  Path() = default;
  Path(std::initializer_list<Vertex> vs) : vertices(vs) {}
  explicit Path(std::vector<Vertex> vs) : vertices(std::move(vs)) {}

  std::size_t length() const { return vertices.empty() ? 0 : vertices.size() - 1; }
  Vertex front() const { return vertices.front(); }
  Vertex back() const { return vertices.back(); }
  bool is_endpoint(Vertex v) const {
    return !vertices.empty() && (front() == v || back() == v);
  }
  bool contains(Vertex v) const {
    return std::find(vertices.begin(), vertices.end(), v) != vertices.end();
  }
  bool is_simple() const {
    auto sorted = vertices;
    std::sort(sorted.begin(), sorted.end());
    return std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
  }
  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    for (std::size_t i = 0; i + 1 < vertices.size(); ++i) {
      out.emplace_back(vertices[i], vertices[i + 1]);
    }
    return out;
  }
  bool has_edge(Vertex a, Vertex b) const {
    for (std::size_t i = 0; i + 1 < vertices.size(); ++i) {
      if (Edge(vertices[i], vertices[i + 1]) == Edge(a, b)) return true;
    }
    return false;
  }
  Path reversed() const {
    return Path(std::vector<Vertex>(vertices.rbegin(), vertices.rend()));
  }

  friend bool operator==(const Path&, const Path&) = default;
};

struct PathDecomposition {
  std::vector<Path> paths;

  std::size_t size() const { return paths.size(); }

  /// Index of the path holding edge ab, or npos.
  std::size_t find_edge(Vertex a, Vertex b) const {
    for (std::size_t i = 0; i < paths.size(); ++i) {
      if (paths[i].has_edge(a, b)) return i;
    }
    return npos;
  }

  std::size_t total_edges() const {
    std::size_t total = 0;
    for (const auto& p : paths) total += p.length();
    return total;
  }

  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  friend bool operator==(const PathDecomposition&, const PathDecomposition&) = default;
};

// ---------------------------------------------------------------------------
// Verification

enum class ViolationKind {
  kTooShort,        // fewer than two vertices
  kOutOfRange,      // vertex id not in the graph
  kNonEdgeStep,     // consecutive pair is not an edge
  kRepeatedVertex,  // path revisits a vertex
  kDuplicatedEdge,  // edge used twice across the decomposition
  kUncoveredEdge,   // graph edge in no path
};

inline std::string_view to_string(ViolationKind k) {
  switch (k) {
    case ViolationKind::kTooShort: return "too short";
    case ViolationKind::kOutOfRange: return "vertex out of range";
    case ViolationKind::kNonEdgeStep: return "non-edge step";
    case ViolationKind::kRepeatedVertex: return "repeated vertex";
    case ViolationKind::kDuplicatedEdge: return "duplicated edge";
    case ViolationKind::kUncoveredEdge: return "uncovered edge";
  }
  return "unknown";
}

struct Violation {
  ViolationKind kind;
  std::size_t path = PathDecomposition::npos;  // npos for uncovered edges
  Edge edge{};
  Vertex vertex = kNoVertex;

  std::string describe() const {
    std::ostringstream os;
    os << to_string(kind);
    if (path != PathDecomposition::npos) os << " in path " << path;
    switch (kind) {
      case ViolationKind::kRepeatedVertex:
      case ViolationKind::kOutOfRange:
        os << " (vertex " << vertex << ")";
        break;
      case ViolationKind::kNonEdgeStep:
      case ViolationKind::kDuplicatedEdge:
      case ViolationKind::kUncoveredEdge:
        os << " (" << edge.a << "-" << edge.b << ")";
        break;
      default:
        break;
    }
    return os.str();
  }
};

struct VerifyReport {
  bool valid = false;
  std::vector<Violation> violations;
  std::size_t path_count = 0;
  std::size_t bound = 0;  // ceil(n/2) of the reference graph
  bool good = false;

  bool has(ViolationKind k) const {
    return std::any_of(violations.begin(), violations.end(),
                       [k](const Violation& v) { return v.kind == k; });
  }
};

inline std::size_t half_ceil(std::size_t n) { return (n + 1) / 2; }

/// Checks `d` against `g`, collecting every violation. Never throws.
inline VerifyReport verify(const Graph& g, const PathDecomposition& d) {
  VerifyReport r;
  r.path_count = d.size();
  r.bound = half_ceil(g.order());
  std::set<Edge> used;
  for (std::size_t i = 0; i < d.paths.size(); ++i) {
    const auto& vs = d.paths[i].vertices;
    if (vs.size() < 2) {
      r.violations.push_back({ViolationKind::kTooShort, i});
    }
    std::set<Vertex> seen;
    for (std::size_t j = 0; j < vs.size(); ++j) {
      if (vs[j] >= g.order()) {
        r.violations.push_back({ViolationKind::kOutOfRange, i, {}, vs[j]});
      }
      if (!seen.insert(vs[j]).second) {
        r.violations.push_back({ViolationKind::kRepeatedVertex, i, {}, vs[j]});
      }
      if (j + 1 < vs.size()) {
        Edge e(vs[j], vs[j + 1]);
        if (!g.has_edge(e.a, e.b)) {
          r.violations.push_back({ViolationKind::kNonEdgeStep, i, e});
        } else if (!used.insert(e).second) {
          r.violations.push_back({ViolationKind::kDuplicatedEdge, i, e});
        }
      }
    }
  }
  for (const Edge& e : g.edges()) {
    if (!used.contains(e)) {
      r.violations.push_back({ViolationKind::kUncoveredEdge, PathDecomposition::npos, e});
    }
  }
  r.valid = r.violations.empty();
  r.good = r.valid && r.path_count <= r.bound;
  return r;
}

inline bool is_good(const Graph& g, const PathDecomposition& d) {
  auto report = verify(g, d);
  if (!report.valid) {
    throw PreconditionError("is_good: decomposition is not valid: " +
                            report.violations.front().describe());
  }
  return report.good;
}

/// max(ceil(odd/2), ceil(m/(n-1))): every odd vertex ends a path and no
/// path has more than n-1 edges.
inline std::size_t lower_bound(const Graph& g) {
  if (g.size() == 0) throw PreconditionError("lower_bound of edgeless graph");
  std::size_t odd = 0;
  for (Vertex v = 0; v < g.order(); ++v) odd += g.degree(v) % 2;
  const std::size_t by_odd = (odd + 1) / 2;
  const std::size_t cap = g.order() - 1;
  const std::size_t by_length = (g.size() + cap - 1) / cap;
  return std::max(by_odd, by_length);
}

// ---------------------------------------------------------------------------
// Editing primitives. Each takes the decomposition by value and returns the
// edited copy; a violated precondition throws DecompositionError.

namespace detail {

inline void require_index(const PathDecomposition& d, std::size_t i) {
  if (i >= d.paths.size()) {
    throw DecompositionError("path index " + std::to_string(i) + " out of range");
  }
}

inline void require_simple(const Path& p, std::string_view what) {
  if (!p.is_simple()) throw DecompositionError(std::string(what) + ": result is not simple");
}

}  // namespace detail

/// Replaces the contiguous subpath `q` of path `i` with `r`, where `r` has the
/// same end vertices as `q` (either orientation).
inline PathDecomposition replace_subpath(PathDecomposition d, std::size_t i,
                                         const Path& q, Path r) {
  detail::require_index(d, i);
  if (q.vertices.size() < 2 || r.vertices.size() < 2) {
    throw DecompositionError("replace: subpaths need at least one edge");
  }
  auto& pv = d.paths[i].vertices;
  auto fwd = std::search(pv.begin(), pv.end(), q.vertices.begin(), q.vertices.end());
  Path qq = q;
  if (fwd == pv.end()) {
    qq = q.reversed();
    fwd = std::search(pv.begin(), pv.end(), qq.vertices.begin(), qq.vertices.end());
    if (fwd == pv.end()) throw DecompositionError("replace: Q is not a subpath of P");
  }
  if (r.front() == qq.back() && r.back() == qq.front()) r = r.reversed();
  if (r.front() != qq.front() || r.back() != qq.back()) {
    throw DecompositionError("replace: R and Q have different end vertices");
  }
  auto pos = fwd - pv.begin();
  std::vector<Vertex> out(pv.begin(), pv.begin() + pos);
  out.insert(out.end(), r.vertices.begin(), r.vertices.end());
  out.insert(out.end(), pv.begin() + pos + static_cast<long>(qq.vertices.size()), pv.end());
  pv = std::move(out);
  detail::require_simple(d.paths[i], "replace");
  return d;
}

/// Replaces the single edge ab (wherever it lies in `d`) with `r`.
inline PathDecomposition replace_edge(PathDecomposition d, Vertex a, Vertex b,
                                      const Path& r) {
  auto i = d.find_edge(a, b);
  if (i == PathDecomposition::npos) {
    throw DecompositionError("replace: edge " + std::to_string(a) + "-" +
                             std::to_string(b) + " not in decomposition");
  }
  return replace_subpath(std::move(d), i, Path{a, b}, r);
}

/// Appends `r` at the endpoint it shares with path `i`.
inline PathDecomposition extend(PathDecomposition d, std::size_t i, Path r) {
  detail::require_index(d, i);
  auto& p = d.paths[i];
  if (r.vertices.size() < 2) throw DecompositionError("extend: R has no edge");
  if (p.back() == r.back() || p.front() == r.front()) r = r.reversed();
  std::vector<Vertex> out;
  if (p.back() == r.front()) {
    out = p.vertices;
    out.insert(out.end(), r.vertices.begin() + 1, r.vertices.end());
  } else if (r.back() == p.front()) {
    out = r.vertices;
    out.insert(out.end(), p.vertices.begin() + 1, p.vertices.end());
  } else {
    throw DecompositionError("extend: R shares no endpoint with P");
  }
  p.vertices = std::move(out);
  detail::require_simple(p, "extend");
  return d;
}

/// Splits path `i` at `u`. The part containing the front stays at index `i`;
/// the other part is inserted right after it. Splitting at an endpoint is a
/// no-op, since the empty part is dropped.
inline PathDecomposition split_at(PathDecomposition d, std::size_t i, Vertex u) {
  detail::require_index(d, i);
  auto& pv = d.paths[i].vertices;
  auto it = std::find(pv.begin(), pv.end(), u);
  if (it == pv.end()) throw DecompositionError("split: vertex not on path");
  if (it == pv.begin() || it + 1 == pv.end()) return d;
  Path second(std::vector<Vertex>(it, pv.end()));
  pv.erase(it + 1, pv.end());
  d.paths.insert(d.paths.begin() + static_cast<long>(i) + 1, std::move(second));
  return d;
}

inline PathDecomposition add_path(PathDecomposition d, Path r) {
  if (r.vertices.size() < 2) throw DecompositionError("add: path has no edge");
  detail::require_simple(r, "add");
  for (const Edge& e : r.edges()) {
    if (d.find_edge(e.a, e.b) != PathDecomposition::npos) {
      throw DecompositionError("add: edge " + std::to_string(e.a) + "-" +
                               std::to_string(e.b) + " already covered");
    }
  }
  d.paths.push_back(std::move(r));
  return d;
}

// ---------------------------------------------------------------------------
// Text format: one path per line, whitespace-separated ids, '#' comments.

inline PathDecomposition parse_decomposition(std::string_view text) {
  PathDecomposition d;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string tok;
    Path p;
    while (ls >> tok) {
      if (tok.empty() || !std::all_of(tok.begin(), tok.end(),
                                      [](char c) { return c >= '0' && c <= '9'; })) {
        throw PreconditionError("decomposition line " + std::to_string(lineno) +
                                ": bad token '" + tok + "'");
      }
      unsigned long value = std::stoul(tok);
      if (value >= kNoVertex) {
        throw PreconditionError("decomposition line " + std::to_string(lineno) +
                                ": id too large");
      }
      p.vertices.push_back(static_cast<Vertex>(value));
    }
    if (!p.vertices.empty()) d.paths.push_back(std::move(p));
  }
  return d;
}

/// One line per path, each oriented with the smaller endpoint first.
inline std::string write_decomposition(const PathDecomposition& d) {
  std::ostringstream os;
  for (const auto& p : d.paths) {
    const Path& q = (p.vertices.size() >= 2 && p.back() < p.front()) ? p.reversed() : p;
    for (std::size_t i = 0; i < q.vertices.size(); ++i) {
      os << (i ? " " : "") << q.vertices[i];
    }
    os << '\n';
  }
  return os.str();
}

}  // namespace gallai
