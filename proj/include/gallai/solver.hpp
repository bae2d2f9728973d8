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

#include <bit>
#include <chrono>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "gallai/configurations.hpp"
#include "gallai/decomposition.hpp"
#include "gallai/graph.hpp"
#include "gallai/reductions.hpp"

namespace gallai {

/// Thrown when the base-case search runs out of its node budget.
class BudgetExhausted : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr std::uint64_t kDefaultNodeBudget = 200'000'000;

struct SolveOptions {
  std::uint64_t node_budget = kDefaultNodeBudget;
};

enum class BaseKind { kHardCoded, kExactSearch, kTrivial };

inline std::string to_string(BaseKind k) {
  switch (k) {
    case BaseKind::kHardCoded: return "hard-coded";
    case BaseKind::kExactSearch: return "exact-search";
    case BaseKind::kTrivial: return "trivial";
  }
  return "?";
}

struct TraceStep {
  std::size_t depth = 0;
  std::size_t order = 0;
  Config config = Config::kC1;
  SubCase sub_case = SubCase::kC1;
};

struct BaseCase {
  std::size_t depth = 0;
  std::size_t order = 0;
  BaseKind kind = BaseKind::kTrivial;
  std::size_t target = 0;
};

struct SolveTrace {
  std::vector<TraceStep> steps;
  std::vector<BaseCase> base_cases;

  std::string describe() const {
    std::string out;
    for (const auto& s : steps) {
      out += std::string(2 * s.depth, ' ') + "n=" + std::to_string(s.order) + " " +
             to_string(s.config) + " " + to_string(s.sub_case) + "\n";
    }
    for (const auto& b : base_cases) {
      out += std::string(2 * b.depth, ' ') + "n=" + std::to_string(b.order) + " base " +
             to_string(b.kind);
      if (b.kind == BaseKind::kExactSearch) out += " k=" + std::to_string(b.target);
      out += "\n";
    }
    return out;
  }
};

struct SolveResult {
  PathDecomposition decomposition;
  SolveTrace trace;
  bool verified = false;
};

/// A lift or base case produced something that does not verify. Carries the
/// trace up to the failure.
class SolveFailure : public std::logic_error {
 public:
  SolveFailure(const std::string& what, SolveTrace t)
      : std::logic_error(what), trace(std::move(t)) {}
  SolveTrace trace;
};

namespace search_detail {

class Search {
 public:
  Search(const Graph& g, std::size_t k, std::uint64_t budget)
      : n_(g.order()), k_(k), budget_(budget), adj_(g.order(), 0), remaining_(g.size()) {
    for (const Edge& e : g.edges()) {
      adj_[e.a] |= bit(e.b);
      adj_[e.b] |= bit(e.a);
    }
  }

  std::optional<PathDecomposition> run() {
    if (!step()) return std::nullopt;
    PathDecomposition d;
    d.paths = paths_;
    return d;
  }

  std::uint64_t nodes() const { return nodes_; }

 private:
  static std::uint64_t bit(Vertex v) { return std::uint64_t{1} << v; }

  void take(Vertex a, Vertex b) {
    adj_[a] &= ~bit(b);
    adj_[b] &= ~bit(a);
    --remaining_;
  }
  void give(Vertex a, Vertex b) {
    adj_[a] |= bit(b);
    adj_[b] |= bit(a);
    ++remaining_;
  }

  // Per-component lower bound on the paths still needed.
  std::size_t residual_bound() const {
    std::uint64_t seen = 0;
    std::size_t total = 0;
    for (Vertex s = 0; s < n_; ++s) {
      if (adj_[s] == 0 || (seen & bit(s))) continue;
      std::uint64_t comp = bit(s), frontier = bit(s);
      while (frontier) {
        std::uint64_t next = 0;
        for (std::uint64_t f = frontier; f; f &= f - 1) {
          next |= adj_[std::countr_zero(f)];
        }
        frontier = next & ~comp;
        comp |= next;
      }
      seen |= comp;
      std::size_t odd = 0, deg_sum = 0;
      const auto nc = static_cast<std::size_t>(std::popcount(comp));
      for (std::uint64_t c = comp; c; c &= c - 1) {
        const auto d = static_cast<std::size_t>(std::popcount(adj_[std::countr_zero(c)]));
        deg_sum += d;
        odd += d & 1;
      }
      const std::size_t mc = deg_sum / 2;
      total += std::max({std::size_t{1}, (odd + 1) / 2, (mc + nc - 2) / (nc - 1)});
    }
    return total;
  }

  void tick() {
    if (++nodes_ > budget_) {
      throw BudgetExhausted("base-case search exceeded its budget of " +
                            std::to_string(budget_) + " nodes");
    }
  }

  bool step() {
    if (remaining_ == 0) return true;
    if (paths_.size() + residual_bound() > k_) return false;
    Vertex a = 0;
    while (adj_[a] == 0) ++a;
    const auto b = static_cast<Vertex>(std::countr_zero(adj_[a]));
    take(a, b);
    cur_ = {a, b};
    on_path_ = bit(a) | bit(b);
    const bool ok = grow(true);
    give(a, b);
    return ok;
  }

  // Grows the back end first, then the front end, then commits.
  bool grow(bool back) {
    tick();
    const Vertex end = back ? cur_.back() : cur_.front();
    for (std::uint64_t c = adj_[end] & ~on_path_; c; c &= c - 1) {
      const auto x = static_cast<Vertex>(std::countr_zero(c));
      take(end, x);
      on_path_ |= bit(x);
      if (back) {
        cur_.push_back(x);
      } else {
        cur_.insert(cur_.begin(), x);
      }
      if (grow(back)) return true;
      if (back) {
        cur_.pop_back();
      } else {
        cur_.erase(cur_.begin());
      }
      on_path_ &= ~bit(x);
      give(end, x);
    }
    if (back) return grow(false);

    paths_.push_back(Path(cur_));
    const auto saved = cur_;
    const auto saved_on = on_path_;
    if (step()) return true;
    cur_ = saved;
    on_path_ = saved_on;
    paths_.pop_back();
    return false;
  }

  std::size_t n_;
  std::size_t k_;
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
  std::vector<std::uint64_t> adj_;
  std::size_t remaining_;
  std::vector<Path> paths_;
  std::vector<Vertex> cur_;
  std::uint64_t on_path_ = 0;
};

inline bool is_path_graph(const Graph& g) {
  if (!is_connected(g) || g.size() + 1 != g.order()) return false;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (g.degree(v) > 2) return false;
  }
  return true;
}

inline PathDecomposition trivial_decomposition(const Graph& g) {
  Vertex start = 0;
  while (start < g.order() && g.degree(start) != 1) ++start;
  Path p{start};
  Vertex prev = kNoVertex, cur = start;
  while (true) {
    Vertex next = kNoVertex;
    for (Vertex x : g.neighbors(cur)) {
      if (x != prev) next = x;
    }
    if (next == kNoVertex) break;
    p.vertices.push_back(next);
    prev = cur;
    cur = next;
  }
  return PathDecomposition{{p}};
}

inline std::optional<PathDecomposition> hard_coded(const Graph& g) {
  if (g.order() == 3 && is_complete(g)) return PathDecomposition{{{0, 1, 2}, {0, 2}}};
  if (g.order() == 5 && is_complete(g)) {
    return PathDecomposition{{{0, 1, 2, 3, 4}, {1, 3, 0, 2, 4}, {0, 4, 1}}};
  }
  return std::nullopt;
}

inline void require_solvable(const Graph& g) {
  if (g.size() == 0) throw PreconditionError("graph has no edges");
  if (!is_connected(g)) throw PreconditionError("graph is not connected");
  if (max_degree(g) > 5) throw PreconditionError("max degree exceeds 5");
}

}  // namespace search_detail

/// Exact search for a decomposition into at most k paths.
inline std::optional<PathDecomposition> solve_base(const Graph& g, std::size_t k,
                                                   std::uint64_t node_budget = kDefaultNodeBudget) {
  if (g.order() > 64) throw PreconditionError("solve_base supports at most 64 vertices");
  return search_detail::Search(g, k, node_budget).run();
}

/// Exact minimum by iterative deepening from lower_bound.
inline std::pair<std::size_t, PathDecomposition> min_decomposition(
    const Graph& g, std::uint64_t node_budget = kDefaultNodeBudget) {
  for (std::size_t k = lower_bound(g);; ++k) {
    if (auto d = solve_base(g, k, node_budget)) return {k, std::move(*d)};
  }
}

/// True iff the even-degree vertices induce a forest. Only defined for
/// connected irreducible graphs of max degree at most 5 other than K3 and K5.
inline bool check_structure(const Graph& g) {
  search_detail::require_solvable(g);
  if (search_detail::hard_coded(g)) throw PreconditionError("check_structure: K3 and K5 are excluded");
  if (auto occ = detect(g)) {
    throw PreconditionError("check_structure: graph contains " + describe(*occ));
  }
  return is_forest(induced_even_subgraph(g).first);
}

namespace search_detail {

inline PathDecomposition solve_rec(const Graph& g, std::size_t depth, SolveTrace& trace,
                                   const SolveOptions& opts) {
  auto checked = [&](PathDecomposition d, const std::string& where) {
    auto report = verify(g, d);
    if (!report.valid || !report.good) {
      std::string why = report.valid ? "too many paths (" + std::to_string(report.path_count) +
                                           " > " + std::to_string(report.bound) + ")"
                                     : report.violations.front().describe();
      throw SolveFailure(where + " at n=" + std::to_string(g.order()) + ": " + why, trace);
    }
    return d;
  };
  if (g.size() == 0) return {};
  if (auto d = hard_coded(g)) {
    trace.base_cases.push_back({depth, g.order(), BaseKind::kHardCoded, 0});
    return *d;
  }
  if (auto occ = detect(g)) {
    auto red = reduce(g, *occ);
    trace.steps.push_back({depth, g.order(), red.plan.config, red.plan.sub_case});
    std::vector<PathDecomposition> parts;
    for (const auto& child : red.children) {
      parts.push_back(solve_rec(child.graph, depth + 1, trace, opts));
    }
    try {
      return checked(lift(g, red, parts), "lift " + to_string(red.plan.sub_case));
    } catch (const LiftError& e) {
      throw SolveFailure(e.what(), trace);
    }
  }
  if (is_path_graph(g)) {
    trace.base_cases.push_back({depth, g.order(), BaseKind::kTrivial, 1});
    return trivial_decomposition(g);
  }
  if (!is_forest(induced_even_subgraph(g).first)) {
    throw SolveFailure("irreducible graph with a non-forest even subgraph at n=" +
                           std::to_string(g.order()),
                       trace);
  }
  const std::size_t k = half_ceil(g.order());
  trace.base_cases.push_back({depth, g.order(), BaseKind::kExactSearch, k});
  auto d = solve_base(g, k, opts.node_budget);
  if (!d) {
    throw SolveFailure("no decomposition into " + std::to_string(k) +
                           " paths for an irreducible graph at n=" + std::to_string(g.order()),
                       trace);
  }
  return checked(std::move(*d), "base case");
}

}  // namespace search_detail

/// Good path decomposition of a connected graph with max degree at most 5.
inline SolveResult solve(const Graph& g, const SolveOptions& opts = {}) {
  search_detail::require_solvable(g);
  SolveResult r;
  r.decomposition = search_detail::solve_rec(g, 0, r.trace, opts);
  auto report = verify(g, r.decomposition);
  r.verified = report.valid && report.good;
  return r;
}

}  // namespace gallai
