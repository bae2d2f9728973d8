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

#include <chrono>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "gallai/configurations.hpp"
#include "gallai/io.hpp"
#include "gallai/reductions.hpp"
#include "gallai/solver.hpp"

namespace gallai {

struct GraphRecord {
  std::size_t index = 0;
  std::string graph6;
  std::size_t n = 0, m = 0, max_degree = 0;
  std::size_t size = 0;   // paths in the result
  std::size_t bound = 0;  // the target the result is measured against
  std::map<std::string, std::size_t> histogram;  // sub-case -> count
  bool verified = false;
  bool irreducible = false;
  std::string status;  // "ok", "skipped: ...", "odd-semi-clique", "finding", ...
  double millis = 0;
};

struct Finding {
  std::size_t index = 0;
  std::string graph6;
  std::string kind;
  std::string detail;
};

struct BatchReport {
  std::string command;
  std::vector<GraphRecord> records;
  std::map<std::string, std::size_t> counters;
  std::map<std::string, std::size_t> histogram;
  std::vector<Finding> findings;
  bool budget_exhausted = false;

  void add_finding(GraphRecord& r, std::string kind, std::string detail) {
    r.status = "finding";
    findings.push_back({r.index, r.graph6, std::move(kind), std::move(detail)});
  }
};

namespace batch_detail {

inline GraphRecord start(std::size_t i, const Graph& g) {
  GraphRecord r;
  r.index = i;
  r.graph6 = write_graph6(g);
  r.n = g.order();
  r.m = g.size();
  r.max_degree = g.order() ? max_degree(g) : 0;
  return r;
}

// Empty string when the graph is in the solvable class.
inline std::string outside_class(const Graph& g) {
  if (g.size() == 0) return "no edges";
  if (!is_connected(g)) return "not connected";
  if (max_degree(g) > 5) return "max degree exceeds 5";
  return {};
}

class Stopwatch {
 public:
  double millis() const {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0_).count();
  }

 private:
  std::chrono::steady_clock::time_point t0_ = std::chrono::steady_clock::now();
};

inline void finish(BatchReport& rep) {
  rep.counters["graphs"] = rep.records.size();
  rep.counters["findings"] = rep.findings.size();
  for (const auto& r : rep.records) {
    for (const auto& [k, c] : r.histogram) rep.histogram[k] += c;
  }
}

}  // namespace batch_detail

/// Solves and verifies every graph; irreducible graphs other than K3 and K5
/// must also have a forest of even-degree vertices.
inline BatchReport run_check(std::span<const Graph> graphs, const SolveOptions& opts = {}) {
  BatchReport rep;
  rep.command = "check";
  for (std::size_t i = 0; i < graphs.size(); ++i) {
    const Graph& g = graphs[i];
    auto r = batch_detail::start(i, g);
    r.bound = half_ceil(g.order());
    batch_detail::Stopwatch clock;
    if (auto why = batch_detail::outside_class(g); !why.empty()) {
      r.status = "skipped: " + why;
      ++rep.counters["skipped"];
      rep.records.push_back(std::move(r));
      continue;
    }
    r.status = "ok";
    try {
      auto res = solve(g, opts);
      r.size = res.decomposition.size();
      r.verified = res.verified;
      for (const auto& s : res.trace.steps) ++r.histogram[to_string(s.sub_case)];
      if (!res.verified) rep.add_finding(r, "unverified", "decomposition is not valid and good");
    } catch (const BudgetExhausted& e) {
      rep.budget_exhausted = true;
      rep.add_finding(r, "budget", e.what());
    } catch (const SolveFailure& e) {
      rep.add_finding(r, "solve", e.what());
    }
    const bool base = (g.order() == 3 || g.order() == 5) && is_complete(g);
    if (!base && !detect(g)) {
      r.irreducible = true;
      ++rep.counters["irreducible"];
      if (!check_structure(g)) rep.add_finding(r, "structure", "even-degree vertices do not induce a forest");
    }
    if (r.verified) ++rep.counters["verified"];
    r.millis = clock.millis();
    rep.records.push_back(std::move(r));
  }
  batch_detail::finish(rep);
  return rep;
}

/// Configuration and sub-case of the first reduction step only.
inline BatchReport run_scan(std::span<const Graph> graphs) {
  BatchReport rep;
  rep.command = "scan";
  for (std::size_t i = 0; i < graphs.size(); ++i) {
    const Graph& g = graphs[i];
    auto r = batch_detail::start(i, g);
    batch_detail::Stopwatch clock;
    if (auto why = batch_detail::outside_class(g); !why.empty()) {
      r.status = "skipped: " + why;
      ++rep.counters["skipped"];
    } else if (auto occ = detect(g)) {
      ++r.histogram[to_string(reduce(g, *occ).plan.sub_case)];
      r.status = "reducible";
      ++rep.counters["reducible"];
    } else {
      r.status = "irreducible";
      r.irreducible = true;
      ++rep.counters["irreducible"];
    }
    r.millis = clock.millis();
    rep.records.push_back(std::move(r));
  }
  batch_detail::finish(rep);
  return rep;
}

using FloorSolver = std::function<std::optional<PathDecomposition>(const Graph&, std::size_t)>;

/// Tries floor(n/2) paths on every graph. Failures that are not odd
/// semi-cliques are reported as findings; they never abort the run.
inline BatchReport run_floor_search(std::span<const Graph> graphs, const FloorSolver& solver) {
  BatchReport rep;
  rep.command = "floor-search";
  for (std::size_t i = 0; i < graphs.size(); ++i) {
    const Graph& g = graphs[i];
    auto r = batch_detail::start(i, g);
    r.bound = g.order() / 2;
    batch_detail::Stopwatch clock;
    if (auto why = batch_detail::outside_class(g); !why.empty()) {
      r.status = "skipped: " + why;
      ++rep.counters["skipped"];
      rep.records.push_back(std::move(r));
      continue;
    }
    try {
      auto d = solver(g, r.bound);
      if (d && verify(g, *d).valid && d->size() <= r.bound) {
        r.size = d->size();
        r.verified = true;
        r.status = "ok";
        ++rep.counters["within-floor"];
      } else if (is_odd_semi_clique(g)) {
        r.status = "odd-semi-clique";
        ++rep.counters["odd-semi-clique"];
      } else {
        rep.add_finding(r, "floor", "no decomposition into " + std::to_string(r.bound) +
                                        " paths and not an odd semi-clique");
      }
    } catch (const BudgetExhausted& e) {
      rep.budget_exhausted = true;
      rep.add_finding(r, "budget", e.what());
    }
    r.millis = clock.millis();
    rep.records.push_back(std::move(r));
  }
  batch_detail::finish(rep);
  return rep;
}

inline BatchReport run_floor_search(std::span<const Graph> graphs, const SolveOptions& opts = {}) {
  return run_floor_search(
      graphs, [&](const Graph& g, std::size_t k) { return solve_base(g, k, opts.node_budget); });
}

inline nlohmann::json to_json(const BatchReport& rep) {
  nlohmann::json j;
  j["command"] = rep.command;
  j["counters"] = rep.counters;
  j["histogram"] = rep.histogram;
  j["budget_exhausted"] = rep.budget_exhausted;
  j["records"] = nlohmann::json::array();
  for (const auto& r : rep.records) {
    j["records"].push_back({{"index", r.index},
                            {"graph6", r.graph6},
                            {"n", r.n},
                            {"m", r.m},
                            {"max_degree", r.max_degree},
                            {"size", r.size},
                            {"bound", r.bound},
                            {"histogram", r.histogram},
                            {"verified", r.verified},
                            {"irreducible", r.irreducible},
                            {"status", r.status},
                            {"millis", r.millis}});
  }
  j["findings"] = nlohmann::json::array();
  for (const auto& f : rep.findings) {
    j["findings"].push_back(
        {{"index", f.index}, {"graph6", f.graph6}, {"kind", f.kind}, {"detail", f.detail}});
  }
  return j;
}

inline std::string to_text(const BatchReport& rep) {
  std::string out;
  for (const auto& r : rep.records) {
    out += std::to_string(r.index) + " " + r.graph6 + " n=" + std::to_string(r.n) +
           " m=" + std::to_string(r.m) + " maxdeg=" + std::to_string(r.max_degree);
    if (rep.command != "scan") {
      out += " size=" + std::to_string(r.size) + " bound=" + std::to_string(r.bound);
    }
    out += " " + r.status;
    for (const auto& [k, c] : r.histogram) out += " " + k + "=" + std::to_string(c);
    out += "\n";
  }
  for (const auto& f : rep.findings) {
    out += "FINDING " + f.kind + " " + std::to_string(f.index) + " " + f.graph6 + ": " + f.detail + "\n";
  }
  out += "# " + rep.command;
  for (const auto& [k, c] : rep.counters) out += " " + k + "=" + std::to_string(c);
  out += "\n";
  for (const auto& [k, c] : rep.histogram) out += "# " + k + " " + std::to_string(c) + "\n";
  return out;
}

}  // namespace gallai
