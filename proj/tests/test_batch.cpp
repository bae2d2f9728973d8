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

#include <gtest/gtest.h>

#include "gallai/batch.hpp"
#include "gallai/enumerate.hpp"
#include "support.hpp"

namespace gallai {
namespace {

std::vector<Graph> up_to(std::size_t max_n) {
  std::vector<Graph> out;
  for (std::size_t n = 2; n <= max_n; ++n) {
    for (auto& g : enumerate_connected(n, 5)) out.push_back(std::move(g));
  }
  return out;
}

TEST(Check, SmallGraphsHaveNoFindings) {
  auto graphs = up_to(6);
  auto rep = run_check(graphs);
  EXPECT_EQ(rep.records.size(), graphs.size());
  EXPECT_TRUE(rep.findings.empty());
  EXPECT_EQ(rep.counters["verified"], graphs.size());
  EXPECT_FALSE(rep.budget_exhausted);
  for (const auto& r : rep.records) {
    EXPECT_EQ(r.status, "ok");
    EXPECT_LE(r.size, r.bound);
  }
  EXPECT_GT(rep.counters["irreducible"], 0u);
  EXPECT_GT(rep.histogram["c1"], 0u);
}

TEST(Check, SkipsGraphsOutsideTheClass) {
  std::vector<Graph> graphs{Graph::from_edges(4, {{0, 1}, {2, 3}}), testing::complete(7), Graph(2)};
  auto rep = run_check(graphs);
  EXPECT_TRUE(rep.findings.empty());
  EXPECT_EQ(rep.counters["skipped"], 3u);
  EXPECT_EQ(rep.records[0].status, "skipped: not connected");
  EXPECT_EQ(rep.records[1].status, "skipped: max degree exceeds 5");
  EXPECT_EQ(rep.records[2].status, "skipped: no edges");
}

TEST(Check, BudgetIsReported) {
  std::vector<Graph> graphs{testing::petersen()};
  auto rep = run_check(graphs, SolveOptions{1});
  EXPECT_TRUE(rep.budget_exhausted);
  ASSERT_EQ(rep.findings.size(), 1u);
  EXPECT_EQ(rep.findings[0].kind, "budget");
}

TEST(FloorSearch, OnlyOddSemiCliquesFail) {
  auto graphs = up_to(6);
  auto rep = run_floor_search(graphs);
  EXPECT_TRUE(rep.findings.empty());
  std::size_t semi = 0;
  for (const auto& r : rep.records) {
    if (r.status == "odd-semi-clique") {
      ++semi;
      EXPECT_TRUE(is_odd_semi_clique(parse_graph6(r.graph6)));
    } else {
      EXPECT_EQ(r.status, "ok");
    }
  }
  EXPECT_EQ(semi, 3u);  // K3, K5 - e, K5
}

TEST(FloorSearch, FailingSolverProducesFinding) {
  std::vector<Graph> graphs{testing::cycle(4), testing::complete(3)};
  auto rep = run_floor_search(graphs, [](const Graph&, std::size_t) -> std::optional<PathDecomposition> {
    return std::nullopt;
  });
  ASSERT_EQ(rep.findings.size(), 1u);
  EXPECT_EQ(rep.findings[0].kind, "floor");
  EXPECT_EQ(rep.findings[0].graph6, write_graph6(testing::cycle(4)));
  EXPECT_EQ(rep.records[1].status, "odd-semi-clique");
  EXPECT_NE(to_text(rep).find("FINDING floor 0"), std::string::npos);
}

TEST(FloorSearch, InvalidAnswerIsNotAccepted) {
  std::vector<Graph> graphs{testing::cycle(4)};
  auto rep = run_floor_search(graphs, [](const Graph&, std::size_t) -> std::optional<PathDecomposition> {
    return PathDecomposition{{Path{0, 1}, Path{2, 3}}};
  });
  EXPECT_EQ(rep.findings.size(), 1u);
}

TEST(Scan, ClassifiesFirstStep) {
  std::vector<Graph> graphs{testing::cycle(4), testing::petersen(), testing::complete(5)};
  auto rep = run_scan(graphs);
  EXPECT_EQ(rep.records[0].status, "reducible");
  EXPECT_EQ(rep.records[0].histogram.at("c1"), 1u);
  EXPECT_EQ(rep.records[1].status, "irreducible");
  // K5 contains a configuration even though the solver hard-codes it.
  EXPECT_EQ(rep.records[2].status, "reducible");
  EXPECT_EQ(rep.counters["reducible"], 2u);
  EXPECT_EQ(rep.counters["irreducible"], 1u);
}

TEST(Report, JsonFields) {
  std::vector<Graph> graphs{testing::cycle(4)};
  auto j = to_json(run_check(graphs));
  EXPECT_EQ(j["command"], "check");
  EXPECT_EQ(j["counters"]["graphs"], 1);
  EXPECT_EQ(j["budget_exhausted"], false);
  ASSERT_EQ(j["records"].size(), 1u);
  const auto& r = j["records"][0];
  for (const char* key : {"index", "graph6", "n", "m", "max_degree", "size", "bound", "histogram",
                          "verified", "irreducible", "status", "millis"}) {
    EXPECT_TRUE(r.contains(key)) << key;
  }
  EXPECT_EQ(r["graph6"], "Cl");
  EXPECT_EQ(r["size"], 2);
  EXPECT_TRUE(j["findings"].empty());
}

TEST(Report, TextEndsWithCounters) {
  std::vector<Graph> graphs{testing::cycle(4)};
  auto text = to_text(run_check(graphs));
  EXPECT_NE(text.find("0 Cl n=4 m=4 maxdeg=2 size=2 bound=2 ok c1=1"), std::string::npos) << text;
  EXPECT_NE(text.find("# check findings=0 graphs=1 verified=1"), std::string::npos) << text;
}

}  // namespace
}  // namespace gallai
