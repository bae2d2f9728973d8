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

#include <chrono>
#include <random>

#include <gtest/gtest.h>

#include "gallai/enumerate.hpp"
#include "gallai/solver.hpp"
#include "support.hpp"

namespace gallai {
namespace {

using testing::complete;
using testing::cycle;
using testing::path_graph;

TEST(Solve, SmallExamples) {
  EXPECT_EQ(solve(path_graph(4)).decomposition.size(), 1u);
  EXPECT_EQ(solve(cycle(4)).decomposition.size(), 2u);
  EXPECT_EQ(solve(complete(3)).decomposition.size(), 2u);
  EXPECT_EQ(solve(complete(5)).decomposition.size(), 3u);
  EXPECT_EQ(solve(Graph::from_edges(2, {{0, 1}})).decomposition.size(), 1u);
}

TEST(Solve, PetersenNeedsFivePaths) {
  auto g = testing::petersen();
  const auto start = std::chrono::steady_clock::now();
  auto r = solve(g);
  const auto elapsed = std::chrono::steady_clock::now() - start;
  EXPECT_TRUE(r.verified);
  EXPECT_EQ(r.decomposition.size(), 5u);
  EXPECT_LT(elapsed, std::chrono::seconds(1));
  EXPECT_TRUE(r.trace.steps.empty());
  ASSERT_EQ(r.trace.base_cases.size(), 1u);
  EXPECT_EQ(r.trace.base_cases[0].kind, BaseKind::kExactSearch);
}

TEST(Solve, Preconditions) {
  EXPECT_THROW(solve(Graph(3)), PreconditionError);
  EXPECT_THROW(solve(Graph::from_edges(4, {{0, 1}, {2, 3}})), PreconditionError);
  EXPECT_THROW(solve(complete(7)), PreconditionError);
}

TEST(Solve, DeterministicAndTraceShrinks) {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 100; ++i) {
    auto g = testing::random_connected(rng, 8 + i % 10, 5, i % 9);
    auto a = solve(g), b = solve(g);
    ASSERT_TRUE(a.verified);
    EXPECT_EQ(a.decomposition.paths, b.decomposition.paths);
    for (const auto& s : a.trace.steps) {
      EXPECT_LE(s.order, g.order());
      if (s.depth == 0) {
        EXPECT_EQ(s.order, g.order());
      }
    }
    for (const auto& bc : a.trace.base_cases) EXPECT_LE(bc.order, g.order());
  }
}

TEST(Solve, RandomGraphsAreGood) {
  std::mt19937_64 rng(8);
  for (int i = 0; i < 300; ++i) {
    auto g = testing::random_connected(rng, 10 + i % 11, 5, i % 13);
    auto r = solve(g);
    ASSERT_TRUE(r.verified) << write_graph6(g);
    EXPECT_LE(r.decomposition.size(), half_ceil(g.order()));
    EXPECT_GE(r.decomposition.size(), lower_bound(g));
  }
}

TEST(SolveBase, Examples) {
  auto claw = Graph::from_edges(4, {{0, 1}, {0, 2}, {0, 3}});
  auto d = solve_base(claw, 2);
  ASSERT_TRUE(d);
  EXPECT_TRUE(verify(claw, *d).valid);
  EXPECT_LE(d->size(), 2u);
  EXPECT_FALSE(solve_base(complete(5), 2));
  EXPECT_FALSE(solve_base(cycle(4), 1));
  EXPECT_TRUE(solve_base(cycle(4), 2));
}

TEST(SolveBase, BudgetExhaustion) {
  EXPECT_THROW(solve_base(testing::petersen(), 5, 1), BudgetExhausted);
  EXPECT_THROW(solve(testing::petersen(), SolveOptions{1}), BudgetExhausted);
}

TEST(MinDecomposition, KnownValues) {
  EXPECT_EQ(min_decomposition(complete(3)).first, 2u);
  EXPECT_EQ(min_decomposition(complete(5)).first, 3u);
  EXPECT_EQ(min_decomposition(complete(6)).first, 3u);
  EXPECT_EQ(min_decomposition(testing::petersen()).first, 5u);
}

// Against the subset-DP oracle on every connected graph up to 6 vertices.
TEST(MinDecomposition, MatchesOracleUpToSix) {
  for (std::size_t n = 2; n <= 6; ++n) {
    for (const auto& g : enumerate_connected(n, n)) {
      const auto want = testing::naive_min_paths(g);
      auto [k, d] = min_decomposition(g);
      ASSERT_EQ(k, want) << write_graph6(g);
      EXPECT_TRUE(verify(g, d).valid);
      EXPECT_LE(d.size(), k);
      EXPECT_GE(k, lower_bound(g));
      if (k > 1) {
        EXPECT_FALSE(solve_base(g, k - 1));
      }
      if (max_degree(g) <= 5) {
        const auto s = solve(g).decomposition.size();
        EXPECT_GE(s, k);
        EXPECT_LE(s, half_ceil(n));
      }
    }
  }
}

TEST(CheckStructure, IrreducibleGraphs) {
  EXPECT_TRUE(check_structure(testing::petersen()));
  EXPECT_THROW(check_structure(complete(5)), PreconditionError);
  EXPECT_THROW(check_structure(cycle(4)), PreconditionError);
  EXPECT_THROW(check_structure(Graph::from_edges(4, {{0, 1}, {2, 3}})), PreconditionError);
}

TEST(Trace, DescribeMentionsSubCases) {
  auto r = solve(cycle(6));
  ASSERT_FALSE(r.trace.steps.empty());
  EXPECT_NE(r.trace.describe().find("C1"), std::string::npos);
}

}  // namespace
}  // namespace gallai
