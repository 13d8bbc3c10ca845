// Copyright 2026 The wlhom Authors
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

#include "wlhom/hom.hpp"

#include <random>

#include <gtest/gtest.h>

#include "support.hpp"
#include "wlhom/errors.hpp"

namespace wlhom {
namespace {

std::vector<BigCount> counts(std::initializer_list<unsigned long> values) {
  std::vector<BigCount> out;
  for (auto v : values) out.emplace_back(v);
  return out;
}

NodeId star(TreeArena& arena, std::uint64_t n) { return arena.attach({{arena.leaf(), n}}); }

TEST(RootedHomTest, Examples) {
  TreeArena arena;
  EXPECT_EQ(rooted_hom(arena, star(arena, 2), testing::star(3)), counts({9, 1, 1, 1}));
  EXPECT_EQ(rooted_hom(arena, arena.leaf(), testing::path(5)), counts({1, 1, 1, 1, 1}));
  EXPECT_EQ(rooted_hom(arena, star(arena, 1), testing::cycle(6)), counts({2, 2, 2, 2, 2, 2}));
}

TEST(RootedHomTest, StarClosedForm) {
  std::mt19937_64 rng(1);
  TreeArena arena;
  for (int trial = 0; trial < 40; ++trial) {
    Graph g = testing::random_graph(rng, 2 + trial % 7, 0.5);
    const std::uint64_t n = 1 + trial % 9;
    auto rooted = rooted_hom(arena, star(arena, n), g);
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
      EXPECT_EQ(rooted[v], pow(BigCount(static_cast<unsigned long>(g.degree(v))), n));
    }
  }
}

TEST(HomCountTest, Examples) {
  TreeArena arena;
  const NodeId s2 = star(arena, 2);
  EXPECT_EQ(hom_count(arena, s2, testing::path(4)), 10);
  EXPECT_EQ(hom_count(arena, s2, testing::star(3)), 12);
  EXPECT_EQ(hom_count(arena, arena.leaf(), testing::cycle(7)), 7);
  EXPECT_EQ(hom_count(arena, s2, Graph{}), 0);
}

TEST(BruteForceHomTest, Examples) {
  ExplicitTree p3 = testing::explicit_star(2);
  EXPECT_EQ(brute_force_hom(p3, testing::path(4)), 10);
  EXPECT_EQ(brute_force_hom(testing::explicit_star(1), testing::cycle(6)), 12);
  EXPECT_EQ(brute_force_hom(p3, testing::edgeless(5)), 0);
  EXPECT_EQ(brute_force_hom(testing::explicit_star(0), testing::edgeless(5)), 5);
}

TEST(BruteForceHomTest, Budget) {
  EXPECT_THROW(brute_force_hom(testing::explicit_star(9), testing::cycle(10), 1000), BudgetExceeded);
  EXPECT_NO_THROW(brute_force_hom(testing::explicit_star(2), testing::cycle(10), 1000));
}

TEST(HomCountTest, AgreesWithBruteForceOnSmallTrees) {
  std::mt19937_64 rng(77);
  const auto trees = testing::all_recursive_trees(5);
  for (const auto& tree : trees) {
    TreeArena arena;
    const NodeId t = import_explicit(arena, tree);
    for (int i = 0; i < 4; ++i) {
      Graph g = testing::random_graph(rng, 1 + (i + tree.node_count) % 5, 0.5);
      EXPECT_EQ(hom_count(arena, t, g), brute_force_hom(tree, g));
    }
  }
}

TEST(HomCountTest, RootedCountsMatchRootFixedEnumeration) {
  std::mt19937_64 rng(4);
  for (const auto& tree : testing::all_recursive_trees(4)) {
    TreeArena arena;
    const NodeId t = import_explicit(arena, tree);
    Graph g = testing::random_graph(rng, 4, 0.6);
    auto rooted = rooted_hom(arena, t, g);
    for (Vertex v = 0; v < g.vertex_count(); ++v) EXPECT_EQ(rooted[v], testing::brute_rooted(tree, g, v));
  }
}

TEST(HomCountTest, IndependentOfRoot) {
  std::mt19937_64 rng(6);
  for (const auto& base : testing::all_recursive_trees(6)) {
    if (base.node_count < 3) continue;
    Graph g = testing::random_graph(rng, 5, 0.5);
    TreeArena arena;
    ExplicitTree tree = base;
    tree.root = 0;
    const BigCount reference = hom_count(arena, import_explicit(arena, tree), g);
    for (Vertex r = 1; r < tree.node_count; ++r) {
      tree.root = r;
      EXPECT_EQ(hom_count(arena, import_explicit(arena, tree), g), reference);
    }
  }
}

TEST(HomCountTest, SuccinctAndExplicitFormsAgree) {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 100; ++trial) {
    TreeArena arena;
    const NodeId t = testing::random_tree(arena, rng, 3);
    if (arena.explicit_size(t) > 40) continue;
    Graph g = testing::random_graph(rng, 2 + trial % 6, 0.5);
    TreeArena flat;
    const NodeId expanded = import_explicit(flat, expand_tree(arena, t, 40));
    EXPECT_EQ(rooted_hom(arena, t, g), rooted_hom(flat, expanded, g));
  }
}

TEST(HomCountTest, ChainAndPowerIdentities) {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 60; ++trial) {
    TreeArena arena;
    const NodeId t = testing::random_tree(arena, rng, 3);
    Graph g = testing::random_graph(rng, 2 + trial % 7, 0.45);
    const NodeId chain = arena.attach({{t, 1}});
    const std::uint64_t n = 1 + trial % 4;
    const NodeId glued = arena.attach({{t, n}});

    HomTable homs(arena, g);
    const auto below = homs.rooted(t);
    const auto& via_chain = homs.rooted(chain);
    const auto& via_power = homs.rooted(glued);
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
      BigCount sum = 0;
      for (Vertex w : g.neighbors(v)) sum += below[w];
      EXPECT_EQ(via_chain[v], sum);
      EXPECT_EQ(via_power[v], pow(via_chain[v], n));
    }
  }
}

TEST(HomTableTest, SurvivesArenaGrowth) {
  TreeArena arena;
  Graph g = testing::cycle(5);
  HomTable homs(arena, g);
  NodeId t = star(arena, 2);
  const auto& first = homs.rooted(t);
  for (int i = 0; i < 100; ++i) homs.rooted(t = arena.attach({{t, 1}}));
  EXPECT_EQ(first, counts({4, 4, 4, 4, 4}));
}

TEST(HomByLabelTest, Examples) {
  TreeArena arena;
  Graph k13 = testing::star(3);
  LabelTable t = joint_refine(k13, Graph{}, 2, false);
  const Rank deg3 = t.rank(1, Side::first, 0);
  const Rank deg1 = t.rank(1, Side::first, 1);
  EXPECT_EQ(hom_by_label(arena, star(arena, 2), k13, t, Side::first, 1), (LabelCounts{{deg3, 9}, {deg1, 1}}));

  EXPECT_EQ(hom_by_label(arena, arena.leaf(), k13, t, Side::first, 0), (LabelCounts{{0, 1}}));

  Graph c6 = testing::cycle(6);
  LabelTable tc = joint_refine(c6, Graph{}, 1, false);
  EXPECT_EQ(hom_by_label(arena, star(arena, 1), c6, tc, Side::first, 1), (LabelCounts{{0, 2}}));
}

TEST(HomByLabelTest, RejectsTreesDeeperThanLevel) {
  TreeArena arena;
  Graph g = testing::path(4);
  LabelTable t = joint_refine(g, Graph{}, 1, false);
  EXPECT_THROW(hom_by_label(arena, arena.attach({{star(arena, 1), 1}}), g, t, Side::first, 1), InvalidArgument);
}

TEST(HomByLabelTest, ReportsInconsistentLabels) {
  // Level-1 ranks of C4 (a single class) paired with P4, whose degrees differ.
  TreeArena arena;
  Graph p4 = testing::path(4);
  Graph c4 = testing::cycle(4);
  LabelTable wrong = joint_refine(c4, Graph{}, 1, false);
  EXPECT_THROW(hom_by_label(arena, star(arena, 1), p4, wrong, Side::first, 1), LabelConsistencyError);
}

TEST(HomByLabelTest, LabelsDetermineRootedCounts) {
  std::mt19937_64 rng(55);
  for (int trial = 0; trial < 150; ++trial) {
    Graph g1 = testing::random_graph(rng, 1 + trial % 8, 0.4);
    Graph g2 = testing::random_graph(rng, 1 + (trial * 3) % 8, 0.4);
    LabelTable table = joint_refine(g1, g2, 3, false);
    TreeArena arena;
    const NodeId t = testing::random_tree(arena, rng, 3);
    for (std::size_t level = arena.depth(t); level <= 3; ++level) {
      LabelCounts a = hom_by_label(arena, t, g1, table, Side::first, level);
      LabelCounts b = hom_by_label(arena, t, g2, table, Side::second, level);
      for (const auto& [rank, c] : a) {
        if (b.contains(rank)) EXPECT_EQ(b.at(rank), c);
      }
      // sum identity
      BigCount total = 0;
      for (const auto& [rank, n] : table.histogram(level, Side::first)) total += a.at(rank) * static_cast<unsigned long>(n);
      EXPECT_EQ(total, hom_count(arena, t, g1));
    }
  }
}

}  // namespace
}  // namespace wlhom
