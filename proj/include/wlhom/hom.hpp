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

#pragma once

#include <cstddef>
#include <cstdint>
#include <deque>
#include <map>
#include <optional>
#include <vector>

#include "wlhom/big_count.hpp"
#include "wlhom/graph.hpp"
#include "wlhom/tree.hpp"
#include "wlhom/wl.hpp"

namespace wlhom {

/// Memoized rooted homomorphism counts of arena trees into one graph.
///
/// rooted(t)[v] = prod over children (c, mult) of t of
///                (sum over neighbors w of v of rooted(c)[w]) ^ mult,
/// with rooted(leaf)[v] = 1. Entries are keyed by arena node id, so one table
/// can serve every tree built in the same arena. The arena may keep growing
/// while the table is alive.
class HomTable {
 public:
  HomTable(const TreeArena& arena, const Graph& graph) : arena_(&arena), graph_(&graph) {}

  const std::vector<BigCount>& rooted(NodeId t);
  BigCount total(NodeId t);

  const Graph& graph() const noexcept { return *graph_; }
  const TreeArena& arena() const noexcept { return *arena_; }

 private:
  const TreeArena* arena_;
  const Graph* graph_;
  // deque: growing it keeps references returned by rooted() valid.
  std::deque<std::optional<std::vector<BigCount>>> memo_;
};

/// Number of homomorphisms from the tree at t into g sending the root to v, for every v.
std::vector<BigCount> rooted_hom(const TreeArena& arena, NodeId t, const Graph& g);

/// Number of homomorphisms from the (unrooted) tree at t into g.
BigCount hom_count(const TreeArena& arena, NodeId t, const Graph& g);

/// Raised when two vertices with the same label get different rooted counts.
class LabelConsistencyError : public InvariantViolation {
 public:
  using InvariantViolation::InvariantViolation;
};

using LabelCounts = std::map<Rank, BigCount>;

/// Rooted count per level-`level` rank on one side of a label table.
///
/// Every vertex of a rank must have the same count when depth(t) <= level;
/// a disagreement raises LabelConsistencyError naming both vertices. `homs`
/// must be bound to the graph of `side`.
LabelCounts hom_by_label(HomTable& homs, NodeId t, const LabelTable& table, Side side, std::size_t level);

LabelCounts hom_by_label(const TreeArena& arena, NodeId t, const Graph& g, const LabelTable& table,
                         Side side, std::size_t level);

inline constexpr std::uint64_t kDefaultBruteForceBudget = 100'000'000;

/// Counts homomorphisms by trying every map from tree nodes to graph vertices.
/// Throws BudgetExceeded if vertex_count ^ node_count > budget.
BigCount brute_force_hom(const ExplicitTree& tree, const Graph& g,
                         std::uint64_t budget = kDefaultBruteForceBudget);

}  // namespace wlhom
