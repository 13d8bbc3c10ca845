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
#include <map>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "wlhom/certificate.hpp"
#include "wlhom/graph.hpp"
#include "wlhom/hom.hpp"
#include "wlhom/tree.hpp"
#include "wlhom/wl.hpp"

namespace wlhom {

inline constexpr std::uint64_t kDefaultLiftCeiling = 10'000;

/// Star with n leaves: the level-1 member of every family. Throws on n == 0.
NodeId base_family(TreeArena& arena, std::uint64_t n);

/// Glues n copies of h's only subtree at a new root. `h` must have exactly one
/// child edge of multiplicity 1. Rooted counts of the result are the n-th
/// powers of h's.
NodeId power(TreeArena& arena, NodeId h, std::uint64_t n);

/// The tree families used to separate labels, one per level.
///
/// Level 1 maps n to a star with n leaves. Each call to extend(m) adds a level
/// whose member n glues n copies of H_m at the root, where H_m is a root with
/// the single child member_{level-1}(m). Members are cached.
class TreeFamily {
 public:
  explicit TreeFamily(TreeArena& arena) : arena_(&arena) {}

  std::size_t level() const noexcept { return lift_parameters_.size() + 1; }
  const std::vector<std::uint64_t>& lift_parameters() const noexcept { return lift_parameters_; }

  NodeId member(std::uint64_t n) { return member(level(), n); }
  NodeId member(std::size_t level, std::uint64_t n);
  /// H_m for the family at `level`: a root whose single child is member(level, m).
  NodeId chain(std::size_t level, std::uint64_t m);

  void extend(std::uint64_t m) { lift_parameters_.push_back(m); }

  TreeArena& arena() noexcept { return *arena_; }

 private:
  TreeArena* arena_;
  std::vector<std::uint64_t> lift_parameters_;
  std::map<std::pair<std::size_t, std::uint64_t>, NodeId> members_;
  std::map<std::pair<std::size_t, std::uint64_t>, NodeId> chains_;
};

/// Rooted counts of one arena into both graphs of a label table, with ranks
/// shared across the two sides.
class JointCounter {
 public:
  JointCounter(const TreeArena& arena, const Graph& g1, const Graph& g2, const LabelTable& table);

  /// Per-rank rooted count over both graphs. Throws LabelConsistencyError when
  /// two vertices of one rank disagree, within a graph or across the two.
  LabelCounts by_label(NodeId t, std::size_t level);
  BigCount total(NodeId t, Side side);

  const LabelTable& table() const noexcept { return *table_; }

 private:
  const LabelTable* table_;
  HomTable first_;
  HomTable second_;
};

/// Ranks at `level` carried by at least one non-isolated vertex of either graph, ascending.
std::vector<Rank> non_isolated_ranks(const LabelTable& table, std::size_t level);

struct LiftResult {
  std::uint64_t m = 0;
  NodeId chain = 0;  // H_m
  LabelCounts counts;
};

/// Least m >= 1 such that rank -> rooted count of H_m is strictly increasing
/// over `ranks` (level family.level() + 1, sorted ascending, no isolated rank).
///
/// Also checks the chain identity h(H_m, L) = sum over l in L of h(T_m, l)
/// for every candidate. Throws InvariantViolation after `ceiling` candidates.
LiftResult lift(TreeFamily& family, JointCounter& counter, std::span<const Rank> ranks,
                std::uint64_t ceiling = kDefaultLiftCeiling);

struct SynthesisOptions {
  /// Refinement depth; defaults to |V1| + |V2|.
  std::optional<std::size_t> max_level;
  std::uint64_t lift_ceiling = kDefaultLiftCeiling;
};

/// Builds a tree whose homomorphism counts into g1 and g2 differ, or reports
/// that the pair is WL-equivalent.
///
/// Graphs whose non-isolated vertices carry the same labels at every level but
/// which differ in size are separated by the one-node tree. Otherwise, with k
/// the least level where non-isolated label histograms differ, the families
/// are lifted to level k and the result is the member with the least n whose
/// counts differ. Every identity the construction relies on is re-checked and
/// a failure throws InvariantViolation.
Certificate synthesize(const Graph& g1, const Graph& g2, const SynthesisOptions& options = {});

/// Recomputes the certificate's claim from scratch, sharing nothing with the
/// synthesis run. Tree and single-node certificates pass iff fresh counts match
/// the recorded ones and differ, and the rest of the transcript (level, m and n
/// values, histograms) is consistent with the tree and the graphs. Equivalent
/// ones pass iff the WL test does not distinguish the graphs.
bool verify(const Certificate& cert, const Graph& g1, const Graph& g2);

}  // namespace wlhom
