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

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "wlhom/graph.hpp"

namespace wlhom {

/// Position of a label in the linear order of its level; 0 is the smallest.
using Rank = std::uint32_t;

/// One element of a label multiset: a previous-level rank and how often it occurs.
struct LabelEntry {
  Rank rank = 0;
  std::size_t multiplicity = 0;

  friend bool operator==(const LabelEntry&, const LabelEntry&) = default;
};

/// A level-(k+1) label: the multiset of level-k ranks of a vertex's neighbors,
/// stored with ranks strictly descending.
using LabelDef = std::vector<LabelEntry>;

/// Which of the two jointly refined graphs a query refers to.
enum class Side : std::uint8_t { first = 0, second = 1 };

/// Total order on label multisets.
///
/// The greater multiset is the one holding more copies of the largest rank
/// whose multiplicities differ. With both lists sorted by rank descending this
/// is a lexicographic scan over (rank, multiplicity): at the first differing
/// position the larger rank wins, then the larger multiplicity; a list that
/// runs out first is smaller. Throws InvalidArgument on unsorted input or a
/// zero multiplicity.
std::strong_ordering compare_labels(std::span<const LabelEntry> lhs, std::span<const LabelEntry> rhs);

/// Rank -> number of vertices carrying it. Only ranks that occur are present.
using Histogram = std::map<Rank, std::size_t>;

/// All labels of one level, interned so that label id == rank.
struct LabelLevel {
  /// defs[r] is the multiset behind rank r; level 0 has the single empty def.
  std::vector<LabelDef> defs;
  std::array<std::vector<Rank>, 2> vertex_rank;

  std::size_t label_count() const noexcept { return defs.size(); }
};

/// Neighbor-multiset WL labels computed on the disjoint union of two graphs.
///
/// Unlike classic color refinement, a vertex's next label does not include its
/// own current label; it is only the multiset of its neighbors' labels.
class LabelTable {
 public:
  LabelTable(std::vector<LabelLevel> levels, std::optional<std::size_t> stabilization_level);

  /// Number of recorded levels (levels 0 .. level_count()-1).
  std::size_t level_count() const noexcept { return levels_.size(); }
  std::size_t max_level() const noexcept { return levels_.size() - 1; }
  const LabelLevel& level(std::size_t k) const;

  Rank rank(std::size_t level, Side side, Vertex v) const;
  const LabelDef& def(std::size_t level, Rank rank) const;
  std::size_t vertex_count(Side side) const noexcept { return levels_[0].vertex_rank[index(side)].size(); }

  Histogram histogram(std::size_t level, Side side) const;

  /// Rank of the empty multiset at `level` (the label of isolated vertices),
  /// if any vertex carries it. Never set for level 0.
  std::optional<Rank> isolated_rank(std::size_t level) const;

  /// Least r whose level-(r+1) partition equals the level-r partition, when
  /// refinement reached it.
  std::optional<std::size_t> stabilization_level() const noexcept { return stabilization_; }

 private:
  static std::size_t index(Side side) noexcept { return static_cast<std::size_t>(side); }

  std::vector<LabelLevel> levels_;
  std::optional<std::size_t> stabilization_;
};

/// Refines both graphs jointly.
///
/// Records levels 0..max_level. With `stop_at_stable`, stops after the first
/// stable level, i.e. records levels up to min(max_level, stabilization + 1).
LabelTable joint_refine(const Graph& g1, const Graph& g2, std::size_t max_level,
                        bool stop_at_stable = true);

struct WlComparison {
  /// Least level whose histograms differ.
  std::optional<std::size_t> distinguishing_level;
  /// Meaningful only when `stabilized`.
  std::size_t stabilization_level = 0;
  bool stabilized = false;
  /// histograms[k][side]
  std::vector<std::array<Histogram, 2>> histograms;
};

/// Runs the WL test on a pair. Default max_level is |V1| + |V2|, which always
/// reaches stabilization, so an absent distinguishing level is conclusive.
WlComparison distinguishing_level(const Graph& g1, const Graph& g2,
                                  std::optional<std::size_t> max_level = std::nullopt);

}  // namespace wlhom
