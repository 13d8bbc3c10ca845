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

#include "wlhom/wl.hpp"

#include <algorithm>
#include <string>

#include "wlhom/errors.hpp"

namespace wlhom {

namespace {

void check_sorted(std::span<const LabelEntry> label) {
  for (std::size_t i = 0; i < label.size(); ++i) {
    if (label[i].multiplicity == 0) throw InvalidArgument("label entry with zero multiplicity");
    if (i > 0 && label[i - 1].rank <= label[i].rank) {
      throw InvalidArgument("label entries are not strictly descending by rank");
    }
  }
}

struct LabelLess {
  bool operator()(const LabelDef& a, const LabelDef& b) const { return compare_labels(a, b) < 0; }
};

LabelDef neighbor_multiset(const Graph& g, Vertex v, const std::vector<Rank>& previous) {
  std::vector<Rank> ranks;
  ranks.reserve(g.degree(v));
  for (Vertex w : g.neighbors(v)) ranks.push_back(previous[w]);
  std::sort(ranks.begin(), ranks.end(), std::greater<>());
  LabelDef def;
  for (Rank r : ranks) {
    if (!def.empty() && def.back().rank == r) {
      ++def.back().multiplicity;
    } else {
      def.push_back({r, 1});
    }
  }
  return def;
}

LabelLevel next_level(const std::array<const Graph*, 2>& graphs, const LabelLevel& previous) {
  std::array<std::vector<LabelDef>, 2> per_vertex;
  std::map<LabelDef, Rank, LabelLess> interned;
  for (std::size_t side = 0; side < 2; ++side) {
    const Graph& g = *graphs[side];
    per_vertex[side].reserve(g.vertex_count());
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
      per_vertex[side].push_back(neighbor_multiset(g, v, previous.vertex_rank[side]));
      interned.emplace(per_vertex[side].back(), 0);
    }
  }

  LabelLevel level;
  level.defs.reserve(interned.size());
  for (auto& [def, rank] : interned) {
    rank = static_cast<Rank>(level.defs.size());
    level.defs.push_back(def);
  }
  for (std::size_t side = 0; side < 2; ++side) {
    level.vertex_rank[side].reserve(per_vertex[side].size());
    for (const auto& def : per_vertex[side]) level.vertex_rank[side].push_back(interned.at(def));
  }
  return level;
}

// Returns true iff every class of `next` lies inside one class of `previous`.
bool refines(const LabelLevel& next, const LabelLevel& previous) {
  std::vector<std::optional<Rank>> image(next.label_count());
  for (std::size_t side = 0; side < 2; ++side) {
    for (std::size_t v = 0; v < next.vertex_rank[side].size(); ++v) {
      auto& slot = image[next.vertex_rank[side][v]];
      Rank old = previous.vertex_rank[side][v];
      if (slot && *slot != old) return false;
      slot = old;
    }
  }
  return true;
}

// Level 0 keeps its single def even when both graphs are empty.
std::size_t class_count(const LabelLevel& level) {
  if (level.vertex_rank[0].empty() && level.vertex_rank[1].empty()) return 0;
  return level.label_count();
}

}  // namespace

std::strong_ordering compare_labels(std::span<const LabelEntry> lhs, std::span<const LabelEntry> rhs) {
  check_sorted(lhs);
  check_sorted(rhs);
  const std::size_t common = std::min(lhs.size(), rhs.size());
  for (std::size_t i = 0; i < common; ++i) {
    if (lhs[i].rank != rhs[i].rank) return lhs[i].rank <=> rhs[i].rank;
    if (lhs[i].multiplicity != rhs[i].multiplicity) return lhs[i].multiplicity <=> rhs[i].multiplicity;
  }
  return lhs.size() <=> rhs.size();
}

LabelTable::LabelTable(std::vector<LabelLevel> levels, std::optional<std::size_t> stabilization_level)
    : levels_(std::move(levels)), stabilization_(stabilization_level) {
  if (levels_.empty()) throw InvalidArgument("label table needs at least level 0");
}

const LabelLevel& LabelTable::level(std::size_t k) const {
  if (k >= levels_.size()) {
    throw InvalidArgument("level " + std::to_string(k) + " not recorded (max " +
                          std::to_string(max_level()) + ")");
  }
  return levels_[k];
}

Rank LabelTable::rank(std::size_t k, Side side, Vertex v) const {
  const auto& ranks = level(k).vertex_rank[index(side)];
  if (v >= ranks.size()) throw InvalidArgument("vertex " + std::to_string(v) + " out of range");
  return ranks[v];
}

const LabelDef& LabelTable::def(std::size_t k, Rank r) const {
  const auto& defs = level(k).defs;
  if (r >= defs.size()) throw InvalidArgument("rank " + std::to_string(r) + " out of range");
  return defs[r];
}

Histogram LabelTable::histogram(std::size_t k, Side side) const {
  Histogram out;
  for (Rank r : level(k).vertex_rank[index(side)]) ++out[r];
  return out;
}

std::optional<Rank> LabelTable::isolated_rank(std::size_t k) const {
  const auto& lvl = level(k);
  // The empty multiset is the minimum, so if present it is rank 0.
  if (k == 0 || lvl.defs.empty() || !lvl.defs.front().empty()) return std::nullopt;
  return Rank{0};
}

LabelTable joint_refine(const Graph& g1, const Graph& g2, std::size_t max_level, bool stop_at_stable) {
  const std::array<const Graph*, 2> graphs{&g1, &g2};
  std::vector<LabelLevel> levels;

  LabelLevel zero;
  zero.defs.emplace_back();
  zero.vertex_rank[0].assign(g1.vertex_count(), 0);
  zero.vertex_rank[1].assign(g2.vertex_count(), 0);
  levels.push_back(std::move(zero));

  std::optional<std::size_t> stabilization;
  for (std::size_t k = 1; k <= max_level; ++k) {
    LabelLevel next = next_level(graphs, levels.back());
    if (!refines(next, levels.back())) {
      throw InvariantViolation("level " + std::to_string(k) + " labels do not refine level " +
                               std::to_string(k - 1));
    }
    const bool stable = next.label_count() == class_count(levels.back());
    levels.push_back(std::move(next));
    if (stable && !stabilization) {
      stabilization = k - 1;
      if (stop_at_stable) break;
    }
  }
  return LabelTable(std::move(levels), stabilization);
}

WlComparison distinguishing_level(const Graph& g1, const Graph& g2, std::optional<std::size_t> max_level) {
  const std::size_t limit = max_level.value_or(std::max<std::size_t>(g1.vertex_count() + g2.vertex_count(), 1));
  LabelTable table = joint_refine(g1, g2, limit);

  WlComparison result;
  result.stabilized = table.stabilization_level().has_value();
  result.stabilization_level = table.stabilization_level().value_or(0);
  for (std::size_t k = 0; k < table.level_count(); ++k) {
    std::array<Histogram, 2> pair{table.histogram(k, Side::first), table.histogram(k, Side::second)};
    if (!result.distinguishing_level && pair[0] != pair[1]) result.distinguishing_level = k;
    result.histograms.push_back(std::move(pair));
  }
  return result;
}

}  // namespace wlhom
