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

#include <string>

#include "wlhom/errors.hpp"

namespace wlhom {

const std::vector<BigCount>& HomTable::rooted(NodeId t) {
  const auto kids = arena_->children(t);
  if (memo_.size() < arena_->size()) memo_.resize(arena_->size());
  if (memo_[t]) return *memo_[t];

  const std::size_t n = graph_->vertex_count();
  std::vector<BigCount> result(n, BigCount(1));
  for (const auto& c : kids) {
    const std::vector<BigCount>& below = rooted(c.child);
    for (Vertex v = 0; v < n; ++v) {
      BigCount sum = 0;
      for (Vertex w : graph_->neighbors(v)) sum += below[w];
      result[v] *= pow(sum, c.multiplicity);
    }
  }
  memo_[t] = std::move(result);
  return *memo_[t];
}

BigCount HomTable::total(NodeId t) {
  BigCount sum = 0;
  for (const auto& c : rooted(t)) sum += c;
  return sum;
}

std::vector<BigCount> rooted_hom(const TreeArena& arena, NodeId t, const Graph& g) {
  HomTable table(arena, g);
  return table.rooted(t);
}

BigCount hom_count(const TreeArena& arena, NodeId t, const Graph& g) {
  HomTable table(arena, g);
  return table.total(t);
}

LabelCounts hom_by_label(HomTable& homs, NodeId t, const LabelTable& table, Side side, std::size_t level) {
  const std::size_t depth = homs.arena().depth(t);
  if (depth > level) {
    throw InvalidArgument("tree depth " + std::to_string(depth) + " exceeds label level " +
                          std::to_string(level));
  }
  const auto& ranks = table.level(level).vertex_rank[static_cast<std::size_t>(side)];
  if (ranks.size() != homs.graph().vertex_count()) {
    throw InvalidArgument("graph does not match the label table side");
  }

  const auto& counts = homs.rooted(t);
  LabelCounts out;
  std::map<Rank, Vertex> witness;
  for (Vertex v = 0; v < ranks.size(); ++v) {
    auto [it, inserted] = out.emplace(ranks[v], counts[v]);
    if (inserted) {
      witness.emplace(ranks[v], v);
    } else if (it->second != counts[v]) {
      throw LabelConsistencyError("vertices " + std::to_string(witness.at(ranks[v])) + " and " +
                                  std::to_string(v) + " share level-" + std::to_string(level) +
                                  " rank " + std::to_string(ranks[v]) + " but have rooted counts " +
                                  to_decimal(it->second) + " and " + to_decimal(counts[v]));
    }
  }
  return out;
}

LabelCounts hom_by_label(const TreeArena& arena, NodeId t, const Graph& g, const LabelTable& table,
                         Side side, std::size_t level) {
  HomTable homs(arena, g);
  return hom_by_label(homs, t, table, side, level);
}

BigCount brute_force_hom(const ExplicitTree& tree, const Graph& g, std::uint64_t budget) {
  const std::size_t nodes = tree.node_count;
  const std::size_t verts = g.vertex_count();

  std::uint64_t maps = 1;
  for (std::size_t i = 0; i < nodes; ++i) {
    if (verts != 0 && maps > budget / verts) {
      throw BudgetExceeded(std::to_string(verts) + "^" + std::to_string(nodes) +
                           " vertex maps exceed the brute-force budget of " + std::to_string(budget));
    }
    maps *= verts;
  }
  if (nodes == 0) return 1;
  if (verts == 0) return 0;

  std::vector<bool> adjacent(verts * verts, false);
  for (auto [u, v] : g.edges()) {
    adjacent[u * verts + v] = true;
    adjacent[v * verts + u] = true;
  }

  BigCount total = 0;
  std::uint64_t hits = 0;
  std::vector<Vertex> image(nodes, 0);
  while (true) {
    bool ok = true;
    for (auto [a, b] : tree.edges) {
      if (!adjacent[image[a] * verts + image[b]]) {
        ok = false;
        break;
      }
    }
    if (ok) ++hits;

    std::size_t i = 0;
    while (i < nodes && ++image[i] == verts) image[i++] = 0;
    if (i == nodes) break;
  }
  total = static_cast<unsigned long>(hits);
  return total;
}

}  // namespace wlhom
