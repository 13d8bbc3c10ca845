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

#include "wlhom/synthesizer.hpp"

#include <algorithm>
#include <string>

#include "wlhom/errors.hpp"

namespace wlhom {

NodeId base_family(TreeArena& arena, std::uint64_t n) {
  if (n == 0) throw InvalidArgument("star needs at least one leaf");
  return arena.attach({{arena.leaf(), n}});
}

NodeId power(TreeArena& arena, NodeId h, std::uint64_t n) {
  if (n == 0) throw InvalidArgument("power needs n >= 1");
  auto kids = arena.children(h);
  if (kids.size() != 1 || kids[0].multiplicity != 1) {
    throw InvalidArgument("power expects a root with exactly one child");
  }
  return arena.attach({{kids[0].child, n}});
}

NodeId TreeFamily::member(std::size_t level, std::uint64_t n) {
  if (level == 0 || level > this->level()) {
    throw InvalidArgument("family has no level " + std::to_string(level));
  }
  auto key = std::pair{level, n};
  if (auto it = members_.find(key); it != members_.end()) return it->second;
  NodeId t = level == 1 ? base_family(*arena_, n)
                        : power(*arena_, chain(level - 1, lift_parameters_[level - 2]), n);
  members_.emplace(key, t);
  return t;
}

NodeId TreeFamily::chain(std::size_t level, std::uint64_t m) {
  auto key = std::pair{level, m};
  if (auto it = chains_.find(key); it != chains_.end()) return it->second;
  NodeId h = arena_->attach({{member(level, m), 1}});
  chains_.emplace(key, h);
  return h;
}

JointCounter::JointCounter(const TreeArena& arena, const Graph& g1, const Graph& g2, const LabelTable& table)
    : table_(&table), first_(arena, g1), second_(arena, g2) {}

LabelCounts JointCounter::by_label(NodeId t, std::size_t level) {
  LabelCounts merged = hom_by_label(first_, t, *table_, Side::first, level);
  for (auto& [rank, count] : hom_by_label(second_, t, *table_, Side::second, level)) {
    auto [it, inserted] = merged.emplace(rank, count);
    if (!inserted && it->second != count) {
      throw LabelConsistencyError("level-" + std::to_string(level) + " rank " + std::to_string(rank) +
                                  " has rooted count " + to_decimal(it->second) + " in the first graph and " +
                                  to_decimal(count) + " in the second");
    }
  }
  return merged;
}

BigCount JointCounter::total(NodeId t, Side side) {
  return side == Side::first ? first_.total(t) : second_.total(t);
}

std::vector<Rank> non_isolated_ranks(const LabelTable& table, std::size_t level) {
  const auto isolated = table.isolated_rank(level);
  std::vector<Rank> out;
  for (Rank r = 0; r < table.level(level).label_count(); ++r) {
    if (r != isolated) out.push_back(r);
  }
  return out;
}

namespace {

bool strictly_increasing(const LabelCounts& counts, std::span<const Rank> ranks) {
  for (std::size_t i = 1; i < ranks.size(); ++i) {
    if (!(counts.at(ranks[i - 1]) < counts.at(ranks[i]))) return false;
  }
  return true;
}

void require(bool ok, const std::string& what) {
  if (!ok) throw InvariantViolation(what);
}

Histogram without(Histogram h, std::optional<Rank> rank) {
  if (rank) h.erase(*rank);
  return h;
}

}  // namespace

LiftResult lift(TreeFamily& family, JointCounter& counter, std::span<const Rank> ranks, std::uint64_t ceiling) {
  const std::size_t level = family.level() + 1;
  const LabelTable& table = counter.table();
  for (Rank r : ranks) {
    if (table.def(level, r).empty()) throw InvalidArgument("lift label set contains the isolated label");
  }

  for (std::uint64_t m = 1; m <= ceiling; ++m) {
    const NodeId below = family.member(m);
    const NodeId chain = family.chain(family.level(), m);
    LabelCounts counts = counter.by_label(chain, level);
    const LabelCounts below_counts = counter.by_label(below, level - 1);

    for (Rank r : ranks) {
      BigCount expected = 0;
      for (const auto& entry : table.def(level, r)) {
        expected += below_counts.at(entry.rank) * BigCount(static_cast<unsigned long>(entry.multiplicity));
      }
      require(expected == counts.at(r), "chain identity fails at level " + std::to_string(level) + " rank " +
                                            std::to_string(r) + " for m = " + std::to_string(m));
    }
    if (strictly_increasing(counts, ranks)) return {m, chain, std::move(counts)};
  }
  throw InvariantViolation("lift to level " + std::to_string(level) + " found no m within " +
                           std::to_string(ceiling) + " candidates");
}

namespace {

std::vector<HistogramRow> histogram_rows(const LabelTable& table, std::size_t level) {
  const auto first = table.histogram(level, Side::first);
  const auto second = table.histogram(level, Side::second);
  std::vector<HistogramRow> rows;
  for (Rank r = 0; r < table.level(level).label_count(); ++r) {
    auto a = first.find(r);
    auto b = second.find(r);
    rows.push_back({r, a == first.end() ? 0 : a->second, b == second.end() ? 0 : b->second});
  }
  return rows;
}

Certificate single_node(const Graph& g1, const Graph& g2) {
  Certificate cert;
  cert.mode = CertificateMode::single_node;
  cert.level = 0;
  ParsedTree tree;
  tree.root = tree.arena.leaf();
  cert.tree = std::move(tree);
  cert.count_g1 = static_cast<unsigned long>(g1.vertex_count());
  cert.count_g2 = static_cast<unsigned long>(g2.vertex_count());
  cert.histograms.push_back({0, g1.vertex_count(), g2.vertex_count()});
  return cert;
}

}  // namespace

Certificate synthesize(const Graph& g1, const Graph& g2, const SynthesisOptions& options) {
  const WlComparison wl = distinguishing_level(g1, g2, options.max_level);
  if (!wl.distinguishing_level) return Certificate{};

  const std::size_t limit =
      options.max_level.value_or(std::max<std::size_t>(g1.vertex_count() + g2.vertex_count(), 1));
  const LabelTable table = joint_refine(g1, g2, std::max<std::size_t>(limit, 1));

  std::optional<std::size_t> level;
  std::array<Histogram, 2> hist;
  for (std::size_t k = 1; k < table.level_count() && !level; ++k) {
    hist = {without(table.histogram(k, Side::first), table.isolated_rank(k)),
            without(table.histogram(k, Side::second), table.isolated_rank(k))};
    if (hist[0] != hist[1]) level = k;
  }
  if (!level) {
    require(g1.vertex_count() != g2.vertex_count(),
            "graphs are WL-distinguished but agree on every non-isolated histogram and on size");
    return single_node(g1, g2);
  }

  const std::size_t k = *level;
  TreeArena arena;
  TreeFamily family(arena);
  JointCounter counter(arena, g1, g2, table);

  // Lift the families up to level k; chain_counts[j] holds h(H_m, .) at level j.
  std::map<std::size_t, LabelCounts> chain_counts;
  while (family.level() < k) {
    const std::size_t next = family.level() + 1;
    const auto ranks = non_isolated_ranks(table, next);
    LiftResult lifted = lift(family, counter, ranks, options.lift_ceiling);
    family.extend(lifted.m);
    chain_counts.emplace(next, std::move(lifted.counts));
  }

  // Power identity at the members consumed by later lifts.
  for (std::size_t j = 2; j < k; ++j) {
    const std::uint64_t m = family.lift_parameters()[j - 1];
    const LabelCounts counts = counter.by_label(family.member(j, m), j);
    for (Rank r : non_isolated_ranks(table, j)) {
      require(counts.at(r) == pow(chain_counts.at(j).at(r), m),
              "power identity fails at level " + std::to_string(j) + " rank " + std::to_string(r));
    }
  }

  const auto ranks = non_isolated_ranks(table, k);
  Rank top = 0;
  for (Rank r : ranks) {
    auto count_in = [&](const Histogram& h) {
      auto it = h.find(r);
      return it == h.end() ? std::size_t{0} : it->second;
    };
    if (count_in(hist[0]) != count_in(hist[1])) top = r;
  }

  for (std::uint64_t n = 1; n <= ranks.size(); ++n) {
    const NodeId tree = family.member(n);
    const LabelCounts counts = counter.by_label(tree, k);

    for (Rank r : ranks) {
      const BigCount& c = counts.at(r);
      require(c > 0, "rooted count of a non-isolated label is zero at rank " + std::to_string(r));
      if (k == 1) {
        const auto degree = table.def(1, r).front().multiplicity;
        require(c == pow(BigCount(static_cast<unsigned long>(degree)), n), "star count is not degree^n");
      } else {
        require(c == pow(chain_counts.at(k).at(r), n),
                "power identity fails at level " + std::to_string(k) + " rank " + std::to_string(r));
      }
    }
    require(strictly_increasing(counts, ranks), "final family does not order level-" + std::to_string(k) + " labels");

    std::array<BigCount, 2> sums{0, 0};
    BigCount above_top = 0;
    for (std::size_t side = 0; side < 2; ++side) {
      for (const auto& [r, multiplicity] : hist[side]) {
        BigCount term = counts.at(r) * BigCount(static_cast<unsigned long>(multiplicity));
        sums[side] += term;
        if (r > top) above_top += side == 0 ? term : BigCount(-term);
      }
    }
    require(above_top == 0, "labels above the top differing rank do not cancel");
    require(sums[0] == counter.total(tree, Side::first) && sums[1] == counter.total(tree, Side::second),
            "label-wise sum disagrees with the per-vertex homomorphism count");

    if (sums[0] != sums[1]) {
      require(arena.depth(tree) == k, "emitted tree has the wrong depth");
      Certificate cert;
      cert.mode = CertificateMode::tree;
      cert.level = k;
      cert.m_per_level = family.lift_parameters();
      cert.n_final = n;
      cert.tree = extract_tree(arena, tree);
      cert.count_g1 = sums[0];
      cert.count_g2 = sums[1];
      cert.histograms = histogram_rows(table, k);
      return cert;
    }
  }
  throw InvariantViolation("no separating n within |S_k| = " + std::to_string(ranks.size()) + " candidates");
}

namespace {

// The emitted tree is a chain of single-child nodes whose multiplicities,
// read from the root, are n_final, m_k, ..., m_2, and finally the leaf.
bool transcript_matches_tree(const Certificate& cert) {
  const TreeArena& arena = cert.tree->arena;
  std::vector<std::uint64_t> expected{cert.n_final};
  expected.insert(expected.end(), cert.m_per_level.rbegin(), cert.m_per_level.rend());
  NodeId t = cert.tree->root;
  for (std::uint64_t mult : expected) {
    auto kids = arena.children(t);
    if (kids.size() != 1 || kids[0].multiplicity != mult) return false;
    t = kids[0].child;
  }
  return arena.children(t).empty();
}

}  // namespace

bool verify(const Certificate& cert, const Graph& g1, const Graph& g2) {
  if (cert.mode == CertificateMode::equivalent) return !distinguishing_level(g1, g2).distinguishing_level;
  if (!cert.tree || !cert.tree->arena.contains(cert.tree->root)) return false;

  const TreeArena& arena = cert.tree->arena;
  const NodeId root = cert.tree->root;
  if (cert.mode == CertificateMode::single_node) {
    if (arena.explicit_size(root) != 1 || cert.level != 0 || cert.n_final != 0 || !cert.m_per_level.empty()) {
      return false;
    }
    const std::vector<HistogramRow> rows{{0, g1.vertex_count(), g2.vertex_count()}};
    if (cert.histograms != rows) return false;
  } else {
    if (cert.level == 0 || arena.depth(root) != cert.level || cert.m_per_level.size() != cert.level - 1) {
      return false;
    }
    if (!transcript_matches_tree(cert)) return false;
    if (cert.histograms != histogram_rows(joint_refine(g1, g2, cert.level, false), cert.level)) return false;
  }
  const BigCount c1 = hom_count(arena, root, g1);
  const BigCount c2 = hom_count(arena, root, g2);
  return c1 == cert.count_g1 && c2 == cert.count_g2 && c1 != c2;
}

}  // namespace wlhom
