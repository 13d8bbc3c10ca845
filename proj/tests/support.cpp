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

#include "support.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace wlhom::testing {

Graph cycle(std::size_t n) {
  std::vector<Edge> edges;
  for (Vertex i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
  return Graph(n, edges);
}

Graph path(std::size_t n) {
  std::vector<Edge> edges;
  for (Vertex i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  return Graph(n, edges);
}

Graph star(std::size_t k) {
  std::vector<Edge> edges;
  for (Vertex i = 1; i <= k; ++i) edges.emplace_back(0, i);
  return Graph(k + 1, edges);
}

Graph complete(std::size_t n) {
  std::vector<Edge> edges;
  for (Vertex i = 0; i < n; ++i) {
    for (Vertex j = i + 1; j < n; ++j) edges.emplace_back(i, j);
  }
  return Graph(n, edges);
}

Graph edgeless(std::size_t n) { return Graph(n, {}); }

Graph tree_a() {
  const std::vector<Edge> edges{{0, 1}, {1, 2}, {2, 3}, {3, 4}, {1, 5}};
  return Graph(6, edges);
}

Graph tree_b() {
  const std::vector<Edge> edges{{0, 1}, {1, 2}, {2, 3}, {3, 4}, {2, 5}};
  return Graph(6, edges);
}

Graph random_graph(std::mt19937_64& rng, std::size_t n, double p) {
  std::bernoulli_distribution coin(p);
  std::vector<Edge> edges;
  for (Vertex i = 0; i < n; ++i) {
    for (Vertex j = i + 1; j < n; ++j) {
      if (coin(rng)) edges.emplace_back(i, j);
    }
  }
  return Graph(n, edges);
}

std::vector<Vertex> random_permutation(std::mt19937_64& rng, std::size_t n) {
  std::vector<Vertex> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  return perm;
}

std::vector<Graph> all_graphs_up_to_iso(std::size_t n) {
  std::vector<Edge> slots;
  for (Vertex i = 0; i < n; ++i) {
    for (Vertex j = i + 1; j < n; ++j) slots.emplace_back(i, j);
  }
  std::vector<std::vector<Vertex>> perms;
  std::vector<Vertex> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    perms.push_back(perm);
  } while (std::next_permutation(perm.begin(), perm.end()));

  // slot index of (u, v)
  std::vector<std::size_t> index(n * n, 0);
  for (std::size_t s = 0; s < slots.size(); ++s) {
    index[slots[s].first * n + slots[s].second] = s;
    index[slots[s].second * n + slots[s].first] = s;
  }

  std::set<std::uint64_t> seen;
  std::vector<Graph> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << slots.size()); ++mask) {
    std::uint64_t canonical = mask;
    for (const auto& p : perms) {
      std::uint64_t image = 0;
      for (std::size_t s = 0; s < slots.size(); ++s) {
        if (mask >> s & 1) image |= std::uint64_t{1} << index[p[slots[s].first] * n + p[slots[s].second]];
      }
      canonical = std::min(canonical, image);
    }
    if (!seen.insert(canonical).second) continue;
    std::vector<Edge> edges;
    for (std::size_t s = 0; s < slots.size(); ++s) {
      if (canonical >> s & 1) edges.push_back(slots[s]);
    }
    out.emplace_back(n, edges);
  }
  return out;
}

std::vector<ExplicitTree> all_recursive_trees(std::size_t max_nodes) {
  std::vector<ExplicitTree> out;
  for (std::size_t n = 1; n <= max_nodes; ++n) {
    std::vector<std::size_t> parent(n, 0);
    while (true) {
      ExplicitTree t;
      t.node_count = n;
      for (Vertex i = 1; i < n; ++i) t.edges.emplace_back(parent[i], i);
      out.push_back(std::move(t));
      // odometer over parent[i] in [0, i)
      std::size_t i = 1;
      while (i < n && ++parent[i] == i) parent[i++] = 0;
      if (i >= n) break;
    }
  }
  return out;
}

ExplicitTree explicit_star(std::size_t n) {
  ExplicitTree t;
  t.node_count = n + 1;
  for (Vertex i = 1; i <= n; ++i) t.edges.emplace_back(0, i);
  return t;
}

BigCount brute_rooted(const ExplicitTree& tree, const Graph& g, Vertex root_image) {
  const std::size_t nodes = tree.node_count;
  const std::size_t verts = g.vertex_count();
  std::vector<Vertex> image(nodes, 0);
  image[tree.root] = root_image;
  std::uint64_t hits = 0;
  while (true) {
    bool ok = true;
    for (auto [a, b] : tree.edges) {
      const auto nb = g.neighbors(image[a]);
      if (!std::binary_search(nb.begin(), nb.end(), image[b])) {
        ok = false;
        break;
      }
    }
    if (ok) ++hits;
    std::size_t i = 0;
    for (; i < nodes; ++i) {
      if (i == tree.root) continue;
      if (++image[i] < verts) break;
      image[i] = 0;
    }
    if (i == nodes) break;
  }
  return BigCount(static_cast<unsigned long>(hits));
}

Graph path_with_leaf(std::size_t length, Vertex attach_at) {
  std::vector<Edge> edges;
  for (Vertex i = 0; i + 1 < length; ++i) edges.emplace_back(i, i + 1);
  edges.emplace_back(attach_at, length);
  return Graph(length + 1, edges);
}

namespace {

std::vector<BigCount> rooted_counts(const std::vector<std::vector<Vertex>>& children, Vertex node, const Graph& g) {
  std::vector<BigCount> out(g.vertex_count(), BigCount(1));
  for (Vertex c : children[node]) {
    const auto below = rooted_counts(children, c, g);
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
      BigCount sum = 0;
      for (Vertex w : g.neighbors(v)) sum += below[w];
      out[v] *= sum;
    }
  }
  return out;
}

}  // namespace

BigCount explicit_dp_count(const ExplicitTree& tree, const Graph& g) {
  std::vector<std::vector<Vertex>> children(tree.node_count);
  for (auto [parent, child] : tree.edges) children[parent].push_back(child);
  BigCount total = 0;
  for (const auto& c : rooted_counts(children, tree.root, g)) total += c;
  return total;
}

NodeId random_tree(TreeArena& arena, std::mt19937_64& rng, std::size_t max_depth) {
  if (max_depth == 0) return arena.leaf();
  std::uniform_int_distribution<int> kids(0, 3);
  std::uniform_int_distribution<std::uint64_t> mult(1, 3);
  std::uniform_int_distribution<std::size_t> depth(0, max_depth - 1);
  std::vector<ChildRef> children;
  const int count = kids(rng);
  for (int i = 0; i < count; ++i) children.push_back({random_tree(arena, rng, depth(rng)), mult(rng)});
  return arena.attach(std::move(children));
}

}  // namespace wlhom::testing
