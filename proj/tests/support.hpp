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

// Shared fixtures and oracles for the test binaries. Nothing here calls into
// the DP or the refinement code, so it can serve as an independent check.

#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

#include "wlhom/big_count.hpp"
#include "wlhom/graph.hpp"
#include "wlhom/tree.hpp"

namespace wlhom::testing {

Graph cycle(std::size_t n);
Graph path(std::size_t n);
/// K1,k with the center at vertex 0.
Graph star(std::size_t k);
Graph complete(std::size_t n);
Graph edgeless(std::size_t n);

/// P5 (v0..v4) with an extra leaf on v1 (tree_a) or on v2 (tree_b).
Graph tree_a();
Graph tree_b();

Graph random_graph(std::mt19937_64& rng, std::size_t n, double p);
std::vector<Vertex> random_permutation(std::mt19937_64& rng, std::size_t n);

/// Every graph on exactly n vertices, one per isomorphism class.
std::vector<Graph> all_graphs_up_to_iso(std::size_t n);

/// Every tree on 1..max_nodes nodes given by a parent array (node i > 0 hangs
/// off some node < i). Covers every rooted tree shape, with repeats.
std::vector<ExplicitTree> all_recursive_trees(std::size_t max_nodes);

/// Explicit star with n leaves, root 0.
ExplicitTree explicit_star(std::size_t n);

/// Count of vertex maps tree -> g that are homomorphisms and send the root to
/// `root_image`. Plain enumeration.
BigCount brute_rooted(const ExplicitTree& tree, const Graph& g, Vertex root_image);

/// Path v0..v{length-1} plus one extra leaf hanging off `attach_at`.
Graph path_with_leaf(std::size_t length, Vertex attach_at);

/// Homomorphism count of an explicit tree by plain recursion over its nodes,
/// one child at a time (no multiplicities, no memo shared across trees).
BigCount explicit_dp_count(const ExplicitTree& tree, const Graph& g);

/// Random succinct tree of depth <= max_depth with small multiplicities.
NodeId random_tree(TreeArena& arena, std::mt19937_64& rng, std::size_t max_depth);

}  // namespace wlhom::testing
