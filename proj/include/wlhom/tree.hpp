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
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "wlhom/big_count.hpp"
#include "wlhom/errors.hpp"
#include "wlhom/graph.hpp"

namespace wlhom {

using NodeId = std::size_t;

/// `multiplicity` identical copies of the subtree rooted at `child`.
struct ChildRef {
  NodeId child = 0;
  std::uint64_t multiplicity = 0;

  friend bool operator==(const ChildRef&, const ChildRef&) = default;
};

/// Append-only store of rooted trees in succinct form.
///
/// A node lists its children with multiplicities, and children may be shared
/// between parents, so the store is a DAG whose unfolding is the actual tree.
/// Child ids are always smaller than the parent id. The unfolded size of the
/// trees built by the synthesizer is exponential in their depth; nothing here
/// ever unfolds a tree except expand_tree.
class TreeArena {
 public:
  NodeId leaf() { return attach({}); }

  /// Throws InvalidArgument on an unknown child id or a zero multiplicity.
  NodeId attach(std::vector<ChildRef> children);

  std::size_t size() const noexcept { return children_.size(); }
  bool contains(NodeId t) const noexcept { return t < children_.size(); }

  std::span<const ChildRef> children(NodeId t) const;
  /// Leaf depth is 0.
  std::size_t depth(NodeId t) const;
  /// Node count of the unfolded tree.
  const BigCount& explicit_size(NodeId t) const;

 private:
  void check(NodeId t) const;

  std::vector<std::vector<ChildRef>> children_;
  std::vector<std::size_t> depth_;
  std::vector<BigCount> size_;
};

/// Unfolded rooted tree. Node ids are in BFS order from the root, which is 0;
/// each edge is (parent, child).
struct ExplicitTree {
  std::size_t node_count = 0;
  std::vector<Edge> edges;
  Vertex root = 0;
};

class TreeTooLarge : public BudgetExceeded {
 public:
  TreeTooLarge(const BigCount& size, std::size_t max_nodes);
  const BigCount& size() const noexcept { return size_; }

 private:
  BigCount size_;
};

/// Unfolds the tree rooted at t. Throws TreeTooLarge, carrying the exact
/// unfolded size, when it would exceed max_nodes.
ExplicitTree expand_tree(const TreeArena& arena, NodeId t, std::size_t max_nodes);

/// Builds a succinct copy of an explicit tree (every child with multiplicity 1).
/// `tree.root` may be any node; the tree is re-rooted there. Throws
/// InvalidArgument when the edge list is not a tree.
NodeId import_explicit(TreeArena& arena, const ExplicitTree& tree);

/// Explicit tree as a graph (parent-child edges, root not marked).
Graph to_graph(const ExplicitTree& tree);

/// Graph file text followed by a `# root <id>` comment.
std::string serialize_explicit(const ExplicitTree& tree);

struct ParsedTree {
  TreeArena arena;
  NodeId root = 0;
};

/// Tree text format:
///
///     T <node_count>
///     node <id> : <child>*<mult> ...
///     root <id>
///
/// Only nodes reachable from `root` are written, renumbered densely in
/// increasing order of their arena id.
std::string serialize_tree(const TreeArena& arena, NodeId root);

/// Copies the nodes reachable from `root` into a fresh arena, numbered the
/// same way serialize_tree numbers them.
ParsedTree extract_tree(const TreeArena& arena, NodeId root);

/// Inverse of serialize_tree. Errors carry line numbers.
ParsedTree parse_tree(std::string_view text);

ParsedTree load_tree(const std::string& path);

}  // namespace wlhom
