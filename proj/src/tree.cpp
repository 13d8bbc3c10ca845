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

#include "wlhom/tree.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <deque>
#include <fstream>
#include <sstream>
#include <unordered_map>

namespace wlhom {

NodeId TreeArena::attach(std::vector<ChildRef> children) {
  std::size_t depth = 0;
  BigCount size = 1;
  for (const auto& c : children) {
    if (!contains(c.child)) throw InvalidArgument("unknown child node " + std::to_string(c.child));
    if (c.multiplicity == 0) throw InvalidArgument("child multiplicity must be at least 1");
    depth = std::max(depth, depth_[c.child] + 1);
    size += size_[c.child] * BigCount(static_cast<unsigned long>(c.multiplicity));
  }
  children_.push_back(std::move(children));
  depth_.push_back(depth);
  size_.push_back(std::move(size));
  return children_.size() - 1;
}

void TreeArena::check(NodeId t) const {
  if (!contains(t)) throw InvalidArgument("unknown tree node " + std::to_string(t));
}

std::span<const ChildRef> TreeArena::children(NodeId t) const {
  check(t);
  return children_[t];
}

std::size_t TreeArena::depth(NodeId t) const {
  check(t);
  return depth_[t];
}

const BigCount& TreeArena::explicit_size(NodeId t) const {
  check(t);
  return size_[t];
}

TreeTooLarge::TreeTooLarge(const BigCount& size, std::size_t max_nodes)
    : BudgetExceeded("tree has " + to_decimal(size) + " nodes when expanded, limit is " +
                     std::to_string(max_nodes)),
      size_(size) {}

ExplicitTree expand_tree(const TreeArena& arena, NodeId t, std::size_t max_nodes) {
  const BigCount& size = arena.explicit_size(t);
  if (size > BigCount(static_cast<unsigned long>(max_nodes))) throw TreeTooLarge(size, max_nodes);

  ExplicitTree out;
  out.node_count = size.get_ui();
  out.edges.reserve(out.node_count - 1);
  out.root = 0;
  std::deque<NodeId> queue{t};  // front() is the arena node behind explicit id `id`
  std::size_t next_id = 1;
  for (std::size_t id = 0; !queue.empty(); ++id) {
    NodeId node = queue.front();
    queue.pop_front();
    for (const auto& c : arena.children(node)) {
      for (std::uint64_t i = 0; i < c.multiplicity; ++i) {
        out.edges.emplace_back(id, next_id++);
        queue.push_back(c.child);
      }
    }
  }
  return out;
}

NodeId import_explicit(TreeArena& arena, const ExplicitTree& tree) {
  const std::size_t n = tree.node_count;
  if (n == 0 || tree.root >= n) throw InvalidArgument("explicit tree has no valid root");
  if (tree.edges.size() != n - 1) throw InvalidArgument("explicit tree must have node_count - 1 edges");
  std::vector<std::vector<Vertex>> adj(n);
  for (auto [u, v] : tree.edges) {
    if (u >= n || v >= n || u == v) throw InvalidArgument("explicit tree has a bad edge");
    adj[u].push_back(v);
    adj[v].push_back(u);
  }

  // BFS from the root, then build bottom-up in reverse BFS order.
  std::vector<Vertex> order{tree.root};
  std::vector<Vertex> parent(n, n);
  std::vector<bool> seen(n, false);
  seen[tree.root] = true;
  for (std::size_t i = 0; i < order.size(); ++i) {
    for (Vertex w : adj[order[i]]) {
      if (!seen[w]) {
        seen[w] = true;
        parent[w] = order[i];
        order.push_back(w);
      }
    }
  }
  if (order.size() != n) throw InvalidArgument("explicit tree is not connected");

  std::vector<NodeId> built(n);
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    std::vector<ChildRef> kids;
    for (Vertex w : adj[*it]) {
      if (parent[w] == *it) kids.push_back({built[w], 1});
    }
    built[*it] = arena.attach(std::move(kids));
  }
  return built[tree.root];
}

Graph to_graph(const ExplicitTree& tree) { return Graph(tree.node_count, tree.edges); }

std::string serialize_explicit(const ExplicitTree& tree) {
  return serialize_graph(to_graph(tree)) + "# root " + std::to_string(tree.root) + "\n";
}

namespace {

// Arena ids reachable from root, ascending. Children precede parents.
std::vector<NodeId> reachable_nodes(const TreeArena& arena, NodeId root) {
  if (!arena.contains(root)) throw InvalidArgument("unknown tree node " + std::to_string(root));
  std::vector<bool> reachable(root + 1, false);
  reachable[root] = true;
  for (NodeId t = root + 1; t-- > 0;) {
    if (!reachable[t]) continue;
    for (const auto& c : arena.children(t)) reachable[c.child] = true;
  }
  std::vector<NodeId> out;
  for (NodeId t = 0; t <= root; ++t) {
    if (reachable[t]) out.push_back(t);
  }
  return out;
}

}  // namespace

std::string serialize_tree(const TreeArena& arena, NodeId root) {
  const auto nodes = reachable_nodes(arena, root);
  std::unordered_map<NodeId, std::size_t> renumber;
  for (NodeId t : nodes) renumber.emplace(t, renumber.size());

  std::ostringstream out;
  out << "T " << nodes.size() << '\n';
  for (NodeId t : nodes) {
    out << "node " << renumber.at(t) << " :";
    for (const auto& c : arena.children(t)) out << ' ' << renumber.at(c.child) << '*' << c.multiplicity;
    out << '\n';
  }
  out << "root " << renumber.at(root) << '\n';
  return out.str();
}

ParsedTree extract_tree(const TreeArena& arena, NodeId root) {
  ParsedTree out;
  std::unordered_map<NodeId, NodeId> renumber;
  for (NodeId t : reachable_nodes(arena, root)) {
    std::vector<ChildRef> kids;
    for (const auto& c : arena.children(t)) kids.push_back({renumber.at(c.child), c.multiplicity});
    renumber.emplace(t, out.arena.attach(std::move(kids)));
  }
  out.root = renumber.at(root);
  return out;
}

namespace {

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    std::size_t j = i;
    while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

template <typename T>
T to_number(std::string_view token, std::size_t line_no) {
  T value{};
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || ptr != token.data() + token.size() || token.empty()) {
    throw ParseError(line_no, "expected a non-negative integer, got '" + std::string(token) + "'");
  }
  return value;
}

}  // namespace

ParsedTree parse_tree(std::string_view text) {
  std::vector<std::pair<std::size_t, std::vector<std::string_view>>> lines;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    ++line_no;
    auto tokens = split_ws(text.substr(pos, end - pos));
    if (!tokens.empty() && tokens[0].front() != '#') lines.emplace_back(line_no, std::move(tokens));
    pos = end + 1;
  }
  if (lines.empty()) throw ParseError(0, "empty tree file");

  auto& header = lines.front();
  if (header.second.size() != 2 || header.second[0] != "T") {
    throw ParseError(header.first, "malformed header: expected 'T <node_count>'");
  }
  const auto count = to_number<std::size_t>(header.second[1], header.first);
  if (count == 0) throw ParseError(header.first, "tree must have at least one node");
  if (lines.size() != count + 2) {
    throw ParseError(lines.back().first, "expected " + std::to_string(count) +
                                             " node lines followed by a root line");
  }

  ParsedTree out;
  for (std::size_t id = 0; id < count; ++id) {
    const auto& [no, tokens] = lines[id + 1];
    if (tokens.size() < 3 || tokens[0] != "node" || tokens[2] != ":") {
      throw ParseError(no, "malformed node line: expected 'node <id> : <child>*<mult> ...'");
    }
    if (to_number<std::size_t>(tokens[1], no) != id) {
      throw ParseError(no, "node ids must be 0, 1, 2, ... in order; expected " + std::to_string(id));
    }
    std::vector<ChildRef> kids;
    for (std::size_t i = 3; i < tokens.size(); ++i) {
      auto star = tokens[i].find('*');
      if (star == std::string_view::npos) throw ParseError(no, "child must be written <id>*<mult>");
      auto child = to_number<std::size_t>(tokens[i].substr(0, star), no);
      auto mult = to_number<std::uint64_t>(tokens[i].substr(star + 1), no);
      if (child >= id) throw ParseError(no, "child id must be smaller than its parent id");
      if (mult == 0) throw ParseError(no, "child multiplicity must be at least 1");
      kids.push_back({child, mult});
    }
    out.arena.attach(std::move(kids));
  }
  const auto& [no, tokens] = lines.back();
  if (tokens.size() != 2 || tokens[0] != "root") throw ParseError(no, "expected 'root <id>'");
  out.root = to_number<std::size_t>(tokens[1], no);
  if (out.root >= count) throw ParseError(no, "root id out of range");
  return out;
}

ParsedTree load_tree(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError(0, "cannot open tree file '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  try {
    return parse_tree(buffer.str());
  } catch (const ParseError& e) {
    throw ParseError(e.line(), path + ": " + e.detail());
  }
}

}  // namespace wlhom
