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
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace wlhom {

using Vertex = std::size_t;
using Edge = std::pair<Vertex, Vertex>;

/// Simple undirected graph. Immutable once constructed.
///
/// Edges are stored normalized (first < second) and sorted; adjacency lists are
/// sorted ascending. Construction rejects out-of-range endpoints, self-loops and
/// duplicate edges with InvalidArgument.
class Graph {
 public:
  Graph() = default;
  Graph(std::size_t vertex_count, std::span<const Edge> edges);

  std::size_t vertex_count() const noexcept { return adjacency_.size(); }
  std::size_t edge_count() const noexcept { return edges_.size(); }

  const std::vector<Edge>& edges() const noexcept { return edges_; }
  std::span<const Vertex> neighbors(Vertex u) const;
  std::size_t degree(Vertex u) const;
  bool adjacent(Vertex u, Vertex v) const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::vector<Edge> edges_;
  std::vector<std::vector<Vertex>> adjacency_;
};

/// Reads the text graph format: `#` comment lines, a header `N M`, then M
/// lines `u v`. Errors carry the offending line number.
Graph parse_graph(std::string_view text);

/// Inverse of parse_graph. Edges are written in sorted order, one per line.
std::string serialize_graph(const Graph& g);

/// Reads and parses a graph file. File errors are reported as ParseError(0, ...).
Graph load_graph(const std::string& path);

std::vector<Vertex> isolated_vertices(const Graph& g);

/// Relabels vertex u as perm[u]. `perm` must be a bijection on [0, vertex_count).
Graph permute(const Graph& g, std::span<const Vertex> perm);

/// Disjoint union; vertices of `b` are shifted by a.vertex_count().
Graph disjoint_union(const Graph& a, const Graph& b);

}  // namespace wlhom
