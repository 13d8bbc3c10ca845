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

#include "wlhom/graph.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>

#include "wlhom/errors.hpp"

namespace wlhom {

Graph::Graph(std::size_t vertex_count, std::span<const Edge> edges) : adjacency_(vertex_count) {
  edges_.reserve(edges.size());
  for (auto [u, v] : edges) {
    if (u >= vertex_count || v >= vertex_count) {
      throw InvalidArgument("edge " + std::to_string(u) + "-" + std::to_string(v) +
                            " has an endpoint outside [0, " + std::to_string(vertex_count) + ")");
    }
    if (u == v) throw InvalidArgument("self-loop at vertex " + std::to_string(u));
    edges_.emplace_back(std::min(u, v), std::max(u, v));
  }
  std::sort(edges_.begin(), edges_.end());
  auto dup = std::adjacent_find(edges_.begin(), edges_.end());
  if (dup != edges_.end()) {
    throw InvalidArgument("duplicate edge " + std::to_string(dup->first) + "-" +
                          std::to_string(dup->second));
  }
  for (auto [u, v] : edges_) {
    adjacency_[u].push_back(v);
    adjacency_[v].push_back(u);
  }
  for (auto& list : adjacency_) std::sort(list.begin(), list.end());
}

std::span<const Vertex> Graph::neighbors(Vertex u) const {
  if (u >= vertex_count()) throw InvalidArgument("vertex " + std::to_string(u) + " out of range");
  return adjacency_[u];
}

std::size_t Graph::degree(Vertex u) const { return neighbors(u).size(); }

bool Graph::adjacent(Vertex u, Vertex v) const {
  auto list = neighbors(u);
  return std::binary_search(list.begin(), list.end(), v);
}

namespace {

// Splits one line into whitespace-separated natural numbers.
std::vector<std::size_t> read_numbers(std::string_view line, std::size_t line_no) {
  std::vector<std::size_t> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    if (i == line.size()) break;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
    std::string_view token = line.substr(i, j - i);
    std::size_t value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc() || ptr != token.data() + token.size()) {
      throw ParseError(line_no, "expected a non-negative integer, got '" + std::string(token) + "'");
    }
    out.push_back(value);
    i = j;
  }
  return out;
}

}  // namespace

Graph parse_graph(std::string_view text) {
  std::size_t line_no = 0;
  bool have_header = false;
  std::size_t n = 0;
  std::size_t m = 0;
  std::vector<Edge> edges;
  std::vector<std::size_t> edge_lines;

  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;

    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string_view::npos || line[first] == '#') {
      if (end == text.size()) break;
      continue;
    }
    auto numbers = read_numbers(line, line_no);
    if (!have_header) {
      if (numbers.size() != 2) throw ParseError(line_no, "malformed header: expected 'N M'");
      n = numbers[0];
      m = numbers[1];
      have_header = true;
    } else {
      if (numbers.size() != 2) throw ParseError(line_no, "malformed edge: expected 'u v'");
      if (edges.size() == m) {
        throw ParseError(line_no, "more edge lines than the " + std::to_string(m) + " declared");
      }
      auto [u, v] = std::pair{numbers[0], numbers[1]};
      if (u >= n || v >= n) {
        throw ParseError(line_no, "vertex index out of range [0, " + std::to_string(n) + ")");
      }
      if (u == v) throw ParseError(line_no, "self-loop at vertex " + std::to_string(u));
      edges.emplace_back(u, v);
      edge_lines.push_back(line_no);
    }
    if (end == text.size()) break;
  }
  if (!have_header) throw ParseError(line_no, "malformed header: missing 'N M' line");
  if (edges.size() != m) {
    throw ParseError(line_no, "expected " + std::to_string(m) + " edges, found " +
                                  std::to_string(edges.size()));
  }

  // Duplicate check here rather than in Graph so the report names the line.
  std::vector<std::pair<Edge, std::size_t>> keyed;
  keyed.reserve(edges.size());
  for (std::size_t i = 0; i < edges.size(); ++i) {
    auto [u, v] = edges[i];
    keyed.push_back({{std::min(u, v), std::max(u, v)}, edge_lines[i]});
  }
  std::sort(keyed.begin(), keyed.end());
  for (std::size_t i = 1; i < keyed.size(); ++i) {
    if (keyed[i].first == keyed[i - 1].first) {
      throw ParseError(keyed[i].second, "duplicate edge " + std::to_string(keyed[i].first.first) +
                                            "-" + std::to_string(keyed[i].first.second));
    }
  }
  return Graph(n, edges);
}

std::string serialize_graph(const Graph& g) {
  std::ostringstream out;
  out << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
  return out.str();
}

Graph load_graph(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError(0, "cannot open graph file '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  try {
    return parse_graph(buffer.str());
  } catch (const ParseError& e) {
    throw ParseError(e.line(), path + ": " + e.detail());
  }
}

std::vector<Vertex> isolated_vertices(const Graph& g) {
  std::vector<Vertex> out;
  for (Vertex u = 0; u < g.vertex_count(); ++u) {
    if (g.degree(u) == 0) out.push_back(u);
  }
  return out;
}

Graph permute(const Graph& g, std::span<const Vertex> perm) {
  const std::size_t n = g.vertex_count();
  if (perm.size() != n) throw InvalidArgument("permutation has the wrong length");
  std::vector<bool> seen(n, false);
  for (Vertex p : perm) {
    if (p >= n || seen[p]) throw InvalidArgument("permutation is not a bijection");
    seen[p] = true;
  }
  std::vector<Edge> edges;
  edges.reserve(g.edge_count());
  for (auto [u, v] : g.edges()) edges.emplace_back(perm[u], perm[v]);
  return Graph(n, edges);
}

Graph disjoint_union(const Graph& a, const Graph& b) {
  std::vector<Edge> edges(a.edges().begin(), a.edges().end());
  const std::size_t shift = a.vertex_count();
  for (auto [u, v] : b.edges()) edges.emplace_back(u + shift, v + shift);
  return Graph(a.vertex_count() + b.vertex_count(), edges);
}

}  // namespace wlhom
