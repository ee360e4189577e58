// Copyright 2026 The polymedial Authors
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

#ifndef POLYMEDIAL_CUBIC_GRAPH_HPP_
#define POLYMEDIAL_CUBIC_GRAPH_HPP_

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "polymedial/permutation.hpp"

namespace polymedial::graph {

using perm::Permutation;
using perm::Point;
using Edge = std::pair<Point, Point>;

// Simple undirected graph in compressed adjacency form; neighbor lists sorted.
class Graph {
 public:
  Graph() = default;
  // Throws DomainError on loops, repeated edges or out-of-range endpoints.
  static Graph from_edges(std::size_t n, std::span<const Edge> edges);

  std::size_t size() const { return offsets_.empty() ? 0 : offsets_.size() - 1; }
  std::size_t edge_count() const { return targets_.size() / 2; }
  std::size_t degree(Point v) const { return offsets_[v + 1] - offsets_[v]; }
  std::span<const Point> neighbors(Point v) const {
    return {targets_.data() + offsets_[v], targets_.data() + offsets_[v + 1]};
  }
  bool adjacent(Point u, Point v) const;
  // Edges (u, v) with u < v in lexicographic order.
  std::vector<Edge> edges() const;
  bool connected() const;
  // 2-colouring with vertex 0 coloured 0, or empty when an odd cycle exists.
  std::vector<std::uint8_t> two_colouring() const;
  // Graph with vertex v renamed p[v].
  Graph relabeled(const Permutation& p) const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::vector<std::uint32_t> offsets_;
  std::vector<Point> targets_;
};

// Connected, simple, trivalent and bipartite, with the parts labelled 1 and 2.
class BipartiteCubicGraph {
 public:
  BipartiteCubicGraph() = default;
  // Throws DomainError naming the violated condition.
  BipartiteCubicGraph(Graph g, std::vector<std::uint8_t> types);
  // Types from the 2-colouring (vertex 0 gets type 1).
  static BipartiteCubicGraph from_graph(Graph g);

  std::size_t size() const { return graph_.size(); }
  const Graph& graph() const { return graph_; }
  std::uint8_t type(Point v) const { return types_[v]; }
  const std::vector<std::uint8_t>& types() const { return types_; }
  std::size_t count_of_type(int j) const;
  std::span<const Point> neighbors(Point v) const { return graph_.neighbors(v); }
  // Neighbor lists concatenated, three entries per vertex.
  std::span<const Point> flat_neighbors() const { return graph_neighbors_; }
  BipartiteCubicGraph relabeled(const Permutation& p) const;
  // Same graph with types 1 and 2 exchanged.
  BipartiteCubicGraph types_swapped() const;

 private:
  Graph graph_;
  std::vector<std::uint8_t> types_;
  std::vector<Point> graph_neighbors_;
};

}  // namespace polymedial::graph

#endif  // POLYMEDIAL_CUBIC_GRAPH_HPP_
