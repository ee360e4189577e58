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

#include "polymedial/cubic_graph.hpp"

#include <algorithm>

#include "polymedial/error.hpp"

namespace polymedial::graph {

Graph Graph::from_edges(std::size_t n, std::span<const Edge> edges) {
  std::vector<std::vector<Point>> adj(n);
  for (auto [u, v] : edges) {
    if (u >= n || v >= n) throw DomainError("edge endpoint out of range");
    if (u == v) throw DomainError("loop at vertex " + std::to_string(u));
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  Graph g;
  g.offsets_.push_back(0);
  for (std::size_t v = 0; v < n; ++v) {
    auto& a = adj[v];
    std::sort(a.begin(), a.end());
    if (std::adjacent_find(a.begin(), a.end()) != a.end()) {
      throw DomainError("repeated edge at vertex " + std::to_string(v));
    }
    g.targets_.insert(g.targets_.end(), a.begin(), a.end());
    g.offsets_.push_back(static_cast<std::uint32_t>(g.targets_.size()));
  }
  return g;
}

bool Graph::adjacent(Point u, Point v) const {
  auto nb = neighbors(u);
  return std::binary_search(nb.begin(), nb.end(), v);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  for (Point u = 0; u < size(); ++u) {
    for (Point v : neighbors(u)) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

bool Graph::connected() const {
  if (size() == 0) return true;
  std::vector<char> seen(size(), 0);
  std::vector<Point> queue{0};
  seen[0] = 1;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    for (Point w : neighbors(queue[head])) {
      if (!seen[w]) {
        seen[w] = 1;
        queue.push_back(w);
      }
    }
  }
  return queue.size() == size();
}

std::vector<std::uint8_t> Graph::two_colouring() const {
  std::vector<std::uint8_t> colour(size(), 2);
  for (Point s = 0; s < size(); ++s) {
    if (colour[s] != 2) continue;
    colour[s] = 0;
    std::vector<Point> queue{s};
    for (std::size_t head = 0; head < queue.size(); ++head) {
      Point u = queue[head];
      for (Point w : neighbors(u)) {
        if (colour[w] == 2) {
          colour[w] = static_cast<std::uint8_t>(1 - colour[u]);
          queue.push_back(w);
        } else if (colour[w] == colour[u]) {
          return {};
        }
      }
    }
  }
  return colour;
}

Graph Graph::relabeled(const Permutation& p) const {
  if (p.degree() != size()) throw DomainError("relabeling has the wrong degree");
  std::vector<Edge> e;
  for (auto [u, v] : edges()) e.emplace_back(p[u], p[v]);
  return from_edges(size(), e);
}

BipartiteCubicGraph::BipartiteCubicGraph(Graph g, std::vector<std::uint8_t> types)
    : graph_(std::move(g)), types_(std::move(types)) {
  const std::size_t n = graph_.size();
  if (types_.size() != n) throw DomainError("one type label per vertex required");
  if (n == 0) throw DomainError("empty graph");
  for (Point v = 0; v < n; ++v) {
    if (graph_.degree(v) != 3) {
      throw DomainError("vertex " + std::to_string(v) + " has degree " +
                        std::to_string(graph_.degree(v)) + ", expected 3");
    }
    if (types_[v] != 1 && types_[v] != 2) {
      throw DomainError("vertex " + std::to_string(v) + " has type other than 1 or 2");
    }
    for (Point w : graph_.neighbors(v)) {
      if (types_[w] == types_[v]) {
        throw DomainError("edge " + std::to_string(v) + "-" + std::to_string(w) +
                          " joins two vertices of type " + std::to_string(types_[v]) +
                          " (not bipartite)");
      }
    }
  }
  if (!graph_.connected()) throw DomainError("graph is disconnected");
  if (count_of_type(1) != count_of_type(2)) throw DomainError("parts have different sizes");
  for (Point v = 0; v < n; ++v) {
    auto nb = graph_.neighbors(v);
    graph_neighbors_.insert(graph_neighbors_.end(), nb.begin(), nb.end());
  }
}

BipartiteCubicGraph BipartiteCubicGraph::from_graph(Graph g) {
  for (Point v = 0; v < g.size(); ++v) {
    if (g.degree(v) != 3) {
      throw DomainError("vertex " + std::to_string(v) + " has degree " +
                        std::to_string(g.degree(v)) + ", expected 3");
    }
  }
  if (!g.connected()) throw DomainError("graph is disconnected");
  auto colour = g.two_colouring();
  if (colour.empty()) throw DomainError("graph has an odd cycle (not bipartite)");
  for (auto& c : colour) c = static_cast<std::uint8_t>(c + 1);
  return BipartiteCubicGraph(std::move(g), std::move(colour));
}

std::size_t BipartiteCubicGraph::count_of_type(int j) const {
  return static_cast<std::size_t>(std::count(types_.begin(), types_.end(), j));
}

BipartiteCubicGraph BipartiteCubicGraph::relabeled(const Permutation& p) const {
  std::vector<std::uint8_t> t(size());
  for (Point v = 0; v < size(); ++v) t[p[v]] = types_[v];
  return BipartiteCubicGraph(graph_.relabeled(p), std::move(t));
}

BipartiteCubicGraph BipartiteCubicGraph::types_swapped() const {
  std::vector<std::uint8_t> t(types_);
  for (auto& x : t) x = static_cast<std::uint8_t>(3 - x);
  return BipartiteCubicGraph(graph_, std::move(t));
}

}  // namespace polymedial::graph
