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


// Shared test fixtures: small cubic graphs with known automorphism groups and
// groups given by presentations.

#ifndef POLYMEDIAL_TESTS_FIXTURES_HPP_
#define POLYMEDIAL_TESTS_FIXTURES_HPP_

#include <algorithm>
#include <memory>
#include <numeric>
#include <random>
#include <vector>

#include "polymedial/cubic_graph.hpp"
#include "polymedial/error.hpp"
#include "polymedial/fpgroup.hpp"
#include "polymedial/regular_group.hpp"

namespace polymedial::testing {

using graph::BipartiteCubicGraph;
using graph::Edge;
using graph::Graph;
using perm::Point;

inline BipartiteCubicGraph make_bipartite(std::size_t n, const std::vector<Edge>& edges) {
  return BipartiteCubicGraph::from_graph(Graph::from_edges(n, edges));
}

// K_{3,3}: 0..2 against 3..5.
inline BipartiteCubicGraph k33() {
  std::vector<Edge> e;
  for (Point i = 0; i < 3; ++i)
    for (Point j = 3; j < 6; ++j) e.emplace_back(i, j);
  return make_bipartite(6, e);
}

// The 3-cube on bit strings of length 3.
inline BipartiteCubicGraph cube() {
  std::vector<Edge> e;
  for (Point v = 0; v < 8; ++v)
    for (Point b = 1; b < 8; b <<= 1)
      if (v < (v ^ b)) e.emplace_back(v, v ^ b);
  return make_bipartite(8, e);
}

// Heawood graph: points and lines {i, i+1, i+3} of the Fano plane.
inline BipartiteCubicGraph heawood() {
  std::vector<Edge> e;
  for (Point line = 0; line < 7; ++line)
    for (Point d : {0u, 1u, 3u}) e.emplace_back((line + d) % 7, 7 + line);
  return make_bipartite(14, e);
}

// Tutte 8-cage: duads of {0..5} against synthemes (perfect matchings).
inline BipartiteCubicGraph tutte_cage() {
  std::vector<std::pair<int, int>> duads;
  for (int a = 0; a < 6; ++a)
    for (int b = a + 1; b < 6; ++b) duads.emplace_back(a, b);
  auto duad_index = [&](int a, int b) {
    if (a > b) std::swap(a, b);
    return static_cast<Point>(std::find(duads.begin(), duads.end(), std::pair{a, b}) -
                              duads.begin());
  };
  std::vector<Edge> e;
  Point syntheme = 15;
  for (int b = 1; b < 6; ++b) {
    std::vector<int> rest;
    for (int x = 1; x < 6; ++x)
      if (x != b) rest.push_back(x);
    for (int c = 1; c < 4; ++c) {
      std::vector<int> last;
      for (int j = 1; j < 4; ++j)
        if (j != c) last.push_back(rest[j]);
      e.emplace_back(duad_index(0, b), syntheme);
      e.emplace_back(duad_index(rest[0], rest[c]), syntheme);
      e.emplace_back(duad_index(last[0], last[1]), syntheme);
      ++syntheme;
    }
  }
  return make_bipartite(30, e);
}

// Hexagonal prism: cubic and bipartite, vertex-transitive, not edge-transitive.
inline BipartiteCubicGraph hexagonal_prism() {
  std::vector<Edge> e;
  for (Point i = 0; i < 6; ++i) {
    e.emplace_back(i, (i + 1) % 6);
    e.emplace_back(6 + i, 6 + (i + 1) % 6);
    e.emplace_back(i, 6 + i);
  }
  for (auto& [u, v] : e)
    if (u > v) std::swap(u, v);
  return make_bipartite(12, e);
}

// Honeycomb on the torus: the triangles of the triangular lattice modulo the
// sublattice spanned by (3,3) and (0,9), adjacent when they share an edge.
inline BipartiteCubicGraph hex_torus_54() {
  auto cell = [](int a, int b) {
    const int x = ((a % 3) + 3) % 3;
    const int y = (((b - a) % 9) + 9) % 9;
    return static_cast<Point>(9 * x + y);
  };
  std::vector<Edge> e;
  for (int a = 0; a < 3; ++a) {
    for (int b = 0; b < 9; ++b) {
      const Point up = cell(a, b);
      for (Point down : {cell(a, b), cell(a - 1, b), cell(a, b - 1)}) e.emplace_back(up, 27 + down);
    }
  }
  return make_bipartite(54, e);
}

inline perm::Permutation random_permutation(std::size_t n, std::mt19937_64& rng) {
  std::vector<Point> images(n);
  std::iota(images.begin(), images.end(), 0);
  std::shuffle(images.begin(), images.end(), rng);
  return perm::Permutation(std::move(images));
}

// Regular representation of a finite presentation.
inline std::shared_ptr<const perm::RegularGroup> regular_group(const fp::Presentation& p,
                                                               std::size_t max_cosets = 2'000'000) {
  auto table = fp::coset_enumeration(p, {}, {max_cosets, {}});
  if (!table.complete()) throw StateError("enumeration overflowed: " + table.reason());
  return std::make_shared<const perm::RegularGroup>(table.permutations());
}

}  // namespace polymedial::testing

#endif  // POLYMEDIAL_TESTS_FIXTURES_HPP_
