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


// Automorphism groups and isomorphisms of small sparse graphs by
// individualization and refinement.

#ifndef POLYMEDIAL_AUTOMORPHISM_HPP_
#define POLYMEDIAL_AUTOMORPHISM_HPP_

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "polymedial/cubic_graph.hpp"
#include "polymedial/perm_group.hpp"

namespace polymedial::graph {

struct SearchLimits {
  std::size_t max_vertices = 10'000;
  std::optional<double> time_budget_seconds;
};

struct AutomorphismResult {
  bool decided = false;
  std::string reason;  // set when undecided
  std::vector<Permutation> generators;
  std::uint64_t order = 0;
  // Base of the search and the orbit length of each base point under the
  // stabilizer of the earlier ones; order is their product.
  std::vector<Point> base;
  std::vector<std::uint64_t> orbit_lengths;
  std::uint64_t nodes = 0;

  // Throws StateError when undecided.
  perm::PermutationGroup group(std::size_t degree) const;
};

// Automorphisms preserving `colours` when given (one entry per vertex).
AutomorphismResult automorphism_group(const Graph& g, std::span<const std::uint32_t> colours = {},
                                      const SearchLimits& limits = {});
// Full automorphism group; automorphisms may exchange the two types.
AutomorphismResult automorphism_group(const BipartiteCubicGraph& g,
                                      const SearchLimits& limits = {});

struct IsomorphismResult {
  bool decided = false;
  std::string reason;
  bool isomorphic = false;
  std::optional<Permutation> mapping;  // vertex v of g goes to mapping[v] in h
};

IsomorphismResult find_isomorphism(const Graph& g, const Graph& h,
                                   const SearchLimits& limits = {});

}  // namespace polymedial::graph

#endif  // POLYMEDIAL_AUTOMORPHISM_HPP_
