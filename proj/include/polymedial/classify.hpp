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


// Arc-transitivity classification of bipartite cubic graphs: symmetric
// graphs of type t+ or t-, semisymmetric graphs of type (t1, t2).

#ifndef POLYMEDIAL_CLASSIFY_HPP_
#define POLYMEDIAL_CLASSIFY_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "polymedial/automorphism.hpp"
#include "polymedial/cubic_graph.hpp"
#include "polymedial/perm_group.hpp"

namespace polymedial::graph {

inline constexpr int kMaxSymmetricT = 5;
inline constexpr int kMaxSemisymmetricT = 7;

enum class Sign { kPlus, kMinus };
enum class Verdict { kSymmetric, kSemisymmetric, kNotEdgeTransitive, kUndecided };

struct Classification {
  Verdict verdict = Verdict::kUndecided;
  std::string reason;  // set when undecided

  // Symmetric: t-arc transitive of the given sign, with stabilizer orders
  // |B_0|, ..., |B_t| along the base arc.
  int t = 0;
  Sign sign = Sign::kPlus;
  std::vector<Point> base_arc;
  std::vector<std::uint64_t> stabilizer_orders;

  // Semisymmetric: t1 on arcs starting at type 1, t2 at type 2. Unordered
  // when the types carry no meaning beyond the bipartition.
  int t1 = 0;
  int t2 = 0;
  bool ordered = true;

  std::uint64_t aut_order = 0;
  std::size_t vertex_orbits = 0;
  std::size_t edge_orbits = 0;

  // "3+", "ss-(4,3)", "ss-{3,4}" (unordered, ascending), "not edge-transitive"
  // or "undecided".
  std::string to_string() const;
};

// Number of t-arcs starting at vertices of type j (j = 0 counts all).
std::uint64_t t_arc_count(const BipartiteCubicGraph& g, int type, int t);

// Lexicographically first t-arc starting at the smallest vertex of type j
// (j = 0: at vertex 0).
std::vector<Point> first_arc(const BipartiteCubicGraph& g, int type, int t);

// Whether `aut` is transitive on t-arcs starting at type j (j = 0: all).
bool arc_transitive(const BipartiteCubicGraph& g, const perm::PermutationGroup& aut, int type,
                    int t);

std::size_t edge_orbit_count(const BipartiteCubicGraph& g, const perm::PermutationGroup& aut);

// Sign of a sharply t-arc-transitive group on its base arc. Throws
// InconsistencyError unless exactly one of the two conjugation identities
// holds.
Sign symmetric_sign(const BipartiteCubicGraph& g, const perm::PermutationGroup& aut,
                    const std::vector<Point>& arc);

// |B_0|, ..., |B_t| where B_j fixes arc[0..t-j] pointwise.
std::vector<std::uint64_t> stabilizer_sequence(const perm::PermutationGroup& aut,
                                               const std::vector<Point>& arc);

// Throws InconsistencyError when a symmetric verdict violates the
// arc-stabilizer orders 1, 2, ..., 2^(t-1), 3 * 2^(t-1).
Classification classify(const BipartiteCubicGraph& g, const AutomorphismResult& aut,
                        bool ordered_types = true);
Classification classify(const BipartiteCubicGraph& g, bool ordered_types = true,
                        const SearchLimits& limits = {});

// Incidence graph of the 27 columns (type 1) and 27 cubelets (type 2) of the
// 3x3x3 cube.
BipartiteCubicGraph gray_oracle();

}  // namespace polymedial::graph

#endif  // POLYMEDIAL_CLASSIFY_HPP_
