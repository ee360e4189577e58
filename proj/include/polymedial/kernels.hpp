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

#ifndef POLYMEDIAL_KERNELS_HPP_
#define POLYMEDIAL_KERNELS_HPP_

#include <span>
#include <vector>

#include "polymedial/permutation.hpp"

// Exhaustive verification loops. Each has a serial reference and an OpenMP
// variant; the plain entry points dispatch on the configured thread count.
namespace polymedial::kernels {

using perm::Permutation;
using perm::Point;
using Word = std::vector<int>;  // letters as in fp::Word

// Threads used by the dispatching entry points; 1 selects the serial code.
void set_threads(int n);
int threads();

// phi(p^g_i) == phi(p)^right_i for every point p and generator i.
bool cayley_consistent_serial(std::span<const Permutation> gens,
                              std::span<const Permutation> right, std::span<const Point> phi);
bool cayley_consistent_parallel(std::span<const Permutation> gens,
                                std::span<const Permutation> right, std::span<const Point> phi);
bool cayley_consistent(std::span<const Permutation> gens, std::span<const Permutation> right,
                       std::span<const Point> phi);

// Every relator fixes every point under the given generator permutations.
bool relators_trivial_serial(std::span<const Permutation> gens, std::span<const Word> relators);
bool relators_trivial_parallel(std::span<const Permutation> gens,
                               std::span<const Word> relators);
bool relators_trivial(std::span<const Permutation> gens, std::span<const Word> relators);

// g maps the edge set of a cubic graph (neighbors[3v..3v+2]) onto itself.
bool preserves_edges_serial(std::span<const Point> neighbors, const Permutation& g);
bool preserves_edges_parallel(std::span<const Point> neighbors, const Permutation& g);
bool preserves_edges(std::span<const Point> neighbors, const Permutation& g);

// Number of t-arcs (v0, ..., vt) with v_{i+1} != v_{i-1} starting in the
// vertices flagged by `start`, counted by explicit walks.
std::uint64_t count_t_arcs_serial(std::span<const Point> neighbors, std::span<const char> start,
                                  int t);
std::uint64_t count_t_arcs_parallel(std::span<const Point> neighbors,
                                    std::span<const char> start, int t);
std::uint64_t count_t_arcs(std::span<const Point> neighbors, std::span<const char> start, int t);

}  // namespace polymedial::kernels

#endif  // POLYMEDIAL_KERNELS_HPP_
