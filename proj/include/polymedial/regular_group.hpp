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

#ifndef POLYMEDIAL_REGULAR_GROUP_HPP_
#define POLYMEDIAL_REGULAR_GROUP_HPP_

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "polymedial/permutation.hpp"

namespace polymedial::perm {

// A group given by its right regular representation. Point 0 is the identity,
// and point x names the element carrying 0 to x. Generators act by right
// multiplication: x^g = x*g.
class RegularGroup {
 public:
  // Throws InconsistencyError unless the generators act regularly.
  explicit RegularGroup(std::vector<Permutation> generators);

  std::size_t order() const { return order_; }
  std::size_t rank() const { return gens_.size(); }
  const std::vector<Permutation>& generators() const { return gens_; }
  const Permutation& generator(std::size_t i) const { return gens_[i]; }
  // Element of generator i.
  Point generator_element(std::size_t i) const { return gens_[i][0]; }

  // Generator indices spelling x from the identity; negative entries -1-i mean
  // the inverse of generator i (never produced by BFS, accepted by evaluate).
  std::vector<int> word(Point x) const;
  Point evaluate(std::span<const int> word, Point start = 0) const;

  Point multiply(Point x, Point y) const;
  Point inverse(Point x) const;
  std::uint64_t element_order(Point x) const;

  // p -> p*x and p -> x*p.
  Permutation right_map(Point x) const;
  Permutation left_map(Point x) const;

  // Elements of the subgroup generated by the given elements, sorted.
  std::vector<Point> subgroup_elements(std::span<const Point> generators) const;

  // Map phi with phi(g_i) = images[i], extended multiplicatively. Returns
  // nullopt unless it is a well-defined homomorphism. When `bijective` is set
  // a non-injective map is also rejected.
  std::optional<std::vector<Point>> extend_homomorphism(std::span<const Point> images,
                                                        bool bijective = true) const;

  // BFS spanning tree from the identity: parent point and generator used.
  std::span<const Point> tree_parent() const { return parent_; }
  std::span<const std::uint32_t> tree_generator() const { return via_; }

 private:
  std::size_t order_ = 0;
  std::vector<Permutation> gens_;
  std::vector<Permutation> inv_;
  std::vector<Point> bfs_;
  std::vector<Point> parent_;
  std::vector<std::uint32_t> via_;
};

}  // namespace polymedial::perm

#endif  // POLYMEDIAL_REGULAR_GROUP_HPP_
