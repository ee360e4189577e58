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

#ifndef POLYMEDIAL_PERM_GROUP_HPP_
#define POLYMEDIAL_PERM_GROUP_HPP_

#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <span>
#include <vector>

#include "polymedial/permutation.hpp"

namespace polymedial::perm {

// Base and strong generating set with one Schreier tree per level.
class StabChain {
 public:
  struct Level {
    Point base = 0;
    std::vector<Point> orbit;          // BFS order, orbit[0] == base
    std::vector<std::int32_t> via;     // strong generator reaching each point; -1 if absent
    std::vector<std::uint32_t> gens;   // strong generators fixing all earlier base points
  };

  // Builds a chain whose base starts with `prefix`. With `known_order` the
  // result is exact (InconsistencyError if the order differs). Without it the
  // chain is exact up to degree 4096 and Monte Carlo (error below 2^-48)
  // beyond.
  static StabChain build(std::size_t degree, std::span<const Permutation> generators,
                         std::span<const Point> prefix = {},
                         std::optional<std::uint64_t> known_order = std::nullopt);

  std::size_t degree() const { return degree_; }
  std::size_t depth() const { return levels_.size(); }
  const Level& level(std::size_t i) const { return levels_[i]; }
  std::vector<Point> base() const;

  std::uint64_t order() const { return order_from(0); }
  // Order of the pointwise stabilizer of the first `level` base points.
  std::uint64_t order_from(std::size_t level) const;

  bool contains(const Permutation& g) const;
  // Transversal element mapping the base of `level` to `point`.
  Permutation transversal(std::size_t level, Point point) const;
  // Element mapping base[i] to targets[i] for every i < targets.size().
  std::optional<Permutation> map_prefix(std::span<const Point> targets) const;
  std::size_t strong_count() const { return strong_.size(); }
  // Strong generators fixing the first `level` base points.
  std::vector<Permutation> stabilizer_generators(std::size_t level) const;

 private:
  struct SiftResult {
    Permutation residue;
    std::size_t level;
  };
  SiftResult sift(Permutation g, std::size_t from_level = 0) const;
  bool sift_and_add(const Permutation& g, std::size_t from_level = 0,
                    std::size_t* added_level = nullptr);
  void add_level(Point base);
  void rebuild_orbit(std::size_t level);
  void complete_deterministically();
  const Permutation& strong(std::uint32_t id) const { return strong_[id]; }

  std::size_t degree_ = 0;
  std::vector<Level> levels_;
  std::vector<Permutation> strong_;
  std::vector<Permutation> strong_inv_;
  std::vector<std::size_t> strong_level_;  // deepest level each generator belongs to
};

// Permutation group on {0, ..., degree-1}. The stabilizer chain is built once,
// lazily; afterwards the object is safe for concurrent queries.
class PermutationGroup {
 public:
  PermutationGroup(std::size_t degree, std::vector<Permutation> generators,
                   std::optional<std::uint64_t> known_order = std::nullopt);

  std::size_t degree() const { return degree_; }
  const std::vector<Permutation>& generators() const { return generators_; }
  std::optional<std::uint64_t> known_order() const { return known_order_; }

  std::uint64_t order() const;
  bool contains(const Permutation& g) const;
  const StabChain& chain() const;
  StabChain chain_with_base(std::span<const Point> prefix) const;

  std::vector<Point> orbit(Point seed) const;
  // Componentwise action on tuples.
  std::vector<std::vector<Point>> orbit(const std::vector<Point>& seed) const;
  // Orbits on points, each sorted, listed by smallest element.
  std::vector<std::vector<Point>> orbits() const;
  // Orbit index of each point (orbits numbered by smallest element).
  std::vector<std::uint32_t> orbit_labels() const;
  std::size_t orbits_count(const std::vector<std::vector<Point>>& seeds) const;

  PermutationGroup pointwise_stabilizer(std::span<const Point> points) const;
  std::uint64_t pointwise_stabilizer_order(std::span<const Point> points) const;
  // Some g with from[i]^g == to[i], if one exists.
  std::optional<Permutation> find_mapping(std::span<const Point> from,
                                          std::span<const Point> to) const;

 private:
  std::size_t degree_;
  std::vector<Permutation> generators_;
  std::optional<std::uint64_t> known_order_;
  struct Cache {
    std::once_flag once;
    std::unique_ptr<const StabChain> chain;
  };
  std::shared_ptr<Cache> cache_;  // shared by copies; the group is immutable
};

// Elements of <generators> by breadth-first closure; for cross-checking the
// stabilizer chain on small groups. Returns nullopt past `limit` elements.
std::optional<std::vector<Permutation>> naive_closure(std::size_t degree,
                                                      std::span<const Permutation> generators,
                                                      std::size_t limit);

}  // namespace polymedial::perm

#endif  // POLYMEDIAL_PERM_GROUP_HPP_
