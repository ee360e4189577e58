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

#include "polymedial/perm_group.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <set>
#include <unordered_set>

#include "polymedial/error.hpp"

namespace polymedial::perm {
namespace {

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
  unsigned __int128 p = static_cast<unsigned __int128>(a) * b;
  if (p > std::numeric_limits<std::uint64_t>::max()) {
    throw InconsistencyError("group order exceeds 64 bits");
  }
  return static_cast<std::uint64_t>(p);
}

constexpr std::size_t kDeterministicDegree = 4096;

void check_degree(std::size_t degree, std::span<const Permutation> gens) {
  for (const auto& g : gens) {
    if (g.degree() != degree) throw DomainError("generator degree mismatch");
  }
}

// Product replacement generator of pseudo-random group elements.
class RandomElements {
 public:
  RandomElements(std::size_t degree, std::span<const Permutation> gens, std::uint64_t seed)
      : rng_(seed), acc_(Permutation::identity(degree)) {
    for (const auto& g : gens) slots_.push_back(g);
    while (slots_.size() < 10) {
      slots_.push_back(gens.empty() ? Permutation::identity(degree)
                                    : gens[slots_.size() % gens.size()]);
    }
    for (int i = 0; i < 50; ++i) next();
  }

  Permutation next() {
    std::uniform_int_distribution<std::size_t> pick(0, slots_.size() - 1);
    std::size_t i = pick(rng_);
    std::size_t j = pick(rng_);
    while (j == i) j = pick(rng_);
    if (rng_() & 1) {
      slots_[i] = slots_[i] * slots_[j];
    } else {
      slots_[i] = slots_[j] * slots_[i];
    }
    acc_ = acc_ * slots_[i];
    return acc_;
  }

 private:
  std::mt19937_64 rng_;
  std::vector<Permutation> slots_;
  Permutation acc_;
};

}  // namespace

StabChain StabChain::build(std::size_t degree, std::span<const Permutation> generators,
                           std::span<const Point> prefix,
                           std::optional<std::uint64_t> known_order) {
  check_degree(degree, generators);
  StabChain chain;
  chain.degree_ = degree;
  for (Point b : prefix) {
    if (b >= degree) throw DomainError("base point out of range");
    chain.add_level(b);
  }
  for (const auto& g : generators) chain.sift_and_add(g);

  if (known_order && *known_order == 0) throw DomainError("group order must be positive");
  // Random Schreier-Sims. A known order stops it exactly; otherwise it stops
  // after a run of elements that all sift through, and small degrees are then
  // completed deterministically.
  RandomElements random(degree, generators, 0x5eed5eedULL ^ degree);
  const int patience = known_order ? 64 + 4 * static_cast<int>(chain.depth()) : 48;
  int idle = 0;
  while ((!known_order || chain.order() < *known_order) && idle < patience) {
    if (chain.sift_and_add(random.next())) {
      idle = 0;
    } else {
      ++idle;
    }
  }
  if (known_order) {
    if (chain.order() < *known_order) chain.complete_deterministically();
    if (chain.order() != *known_order) {
      throw InconsistencyError("group order " + std::to_string(chain.order()) +
                               " differs from the claimed " + std::to_string(*known_order));
    }
  } else if (degree <= kDeterministicDegree) {
    chain.complete_deterministically();
  }
  return chain;
}

std::vector<Point> StabChain::base() const {
  std::vector<Point> out;
  for (const auto& l : levels_) out.push_back(l.base);
  return out;
}

std::uint64_t StabChain::order_from(std::size_t level) const {
  std::uint64_t n = 1;
  for (std::size_t i = level; i < levels_.size(); ++i) {
    n = checked_mul(n, levels_[i].orbit.size());
  }
  return n;
}

void StabChain::add_level(Point base) {
  Level l;
  l.base = base;
  l.via.assign(degree_, -1);
  l.orbit.push_back(base);
  l.via[base] = std::numeric_limits<std::int32_t>::max();
  levels_.push_back(std::move(l));
}

void StabChain::rebuild_orbit(std::size_t level) {
  Level& l = levels_[level];
  l.gens.clear();
  for (std::uint32_t id = 0; id < strong_.size(); ++id) {
    if (strong_level_[id] >= level) l.gens.push_back(id);
  }
  std::fill(l.via.begin(), l.via.end(), -1);
  l.orbit.assign(1, l.base);
  l.via[l.base] = std::numeric_limits<std::int32_t>::max();
  for (std::size_t head = 0; head < l.orbit.size(); ++head) {
    Point p = l.orbit[head];
    for (std::uint32_t id : l.gens) {
      Point q = strong_[id][p];
      if (l.via[q] == -1) {
        l.via[q] = static_cast<std::int32_t>(id);
        l.orbit.push_back(q);
      }
    }
  }
}

Permutation StabChain::transversal(std::size_t level, Point point) const {
  const Level& l = levels_[level];
  if (l.via[point] == -1) throw DomainError("point outside the basic orbit");
  Permutation u = Permutation::identity(degree_);
  while (point != l.base) {
    auto id = static_cast<std::uint32_t>(l.via[point]);
    u = strong_[id] * u;
    point = strong_inv_[id][point];
  }
  return u;
}

StabChain::SiftResult StabChain::sift(Permutation g, std::size_t from_level) const {
  for (std::size_t i = from_level; i < levels_.size(); ++i) {
    Point p = g[levels_[i].base];
    if (levels_[i].via[p] == -1) return {std::move(g), i};
    // Walk back along the Schreier tree instead of forming the transversal.
    while (p != levels_[i].base) {
      auto id = static_cast<std::uint32_t>(levels_[i].via[p]);
      g = g * strong_inv_[id];
      p = strong_inv_[id][p];
    }
  }
  return {std::move(g), levels_.size()};
}

bool StabChain::sift_and_add(const Permutation& g, std::size_t from_level,
                             std::size_t* added_level) {
  auto [residue, level] = sift(g, from_level);
  if (level == levels_.size()) {
    if (residue.is_identity()) return false;
    Point moved = 0;
    while (residue[moved] == moved) ++moved;
    add_level(moved);
  }
  strong_.push_back(residue);
  strong_inv_.push_back(residue.inverse());
  strong_level_.push_back(level);
  for (std::size_t i = 0; i <= level; ++i) rebuild_orbit(i);
  if (added_level) *added_level = level;
  return true;
}

void StabChain::complete_deterministically() {
  // Schreier generators u_p s u_{p^s}^-1 at each level must sift through the
  // deeper levels. Restart from the level that received a new generator.
  std::size_t i = levels_.size();
  while (i-- > 0) {
    bool restarted = false;
    const std::size_t orbit_len = levels_[i].orbit.size();
    for (std::size_t k = 0; k < orbit_len && !restarted; ++k) {
      Point p = levels_[i].orbit[k];
      Permutation up = transversal(i, p);
      const std::vector<std::uint32_t> gens = levels_[i].gens;
      for (std::uint32_t id : gens) {
        Point q = strong_[id][p];
        Permutation sg = up * strong_[id] * transversal(i, q).inverse();
        std::size_t added = 0;
        if (sift_and_add(sg, i + 1, &added)) {
          i = std::max(i, added) + 1;
          if (i > levels_.size()) i = levels_.size();
          restarted = true;
          break;
        }
      }
    }
  }
}

bool StabChain::contains(const Permutation& g) const {
  if (g.degree() != degree_) return false;
  auto r = sift(g);
  return r.level == levels_.size() && r.residue.is_identity();
}

std::optional<Permutation> StabChain::map_prefix(std::span<const Point> targets) const {
  if (targets.size() > levels_.size()) throw DomainError("more targets than base points");
  Permutation suffix = Permutation::identity(degree_);
  Permutation suffix_inv = suffix;
  for (std::size_t i = 0; i < targets.size(); ++i) {
    if (targets[i] >= degree_) return std::nullopt;
    Point p = suffix_inv[targets[i]];
    if (levels_[i].via[p] == -1) return std::nullopt;
    Permutation u = transversal(i, p);
    suffix = u * suffix;
    suffix_inv = suffix.inverse();
  }
  return suffix;
}

std::vector<Permutation> StabChain::stabilizer_generators(std::size_t level) const {
  std::vector<Permutation> out;
  for (std::size_t id = 0; id < strong_.size(); ++id) {
    if (strong_level_[id] >= level) out.push_back(strong_[id]);
  }
  return out;
}

PermutationGroup::PermutationGroup(std::size_t degree, std::vector<Permutation> generators,
                                   std::optional<std::uint64_t> known_order)
    : degree_(degree),
      generators_(std::move(generators)),
      known_order_(known_order),
      cache_(std::make_shared<Cache>()) {
  check_degree(degree_, generators_);
}

const StabChain& PermutationGroup::chain() const {
  std::call_once(cache_->once, [this] {
    cache_->chain = std::make_unique<const StabChain>(
        StabChain::build(degree_, generators_, {}, known_order_));
  });
  return *cache_->chain;
}

std::uint64_t PermutationGroup::order() const { return chain().order(); }

bool PermutationGroup::contains(const Permutation& g) const { return chain().contains(g); }

StabChain PermutationGroup::chain_with_base(std::span<const Point> prefix) const {
  return StabChain::build(degree_, generators_, prefix, order());
}

std::vector<Point> PermutationGroup::orbit(Point seed) const {
  if (seed >= degree_) throw DomainError("point out of range");
  std::vector<char> seen(degree_, 0);
  std::vector<Point> out{seed};
  seen[seed] = 1;
  for (std::size_t head = 0; head < out.size(); ++head) {
    for (const auto& g : generators_) {
      Point q = g[out[head]];
      if (!seen[q]) {
        seen[q] = 1;
        out.push_back(q);
      }
    }
  }
  return out;
}

namespace {
struct TupleHash {
  std::size_t operator()(const std::vector<Point>& v) const {
    std::size_t h = 1469598103934665603ULL;
    for (Point x : v) h = (h ^ x) * 1099511628211ULL;
    return h;
  }
};

std::vector<Point> act_on_tuple(const Permutation& g, const std::vector<Point>& t) {
  std::vector<Point> out(t.size());
  for (std::size_t i = 0; i < t.size(); ++i) out[i] = g[t[i]];
  return out;
}
}  // namespace

std::vector<std::vector<Point>> PermutationGroup::orbit(const std::vector<Point>& seed) const {
  for (Point x : seed) {
    if (x >= degree_) throw DomainError("point out of range");
  }
  std::unordered_set<std::vector<Point>, TupleHash> seen{seed};
  std::vector<std::vector<Point>> out{seed};
  for (std::size_t head = 0; head < out.size(); ++head) {
    for (const auto& g : generators_) {
      auto t = act_on_tuple(g, out[head]);
      if (seen.insert(t).second) out.push_back(std::move(t));
    }
  }
  return out;
}

std::vector<std::uint32_t> PermutationGroup::orbit_labels() const {
  std::vector<std::uint32_t> parent(degree_);
  std::iota(parent.begin(), parent.end(), 0u);
  auto find = [&](std::uint32_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& g : generators_) {
    for (Point x = 0; x < degree_; ++x) {
      auto a = find(x), b = find(g[x]);
      if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
  }
  std::vector<std::uint32_t> label(degree_);
  std::vector<std::uint32_t> index(degree_, UINT32_MAX);
  std::uint32_t next = 0;
  for (Point x = 0; x < degree_; ++x) {
    auto r = find(x);
    if (index[r] == UINT32_MAX) index[r] = next++;
    label[x] = index[r];
  }
  return label;
}

std::vector<std::vector<Point>> PermutationGroup::orbits() const {
  auto label = orbit_labels();
  std::uint32_t n = 0;
  for (auto l : label) n = std::max(n, l + 1);
  std::vector<std::vector<Point>> out(degree_ == 0 ? 0 : n);
  for (Point x = 0; x < degree_; ++x) out[label[x]].push_back(x);
  return out;
}

std::size_t PermutationGroup::orbits_count(const std::vector<std::vector<Point>>& seeds) const {
  std::unordered_set<std::vector<Point>, TupleHash> covered;
  std::size_t count = 0;
  for (const auto& s : seeds) {
    if (covered.contains(s)) continue;
    ++count;
    for (auto& t : orbit(s)) covered.insert(std::move(t));
  }
  return count;
}

PermutationGroup PermutationGroup::pointwise_stabilizer(std::span<const Point> points) const {
  StabChain c = chain_with_base(points);
  return PermutationGroup(degree_, c.stabilizer_generators(points.size()),
                          c.order_from(points.size()));
}

std::uint64_t PermutationGroup::pointwise_stabilizer_order(std::span<const Point> points) const {
  return chain_with_base(points).order_from(points.size());
}

std::optional<Permutation> PermutationGroup::find_mapping(std::span<const Point> from,
                                                          std::span<const Point> to) const {
  if (from.size() != to.size()) throw DomainError("tuple lengths differ");
  return chain_with_base(from).map_prefix(to);
}

std::optional<std::vector<Permutation>> naive_closure(std::size_t degree,
                                                      std::span<const Permutation> generators,
                                                      std::size_t limit) {
  check_degree(degree, generators);
  std::unordered_set<Permutation, PermutationHash> seen;
  std::vector<Permutation> out{Permutation::identity(degree)};
  seen.insert(out.front());
  for (std::size_t head = 0; head < out.size(); ++head) {
    for (const auto& g : generators) {
      Permutation h = out[head] * g;
      if (seen.insert(h).second) {
        if (out.size() >= limit) return std::nullopt;
        out.push_back(std::move(h));
      }
    }
  }
  return out;
}

}  // namespace polymedial::perm
