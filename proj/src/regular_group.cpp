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

#include "polymedial/regular_group.hpp"

#include <algorithm>
#include <random>

#include "polymedial/error.hpp"
#include "polymedial/kernels.hpp"

namespace polymedial::perm {

RegularGroup::RegularGroup(std::vector<Permutation> generators) : gens_(std::move(generators)) {
  if (gens_.empty()) throw DomainError("a regular group needs at least one generator");
  order_ = gens_.front().degree();
  for (const auto& g : gens_) {
    if (g.degree() != order_) throw DomainError("generator degree mismatch");
    inv_.push_back(g.inverse());
  }
  parent_.assign(order_, UINT32_MAX);
  via_.assign(order_, UINT32_MAX);
  parent_[0] = 0;
  bfs_.push_back(0);
  for (std::size_t head = 0; head < bfs_.size(); ++head) {
    Point p = bfs_[head];
    for (std::uint32_t i = 0; i < gens_.size(); ++i) {
      Point q = gens_[i][p];
      if (parent_[q] == UINT32_MAX) {
        parent_[q] = p;
        via_[q] = i;
        bfs_.push_back(q);
      }
    }
  }
  if (bfs_.size() != order_) throw InconsistencyError("generators are not transitive");

  // A transitive group is regular iff its centralizer is transitive; test the
  // candidate left translations on every point for small groups and on a
  // fixed pseudo-random sample otherwise.
  std::vector<Point> probes;
  if (order_ <= 2048) {
    for (Point x = 0; x < order_; ++x) probes.push_back(x);
  } else {
    std::mt19937_64 rng(order_);
    for (int i = 0; i < 16; ++i) probes.push_back(static_cast<Point>(rng() % order_));
  }
  for (Point x : probes) {
    std::vector<char> hit(order_, 0);
    std::vector<Point> img(order_);
    img[0] = x;
    for (std::size_t k = 1; k < bfs_.size(); ++k) {
      Point p = bfs_[k];
      img[p] = gens_[via_[p]][img[parent_[p]]];
    }
    for (Point y : img) {
      if (hit[y]) throw InconsistencyError("generators do not act regularly");
      hit[y] = 1;
    }
    Permutation l(std::move(img));
    for (const auto& g : gens_) {
      for (Point p = 0; p < order_; ++p) {
        if (l[g[p]] != g[l[p]]) throw InconsistencyError("generators do not act regularly");
      }
    }
  }
}

std::vector<int> RegularGroup::word(Point x) const {
  std::vector<int> w;
  while (x != 0) {
    w.push_back(static_cast<int>(via_[x]));
    x = parent_[x];
  }
  std::reverse(w.begin(), w.end());
  return w;
}

Point RegularGroup::evaluate(std::span<const int> word, Point start) const {
  Point p = start;
  for (int c : word) {
    if (c >= 0) {
      p = gens_.at(c)[p];
    } else {
      p = inv_.at(-1 - c)[p];
    }
  }
  return p;
}

Point RegularGroup::multiply(Point x, Point y) const {
  auto w = word(y);
  return evaluate(w, x);
}

Point RegularGroup::inverse(Point x) const {
  // Undo the word of x starting from the identity.
  Point p = 0;
  while (x != 0) {
    p = inv_[via_[x]][p];
    x = parent_[x];
  }
  return p;
}

std::uint64_t RegularGroup::element_order(Point x) const {
  auto w = word(x);
  std::uint64_t k = 1;
  for (Point p = x; p != 0; ++k) p = evaluate(w, p);
  return k;
}

Permutation RegularGroup::right_map(Point x) const {
  auto w = word(x);
  std::vector<Point> img(order_);
  for (Point p = 0; p < order_; ++p) img[p] = evaluate(w, p);
  return Permutation(std::move(img));
}

Permutation RegularGroup::left_map(Point x) const {
  std::vector<Point> img(order_);
  img[0] = x;
  for (std::size_t k = 1; k < bfs_.size(); ++k) {
    Point p = bfs_[k];
    img[p] = gens_[via_[p]][img[parent_[p]]];
  }
  return Permutation(std::move(img));
}

std::vector<Point> RegularGroup::subgroup_elements(std::span<const Point> generators) const {
  std::vector<std::vector<int>> words;
  for (Point g : generators) words.push_back(word(g));
  std::vector<char> seen(order_, 0);
  std::vector<Point> out{0};
  seen[0] = 1;
  for (std::size_t head = 0; head < out.size(); ++head) {
    for (const auto& w : words) {
      Point q = evaluate(w, out[head]);
      if (!seen[q]) {
        seen[q] = 1;
        out.push_back(q);
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::optional<std::vector<Point>> RegularGroup::extend_homomorphism(
    std::span<const Point> images, bool bijective) const {
  if (images.size() != gens_.size()) throw DomainError("one image per generator required");
  std::vector<Permutation> right;
  for (Point y : images) {
    if (y >= order_) throw DomainError("image out of range");
    right.push_back(right_map(y));
  }
  std::vector<Point> phi(order_);
  phi[0] = 0;
  for (std::size_t k = 1; k < bfs_.size(); ++k) {
    Point p = bfs_[k];
    phi[p] = right[via_[p]][phi[parent_[p]]];
  }
  if (!kernels::cayley_consistent(gens_, right, phi)) return std::nullopt;
  if (bijective) {
    std::vector<char> hit(order_, 0);
    for (Point y : phi) {
      if (hit[y]) return std::nullopt;
      hit[y] = 1;
    }
  }
  return phi;
}

}  // namespace polymedial::perm
