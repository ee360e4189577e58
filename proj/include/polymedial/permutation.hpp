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

#ifndef POLYMEDIAL_PERMUTATION_HPP_
#define POLYMEDIAL_PERMUTATION_HPP_

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace polymedial::perm {

using Point = std::uint32_t;

// A bijection of {0, ..., n-1}. Products act on the right: x^(p*q) = (x^p)^q.
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::size_t degree);
  // Throws DomainError unless images is a bijection.
  explicit Permutation(std::vector<Point> images);

  static Permutation identity(std::size_t degree) { return Permutation(degree); }
  static Permutation from_cycles(std::size_t degree,
                                 const std::vector<std::vector<Point>>& cycles);
  // "(0 1 2)(3 4)"; "()" is the identity.
  static Permutation parse_cycles(std::string_view text, std::size_t degree);
  // "[1 2 0 4 3]" or "1 2 0 4 3".
  static Permutation parse_one_line(std::string_view text);

  std::size_t degree() const { return images_.size(); }
  Point operator[](Point x) const { return images_[x]; }
  std::span<const Point> images() const { return images_; }

  bool is_identity() const;
  Permutation inverse() const;
  Permutation pow(std::int64_t k) const;
  std::uint64_t order() const;
  // Non-trivial cycles, each starting at its smallest point.
  std::vector<std::vector<Point>> cycles() const;
  std::string to_cycle_string() const;
  std::string to_one_line() const;
  std::size_t hash() const;

  friend Permutation operator*(const Permutation& p, const Permutation& q);
  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<Point> images_;
};

struct PermutationHash {
  std::size_t operator()(const Permutation& p) const { return p.hash(); }
};

}  // namespace polymedial::perm

#endif  // POLYMEDIAL_PERMUTATION_HPP_
