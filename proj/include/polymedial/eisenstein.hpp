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

#ifndef POLYMEDIAL_EISENSTEIN_HPP_
#define POLYMEDIAL_EISENSTEIN_HPP_

// Exact arithmetic in the Eisenstein integers Z[w], w^2 = -1 - w, and in
// their residue rings Z[w]/(m).

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace polymedial::eisenstein {

// a + b*w.
struct EisensteinInt {
  std::int64_t a = 0;
  std::int64_t b = 0;

  constexpr EisensteinInt() = default;
  constexpr EisensteinInt(std::int64_t re, std::int64_t w = 0) : a(re), b(w) {}

  static constexpr EisensteinInt omega() { return {0, 1}; }

  constexpr bool is_zero() const { return a == 0 && b == 0; }
  constexpr std::int64_t norm() const { return a * a - a * b + b * b; }
  constexpr EisensteinInt conj() const { return {a - b, -b}; }

  friend constexpr EisensteinInt operator+(EisensteinInt x, EisensteinInt y) {
    return {x.a + y.a, x.b + y.b};
  }
  friend constexpr EisensteinInt operator-(EisensteinInt x, EisensteinInt y) {
    return {x.a - y.a, x.b - y.b};
  }
  friend constexpr EisensteinInt operator-(EisensteinInt x) {
    return {-x.a, -x.b};
  }
  friend constexpr EisensteinInt operator*(EisensteinInt x, EisensteinInt y) {
    return {x.a * y.a - x.b * y.b, x.a * y.b + x.b * y.a - x.b * y.b};
  }
  friend constexpr bool operator==(EisensteinInt, EisensteinInt) = default;
  friend constexpr auto operator<=>(EisensteinInt, EisensteinInt) = default;
};

constexpr std::int64_t norm(EisensteinInt x) { return x.norm(); }

// The six units, in the order 1, -w^2 (= 1 + w), w, -1, w^2, -w
// (successive rotations by 60 degrees).
const std::array<EisensteinInt, 6>& units();
bool is_unit(EisensteinInt x);

// "a+b w" text form: "2-2w", "3", "-w", "1+3w".
std::string to_string(EisensteinInt x);
// Accepts sums, products and parentheses, e.g. "3-3w", "(1-w)(1+3w)",
// "2*(1-w)". Throws DomainError on malformed text.
EisensteinInt parse(std::string_view text);

// x / y when y divides x exactly.
std::optional<EisensteinInt> exact_div(EisensteinInt x, EisensteinInt y);
bool divides(EisensteinInt d, EisensteinInt x);
bool associated(EisensteinInt x, EisensteinInt y);

// Canonical residue of x modulo m: minimal norm, ties broken by the smallest
// (a, b). Throws DomainError when m == 0.
EisensteinInt reduce(EisensteinInt x, EisensteinInt m);

// The associate with a > 0, b >= 0 and minimal b.
EisensteinInt canonical_associate(EisensteinInt x);

struct PrimePower {
  EisensteinInt prime;
  int exponent = 0;
};

struct Factorization {
  EisensteinInt unit;
  std::vector<PrimePower> parts;  // ordered by (norm, a, b) of the prime

  EisensteinInt product() const;
};

// Throws DomainError for m == 0.
Factorization factor(EisensteinInt m);
std::string to_string(const Factorization& f);

// Z[w]/(m) with residues indexed 0..norm(m)-1 in lexicographic (a, b) order of
// their canonical representatives.
class ResidueRing {
 public:
  using Index = std::uint32_t;

  explicit ResidueRing(EisensteinInt modulus);

  EisensteinInt modulus() const { return modulus_; }
  std::size_t size() const { return elements_.size(); }
  EisensteinInt element(Index i) const { return elements_[i]; }
  const std::vector<EisensteinInt>& elements() const { return elements_; }

  Index index_of(EisensteinInt x) const;
  Index zero() const { return zero_; }
  Index one() const { return one_; }
  Index minus_one() const { return minus_one_; }

  Index add(Index x, Index y) const;
  Index sub(Index x, Index y) const;
  Index mul(Index x, Index y) const;
  Index neg(Index x) const { return neg_[x]; }
  // Inverse of a unit, nullopt otherwise.
  std::optional<Index> inverse(Index x) const;
  bool is_unit(Index x) const { return inv_[x] != kNone; }
  // Complex conjugation, defined only when (m) is conjugation invariant.
  bool conjugation_defined() const { return !conj_.empty(); }
  Index conj(Index x) const;

 private:
  static constexpr Index kNone = ~Index{0};

  EisensteinInt modulus_;
  std::vector<EisensteinInt> elements_;
  std::unordered_map<std::uint64_t, Index> lookup_;
  std::vector<Index> add_table_;
  std::vector<Index> mul_table_;
  std::vector<Index> neg_;
  std::vector<Index> inv_;
  std::vector<Index> conj_;
  Index zero_ = 0;
  Index one_ = 0;
  Index minus_one_ = 0;
};

ResidueRing residue_ring(EisensteinInt m);

// All units of the ring, ascending index order.
std::vector<ResidueRing::Index> unit_group(const ResidueRing& ring);

// Admissible group of scalars: a subgroup of the units containing -1.
class ScalarGroup {
 public:
  ScalarGroup(EisensteinInt modulus, std::vector<ResidueRing::Index> members)
      : modulus_(modulus), members_(std::move(members)) {}

  EisensteinInt modulus() const { return modulus_; }
  const std::vector<ResidueRing::Index>& members() const { return members_; }
  std::size_t order() const { return members_.size(); }
  bool contains(ResidueRing::Index x) const;
  // A equals its complex conjugate (requires ring conjugation).
  bool conjugation_invariant(const ResidueRing& ring) const;

  friend bool operator==(const ScalarGroup&, const ScalarGroup&) = default;

 private:
  EisensteinInt modulus_;
  std::vector<ResidueRing::Index> members_;  // sorted
};

// Closure of gens together with -1. Throws DomainError on a non-unit.
ScalarGroup scalar_subgroup(const ResidueRing& ring,
                            const std::vector<ResidueRing::Index>& gens);
ScalarGroup scalar_subgroup(const ResidueRing& ring,
                            const std::vector<EisensteinInt>& gens);
// Every admissible subgroup, ordered by (order, members).
std::vector<ScalarGroup> admissible_subgroups(const ResidueRing& ring);

// Number of vertices of the medial layer graph of the Eisenstein polytope:
//   N = 2 * norm(m)^3 / (12 |A|) * prod_{pi | m} (1 - norm(pi)^-2).
// Requires norm(m) = 3k with k > 1; throws DomainError otherwise and
// InconsistencyError when the value is not an integer.
std::int64_t vertex_count(EisensteinInt m, const ScalarGroup& scalars);
std::int64_t vertex_count(EisensteinInt m, std::size_t scalar_order);

}  // namespace polymedial::eisenstein

#endif  // POLYMEDIAL_EISENSTEIN_HPP_
