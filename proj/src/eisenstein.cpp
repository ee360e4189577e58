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

#include "polymedial/eisenstein.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <numeric>
#include <set>
#include <sstream>

#include "polymedial/error.hpp"

namespace polymedial::eisenstein {

namespace {

std::int64_t floor_div(std::int64_t x, std::int64_t n) {
  std::int64_t q = x / n;
  if ((x % n != 0) && ((x < 0) != (n < 0))) --q;
  return q;
}

struct Key {
  std::int64_t norm;
  std::int64_t a;
  std::int64_t b;
  friend auto operator<=>(const Key&, const Key&) = default;
};

// Recursive-descent parser for Eisenstein expressions.
class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  EisensteinInt parse_all() {
    EisensteinInt v = expr();
    skip_ws();
    if (pos_ != text_.size()) fail("trailing characters");
    return v;
  }

 private:
  [[noreturn]] void fail(const std::string& why) const {
    throw DomainError("cannot parse Eisenstein integer '" + std::string(text_) +
                      "': " + why);
  }
  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool peek(char c) {
    skip_ws();
    return pos_ < text_.size() && text_[pos_] == c;
  }
  bool at_factor_start() {
    skip_ws();
    if (pos_ >= text_.size()) return false;
    char c = text_[pos_];
    return c == '(' || c == 'w' || std::isdigit(static_cast<unsigned char>(c));
  }

  EisensteinInt expr() {
    bool negate = false;
    if (peek('+')) {
      ++pos_;
    } else if (peek('-')) {
      ++pos_;
      negate = true;
    }
    EisensteinInt v = term();
    if (negate) v = -v;
    while (peek('+') || peek('-')) {
      const char op = text_[pos_++];
      const EisensteinInt t = term();
      v = op == '+' ? v + t : v - t;
    }
    return v;
  }

  EisensteinInt term() {
    EisensteinInt v = factor();
    for (;;) {
      if (peek('*')) {
        ++pos_;
        v = v * factor();
      } else if (at_factor_start()) {
        v = v * factor();
      } else {
        break;
      }
    }
    return v;
  }

  EisensteinInt factor() {
    skip_ws();
    if (pos_ >= text_.size()) fail("unexpected end");
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      EisensteinInt v = expr();
      if (!peek(')')) fail("missing ')'");
      ++pos_;
      return v;
    }
    if (c == '-') {
      ++pos_;
      return -factor();
    }
    if (c == 'w') {
      ++pos_;
      return EisensteinInt::omega();
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::int64_t n = 0;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
        n = n * 10 + (text_[pos_] - '0');
        ++pos_;
      }
      skip_ws();
      if (pos_ < text_.size() && text_[pos_] == 'w') {
        ++pos_;
        return {0, n};
      }
      return {n, 0};
    }
    fail(std::string("unexpected '") + c + "'");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

// An element of norm p for a rational prime p = 3 or p = 1 mod 3.
EisensteinInt element_of_norm(std::int64_t p) {
  const auto bound = static_cast<std::int64_t>(std::sqrt(4.0 * static_cast<double>(p) / 3.0)) + 2;
  for (std::int64_t a = 0; a <= bound; ++a) {
    for (std::int64_t b = -bound; b <= bound; ++b) {
      EisensteinInt x{a, b};
      if (x.norm() == p) return x;
    }
  }
  throw InconsistencyError("no Eisenstein integer of norm " + std::to_string(p));
}

std::uint64_t pack(EisensteinInt x) {
  return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(x.a)) << 32) |
         static_cast<std::uint32_t>(x.b);
}

}  // namespace

const std::array<EisensteinInt, 6>& units() {
  static const std::array<EisensteinInt, 6> kUnits = {
      EisensteinInt{1, 0}, EisensteinInt{1, 1},  EisensteinInt{0, 1},
      EisensteinInt{-1, 0}, EisensteinInt{-1, -1}, EisensteinInt{0, -1}};
  return kUnits;
}

bool is_unit(EisensteinInt x) { return x.norm() == 1; }

std::string to_string(EisensteinInt x) {
  std::ostringstream os;
  if (x.b == 0) {
    os << x.a;
    return os.str();
  }
  if (x.a != 0) os << x.a;
  if (x.b > 0 && x.a != 0) os << '+';
  if (x.b == -1) {
    os << '-';
  } else if (x.b != 1) {
    os << x.b;
  }
  os << 'w';
  return os.str();
}

EisensteinInt parse(std::string_view text) { return Parser(text).parse_all(); }

std::optional<EisensteinInt> exact_div(EisensteinInt x, EisensteinInt y) {
  if (y.is_zero()) throw DomainError("division by zero");
  const EisensteinInt p = x * y.conj();
  const std::int64_t n = y.norm();
  if (p.a % n != 0 || p.b % n != 0) return std::nullopt;
  return EisensteinInt{p.a / n, p.b / n};
}

bool divides(EisensteinInt d, EisensteinInt x) {
  if (d.is_zero()) return x.is_zero();
  return exact_div(x, d).has_value();
}

bool associated(EisensteinInt x, EisensteinInt y) {
  for (const auto& u : units()) {
    if (u * x == y) return true;
  }
  return false;
}

EisensteinInt reduce(EisensteinInt x, EisensteinInt m) {
  if (m.is_zero()) throw DomainError("reduction modulo 0");
  const EisensteinInt p = x * m.conj();
  const std::int64_t n = m.norm();
  const std::int64_t qa = floor_div(p.a, n);
  const std::int64_t qb = floor_div(p.b, n);
  std::optional<Key> best;
  EisensteinInt best_r;
  for (std::int64_t da = -1; da <= 2; ++da) {
    for (std::int64_t db = -1; db <= 2; ++db) {
      const EisensteinInt r = x - EisensteinInt{qa + da, qb + db} * m;
      const Key k{r.norm(), r.a, r.b};
      if (!best || k < *best) {
        best = k;
        best_r = r;
      }
    }
  }
  return best_r;
}

EisensteinInt canonical_associate(EisensteinInt x) {
  if (x.is_zero()) return x;
  std::optional<EisensteinInt> best;
  for (const auto& u : units()) {
    const EisensteinInt y = u * x;
    if (y.a > 0 && y.b >= 0 && (!best || y.b < best->b)) best = y;
  }
  return *best;
}

EisensteinInt Factorization::product() const {
  EisensteinInt v = unit;
  for (const auto& [p, e] : parts) {
    for (int i = 0; i < e; ++i) v = v * p;
  }
  return v;
}

Factorization factor(EisensteinInt m) {
  if (m.is_zero()) throw DomainError("cannot factor 0");
  std::vector<EisensteinInt> primes;
  std::int64_t n = m.norm();
  for (std::int64_t p = 2; p * p <= n || n > 1; ++p) {
    if (p * p > n) p = n;  // remaining cofactor is a rational prime
    if (n % p != 0) continue;
    while (n % p == 0) n /= p;
    if (p == 3) {
      primes.push_back(canonical_associate({1, -1}));
    } else if (p % 3 == 2) {
      primes.push_back({p, 0});
    } else {
      const EisensteinInt pi = element_of_norm(p);
      primes.push_back(canonical_associate(pi));
      primes.push_back(canonical_associate(pi.conj()));
    }
  }
  Factorization f;
  EisensteinInt rest = m;
  for (const auto& pi : primes) {
    int e = 0;
    while (auto q = exact_div(rest, pi)) {
      rest = *q;
      ++e;
    }
    if (e > 0) f.parts.push_back({pi, e});
  }
  if (!is_unit(rest)) {
    throw InconsistencyError("factorization of " + to_string(m) + " left cofactor " +
                             to_string(rest));
  }
  f.unit = rest;
  std::sort(f.parts.begin(), f.parts.end(), [](const PrimePower& x, const PrimePower& y) {
    return Key{x.prime.norm(), x.prime.a, x.prime.b} < Key{y.prime.norm(), y.prime.a, y.prime.b};
  });
  return f;
}

std::string to_string(const Factorization& f) {
  std::ostringstream os;
  os << to_string(f.unit);
  for (const auto& [p, e] : f.parts) {
    os << " (" << to_string(p) << ")^" << e;
  }
  return os.str();
}

ResidueRing::ResidueRing(EisensteinInt modulus) : modulus_(modulus) {
  if (modulus.is_zero()) throw DomainError("residue ring modulo 0");
  const std::int64_t n = modulus.norm();
  // Z[w]/(m) is generated additively by 1 and w; walk the lattice.
  std::set<std::pair<std::int64_t, std::int64_t>> seen;
  std::vector<EisensteinInt> frontier{EisensteinInt{0, 0}};
  seen.insert({0, 0});
  while (!frontier.empty()) {
    std::vector<EisensteinInt> next;
    for (const auto& x : frontier) {
      for (const EisensteinInt step : {EisensteinInt{1, 0}, EisensteinInt{0, 1}}) {
        const EisensteinInt y = reduce(x + step, modulus);
        if (seen.insert({y.a, y.b}).second) next.push_back(y);
      }
    }
    frontier = std::move(next);
  }
  for (const auto& [a, b] : seen) elements_.push_back({a, b});
  if (static_cast<std::int64_t>(elements_.size()) != n) {
    throw InconsistencyError("residue ring size mismatch for " + to_string(modulus));
  }
  for (Index i = 0; i < elements_.size(); ++i) lookup_[pack(elements_[i])] = i;
  zero_ = index_of({0, 0});
  one_ = index_of({1, 0});
  minus_one_ = index_of({-1, 0});

  const std::size_t size = elements_.size();
  constexpr std::size_t kTableLimit = 1024;
  if (size <= kTableLimit) {
    add_table_.resize(size * size);
    mul_table_.resize(size * size);
    for (Index i = 0; i < size; ++i) {
      for (Index j = 0; j < size; ++j) {
        add_table_[i * size + j] = index_of(elements_[i] + elements_[j]);
        mul_table_[i * size + j] = index_of(elements_[i] * elements_[j]);
      }
    }
  }
  neg_.resize(size);
  inv_.assign(size, kNone);
  for (Index i = 0; i < size; ++i) neg_[i] = index_of(-elements_[i]);
  for (Index i = 0; i < size; ++i) {
    if (inv_[i] != kNone) continue;
    for (Index j = 0; j < size; ++j) {
      if (mul(i, j) == one_) {
        inv_[i] = j;
        inv_[j] = i;
        break;
      }
    }
  }
  if (divides(modulus, modulus.conj())) {
    conj_.resize(size);
    for (Index i = 0; i < size; ++i) conj_[i] = index_of(elements_[i].conj());
  }
}

ResidueRing::Index ResidueRing::index_of(EisensteinInt x) const {
  const EisensteinInt r = reduce(x, modulus_);
  return lookup_.at(pack(r));
}

ResidueRing::Index ResidueRing::add(Index x, Index y) const {
  if (!add_table_.empty()) return add_table_[x * elements_.size() + y];
  return index_of(elements_[x] + elements_[y]);
}

ResidueRing::Index ResidueRing::sub(Index x, Index y) const { return add(x, neg_[y]); }

ResidueRing::Index ResidueRing::mul(Index x, Index y) const {
  if (!mul_table_.empty()) return mul_table_[x * elements_.size() + y];
  return index_of(elements_[x] * elements_[y]);
}

std::optional<ResidueRing::Index> ResidueRing::inverse(Index x) const {
  if (inv_[x] == kNone) return std::nullopt;
  return inv_[x];
}

ResidueRing::Index ResidueRing::conj(Index x) const {
  if (conj_.empty()) throw StateError("conjugation is not defined modulo " + to_string(modulus_));
  return conj_[x];
}

ResidueRing residue_ring(EisensteinInt m) { return ResidueRing(m); }

std::vector<ResidueRing::Index> unit_group(const ResidueRing& ring) {
  std::vector<ResidueRing::Index> out;
  for (ResidueRing::Index i = 0; i < ring.size(); ++i) {
    if (ring.is_unit(i)) out.push_back(i);
  }
  return out;
}

bool ScalarGroup::contains(ResidueRing::Index x) const {
  return std::binary_search(members_.begin(), members_.end(), x);
}

bool ScalarGroup::conjugation_invariant(const ResidueRing& ring) const {
  for (auto x : members_) {
    if (!contains(ring.conj(x))) return false;
  }
  return true;
}

namespace {

std::vector<ResidueRing::Index> close_under_mul(const ResidueRing& ring,
                                               std::vector<ResidueRing::Index> gens) {
  std::set<ResidueRing::Index> members{ring.one()};
  std::vector<ResidueRing::Index> frontier{ring.one()};
  while (!frontier.empty()) {
    std::vector<ResidueRing::Index> next;
    for (auto x : frontier) {
      for (auto g : gens) {
        const auto y = ring.mul(x, g);
        if (members.insert(y).second) next.push_back(y);
      }
    }
    frontier = std::move(next);
  }
  return {members.begin(), members.end()};
}

}  // namespace

ScalarGroup scalar_subgroup(const ResidueRing& ring,
                            const std::vector<ResidueRing::Index>& gens) {
  std::vector<ResidueRing::Index> all = gens;
  for (auto g : gens) {
    if (g >= ring.size() || !ring.is_unit(g)) {
      throw DomainError("scalar generator " + to_string(ring.element(g)) + " is not a unit mod " +
                        to_string(ring.modulus()));
    }
  }
  all.push_back(ring.minus_one());
  return ScalarGroup(ring.modulus(), close_under_mul(ring, std::move(all)));
}

ScalarGroup scalar_subgroup(const ResidueRing& ring, const std::vector<EisensteinInt>& gens) {
  std::vector<ResidueRing::Index> idx;
  idx.reserve(gens.size());
  for (const auto& g : gens) {
    const auto i = ring.index_of(g);
    if (!ring.is_unit(i)) {
      throw DomainError("scalar generator " + to_string(g) + " is not a unit mod " +
                        to_string(ring.modulus()));
    }
    idx.push_back(i);
  }
  return scalar_subgroup(ring, idx);
}

std::vector<ScalarGroup> admissible_subgroups(const ResidueRing& ring) {
  const auto units_list = unit_group(ring);
  std::set<std::vector<ResidueRing::Index>> found;
  std::vector<std::vector<ResidueRing::Index>> frontier;
  auto base = scalar_subgroup(ring, std::vector<ResidueRing::Index>{}).members();
  found.insert(base);
  frontier.push_back(base);
  // Every subgroup containing -1 is reached by adding one generator at a time.
  while (!frontier.empty()) {
    std::vector<std::vector<ResidueRing::Index>> next;
    for (const auto& group : frontier) {
      for (auto u : units_list) {
        if (std::binary_search(group.begin(), group.end(), u)) continue;
        auto gens = group;
        gens.push_back(u);
        auto closed = close_under_mul(ring, std::move(gens));
        if (found.insert(closed).second) next.push_back(std::move(closed));
      }
    }
    frontier = std::move(next);
  }
  std::vector<ScalarGroup> out;
  for (const auto& members : found) out.emplace_back(ring.modulus(), members);
  std::sort(out.begin(), out.end(), [](const ScalarGroup& x, const ScalarGroup& y) {
    if (x.order() != y.order()) return x.order() < y.order();
    return x.members() < y.members();
  });
  return out;
}

std::int64_t vertex_count(EisensteinInt m, std::size_t scalar_order) {
  if (m.is_zero()) throw DomainError("vertex_count requires m != 0");
  const std::int64_t n = m.norm();
  if (n % 3 != 0 || n / 3 <= 1) {
    throw DomainError("vertex_count requires norm(m) = 3k with k > 1; norm(" + to_string(m) +
                      ") = " + std::to_string(n));
  }
  if (scalar_order == 0) throw DomainError("empty scalar group");
  // Edges = n^3 * prod(norm(pi)^2 - 1) / (12 |A| prod norm(pi)^2).
  __int128 num = static_cast<__int128>(n) * n * n;
  __int128 den = 12 * static_cast<__int128>(scalar_order);
  for (const auto& [pi, e] : factor(m).parts) {
    const __int128 q = pi.norm();
    num *= q * q - 1;
    den *= q * q;
  }
  if (num % den != 0) {
    throw InconsistencyError("vertex count for m = " + to_string(m) + ", |A| = " +
                             std::to_string(scalar_order) + " is not an integer");
  }
  return static_cast<std::int64_t>(2 * (num / den));
}

std::int64_t vertex_count(EisensteinInt m, const ScalarGroup& scalars) {
  return vertex_count(m, scalars.order());
}

}  // namespace polymedial::eisenstein
