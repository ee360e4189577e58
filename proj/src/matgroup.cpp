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

#include "polymedial/matgroup.hpp"

#include <algorithm>
#include <unordered_map>

#include "polymedial/error.hpp"

namespace polymedial::matgroup {
namespace {

constexpr EisensteinInt kW{0, 1};
constexpr EisensteinInt kW2{-1, -1};

void check_modulus(EisensteinInt m) {
  const std::int64_t n = m.norm();
  if (m.is_zero() || n % 3 != 0 || n / 3 <= 1) {
    throw DomainError("the matrix construction requires norm(m) = 3k with k > 1, got norm(" +
                      eisenstein::to_string(m) + ") = " + std::to_string(n));
  }
}

std::uint64_t pack(const ResidueMatrix& x) {
  return (static_cast<std::uint64_t>(x[0]) << 48) | (static_cast<std::uint64_t>(x[1]) << 32) |
         (static_cast<std::uint64_t>(x[2]) << 16) | x[3];
}

ResidueMatrix unpack(std::uint64_t k) {
  return {static_cast<Index>(k >> 48), static_cast<Index>((k >> 32) & 0xffff),
          static_cast<Index>((k >> 16) & 0xffff), static_cast<Index>(k & 0xffff)};
}

}  // namespace

IntegralMatrix multiply(const IntegralMatrix& x, const IntegralMatrix& y) {
  return {x[0] * y[0] + x[1] * y[2], x[0] * y[1] + x[1] * y[3], x[2] * y[0] + x[3] * y[2],
          x[2] * y[1] + x[3] * y[3]};
}

EisensteinInt determinant(const IntegralMatrix& x) { return x[0] * x[3] - x[1] * x[2]; }

ResidueMatrix reduce(const ResidueRing& ring, const IntegralMatrix& x) {
  return {ring.index_of(x[0]), ring.index_of(x[1]), ring.index_of(x[2]), ring.index_of(x[3])};
}

ResidueMatrix identity(const ResidueRing& ring) {
  return {ring.one(), ring.zero(), ring.zero(), ring.one()};
}

ResidueMatrix multiply(const ResidueRing& ring, const ResidueMatrix& x, const ResidueMatrix& y) {
  auto dot = [&](Index a, Index b, Index c, Index d) {
    return ring.add(ring.mul(a, b), ring.mul(c, d));
  };
  return {dot(x[0], y[0], x[1], y[2]), dot(x[0], y[1], x[1], y[3]), dot(x[2], y[0], x[3], y[2]),
          dot(x[2], y[1], x[3], y[3])};
}

ResidueMatrix scale(const ResidueRing& ring, Index a, const ResidueMatrix& x) {
  return {ring.mul(a, x[0]), ring.mul(a, x[1]), ring.mul(a, x[2]), ring.mul(a, x[3])};
}

ResidueMatrix power(const ResidueRing& ring, const ResidueMatrix& x, int k) {
  if (k < 0) throw DomainError("negative matrix power");
  ResidueMatrix out = identity(ring);
  for (int i = 0; i < k; ++i) out = multiply(ring, out, x);
  return out;
}

Index determinant(const ResidueRing& ring, const ResidueMatrix& x) {
  return ring.sub(ring.mul(x[0], x[3]), ring.mul(x[1], x[2]));
}

bool is_scalar(const ResidueRing& ring, const ResidueMatrix& x, const ScalarGroup& scalars) {
  return x[1] == ring.zero() && x[2] == ring.zero() && x[0] == x[3] && scalars.contains(x[0]);
}

std::string to_string(const ResidueRing& ring, const ResidueMatrix& x) {
  std::string out = "(";
  for (int i = 0; i < 4; ++i) {
    if (i) out += ", ";
    out += eisenstein::to_string(ring.element(x[i]));
  }
  return out + ")";
}

ProjectiveElement ProjectiveElement::canonical(const ResidueRing& ring,
                                               const ScalarGroup& scalars,
                                               const ResidueMatrix& x) {
  if (ring.size() > 0xffff) throw DomainError("residue ring too large for packed matrices");
  ProjectiveElement e;
  e.key_ = UINT64_MAX;
  for (Index a : scalars.members()) e.key_ = std::min(e.key_, pack(scale(ring, a, x)));
  return e;
}

ResidueMatrix ProjectiveElement::matrix() const { return unpack(key_); }

const std::array<IntegralMatrix, 3>& integral_generators() {
  static const std::array<IntegralMatrix, 3> gens = {{
      {kW2, kW, 0, kW},
      {-kW, 0, 0, kW2},
      {-kW2, 0, EisensteinInt{1, 2}, -kW},
  }};
  return gens;
}

const std::vector<RotationRelation>& rotation_relations() {
  static const std::vector<RotationRelation> rels = {
      {"s1^3", {1, 1, 1}},
      {"s2^6", {2, 2, 2, 2, 2, 2}},
      {"s3^3", {3, 3, 3}},
      {"(s1 s2)^2", {1, 2, 1, 2}},
      {"(s2 s3)^2", {2, 3, 2, 3}},
      {"(s1 s2 s3)^2", {1, 2, 3, 1, 2, 3}},
  };
  return rels;
}

std::array<ResidueMatrix, 3> find_generators(const ResidueRing& ring) {
  check_modulus(ring.modulus());
  std::array<ResidueMatrix, 3> gens;
  for (int i = 0; i < 3; ++i) {
    gens[i] = reduce(ring, integral_generators()[i]);
    if (!ring.is_unit(determinant(ring, gens[i]))) {
      throw ConfigurationError("generator s" + std::to_string(i + 1) + " is singular mod " +
                               eisenstein::to_string(ring.modulus()));
    }
  }
  const ScalarGroup pm(ring.modulus(), [&] {
    std::vector<Index> v{ring.one(), ring.minus_one()};
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
  }());
  for (const auto& rel : rotation_relations()) {
    ResidueMatrix x = identity(ring);
    for (int g : rel.word) x = multiply(ring, x, gens[g - 1]);
    if (!is_scalar(ring, x, pm)) {
      throw ConfigurationError("relation " + std::string(rel.name) + " fails mod " +
                               eisenstein::to_string(ring.modulus()));
    }
  }
  return gens;
}

Symmetry regularity_test(EisensteinInt m, const ScalarGroup& scalars) {
  ResidueRing ring(m);
  if (!eisenstein::divides(m, m.conj()) || !ring.conjugation_defined()) return Symmetry::kChiral;
  return scalars.conjugation_invariant(ring) ? Symmetry::kRegular : Symmetry::kChiral;
}

MatrixGroup generate_group(const ResidueRing& ring, const ScalarGroup& scalars,
                           const std::array<ResidueMatrix, 3>& gens, std::size_t max_elements) {
  check_modulus(ring.modulus());
  if (!scalars.contains(ring.minus_one())) throw DomainError("scalar group must contain -1");
  MatrixGroup out;
  std::unordered_map<std::uint64_t, std::uint32_t> index;
  auto id = ProjectiveElement::canonical(ring, scalars, identity(ring));
  out.elements.push_back(id);
  index.emplace(id.key(), 0);
  std::vector<std::vector<perm::Point>> images(3);
  for (std::size_t head = 0; head < out.elements.size(); ++head) {
    const ResidueMatrix x = out.elements[head].matrix();
    for (int g = 0; g < 3; ++g) {
      auto y = ProjectiveElement::canonical(ring, scalars, multiply(ring, x, gens[g]));
      auto [it, fresh] = index.emplace(y.key(), static_cast<std::uint32_t>(out.elements.size()));
      if (fresh) {
        if (out.elements.size() >= max_elements) {
          out.reason = "element limit " + std::to_string(max_elements) + " reached";
          out.elements.clear();
          return out;
        }
        out.elements.push_back(y);
      }
      images[g].push_back(it->second);
    }
  }
  for (auto& img : images) out.cayley.emplace_back(std::move(img));
  out.complete = true;
  return out;
}

}  // namespace polymedial::matgroup
