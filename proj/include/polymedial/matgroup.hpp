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

#ifndef POLYMEDIAL_MATGROUP_HPP_
#define POLYMEDIAL_MATGROUP_HPP_

#include <array>
#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "polymedial/eisenstein.hpp"
#include "polymedial/permutation.hpp"

namespace polymedial::matgroup {

using eisenstein::EisensteinInt;
using eisenstein::ResidueRing;
using eisenstein::ScalarGroup;
using Index = ResidueRing::Index;

// Row-major 2x2 matrices [e0 e1; e2 e3].
using IntegralMatrix = std::array<EisensteinInt, 4>;
using ResidueMatrix = std::array<Index, 4>;

IntegralMatrix multiply(const IntegralMatrix& x, const IntegralMatrix& y);
EisensteinInt determinant(const IntegralMatrix& x);

ResidueMatrix reduce(const ResidueRing& ring, const IntegralMatrix& x);
ResidueMatrix identity(const ResidueRing& ring);
ResidueMatrix multiply(const ResidueRing& ring, const ResidueMatrix& x, const ResidueMatrix& y);
ResidueMatrix scale(const ResidueRing& ring, Index a, const ResidueMatrix& x);
ResidueMatrix power(const ResidueRing& ring, const ResidueMatrix& x, int k);
Index determinant(const ResidueRing& ring, const ResidueMatrix& x);
// x == a*I for some a in `scalars`.
bool is_scalar(const ResidueRing& ring, const ResidueMatrix& x, const ScalarGroup& scalars);
// "(e0, e1, e2, e3)" with canonical residues, e.g. "(w, 1-w, 0, -1)".
std::string to_string(const ResidueRing& ring, const ResidueMatrix& x);

// A matrix modulo the scalars A, stored as the smallest packed A-multiple.
class ProjectiveElement {
 public:
  static ProjectiveElement canonical(const ResidueRing& ring, const ScalarGroup& scalars,
                                     const ResidueMatrix& x);
  std::uint64_t key() const { return key_; }
  ResidueMatrix matrix() const;

  friend bool operator==(ProjectiveElement, ProjectiveElement) = default;
  friend auto operator<=>(ProjectiveElement, ProjectiveElement) = default;

 private:
  std::uint64_t key_ = 0;
};

// The frozen integral triple: s1 = [w^2 w; 0 w], s2 = [-w 0; 0 w^2],
// s3 = [-w^2 0; 1+2w -w].
const std::array<IntegralMatrix, 3>& integral_generators();

// Relation words for the rotation generators (exponent lists over 1,2,3), in
// the order s1^3, s2^6, s3^3, (s1 s2)^2, (s2 s3)^2, (s1 s2 s3)^2.
struct RotationRelation {
  const char* name;
  std::vector<int> word;
};
const std::vector<RotationRelation>& rotation_relations();

// The triple reduced mod m and checked against rotation_relations() modulo
// +-1. Requires norm(m) = 3k, k > 1 (DomainError); a failing relation raises
// ConfigurationError naming it.
std::array<ResidueMatrix, 3> find_generators(const ResidueRing& ring);

enum class Symmetry { kRegular, kChiral };
// Regular iff m divides its conjugate and A equals its conjugate.
Symmetry regularity_test(EisensteinInt m, const ScalarGroup& scalars);

struct MatrixGroup {
  bool complete = false;
  std::string reason;                         // set when overflowed
  std::vector<ProjectiveElement> elements;    // BFS order, elements[0] = identity
  std::vector<perm::Permutation> cayley;      // right multiplication by each generator
  std::size_t order() const { return elements.size(); }
};

// Breadth-first closure of <gens> in PGL_2(D/(m)) / A.
MatrixGroup generate_group(const ResidueRing& ring, const ScalarGroup& scalars,
                           const std::array<ResidueMatrix, 3>& gens,
                           std::size_t max_elements = 2'000'000);

}  // namespace polymedial::matgroup

#endif  // POLYMEDIAL_MATGROUP_HPP_
