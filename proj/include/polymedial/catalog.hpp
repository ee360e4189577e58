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

#ifndef POLYMEDIAL_CATALOG_HPP_
#define POLYMEDIAL_CATALOG_HPP_

#include <array>
#include <cstdint>
#include <string>

#include "polymedial/fpgroup.hpp"

// Presentations of the string Coxeter groups and their toroidal quotients.
// Generators are always named r0, r1, ... in string order.
namespace polymedial::catalog {

struct ToroidalParams {
  int s = 0;
  int t = 0;

  std::int64_t v() const {
    return static_cast<std::int64_t>(s) * s + static_cast<std::int64_t>(s) * t +
           static_cast<std::int64_t>(t) * t;
  }
  // Regular maps are the forms (s,0) and (s,s).
  bool regular_form() const { return t == 0 || s == t; }
  std::string to_string() const;
  // "3,0" or "(3,0)".
  static ToroidalParams parse(std::string_view text);
};

fp::Presentation coxeter_string(int p1, int p2);
fp::Presentation coxeter_string(int p1, int p2, int p3);

// Translation relator for {3,6}_(s,t) in the generators r0 r1 r2 of [3,6].
// (s,0): (r0 r1 r2)^(2s); (s,s): (r0 r1 r2 r1 r2)^(2s). Both were selected by
// a bounded search and are validated by the quotient orders in the tests.
fp::Word toroidal_relator(ToroidalParams p);

// [3,6] / T(s): the regular map {3,6}_s.
fp::Presentation toroidal_map(ToroidalParams p);

// [3,6,3] with T(s) on r0 r1 r2 and the dual of T(t) on r3 r2 r1.
fp::Presentation universal_locally_toroidal(ToroidalParams s, ToroidalParams t);

// [3,3,6] with T((3,0)) on r1 r2 r3: the polytope {{3,3},{3,6}_(3,0)}.
fp::Presentation simplex_toroidal_1296();

// [3,5,3] with (r0 r1 r2)^5 and (r1 r2 r3)^5: the 11-cell, order 660.
fp::Presentation eleven_cell();

// Subgroup generated by the listed generators, as words.
std::vector<fp::Word> parabolic(std::initializer_list<int> gens);

}  // namespace polymedial::catalog

#endif  // POLYMEDIAL_CATALOG_HPP_
