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


#include <gtest/gtest.h>

#include <set>

#include "polymedial/eisenstein.hpp"
#include "polymedial/error.hpp"
#include "polymedial/matgroup.hpp"
#include "polymedial/polytope.hpp"

namespace polymedial::matgroup {
namespace {

using eisenstein::parse;

IntegralMatrix pow_int(IntegralMatrix x, int k) {
  IntegralMatrix r{EisensteinInt(1), EisensteinInt(0), EisensteinInt(0), EisensteinInt(1)};
  for (int i = 0; i < k; ++i) r = multiply(r, x);
  return r;
}

bool plus_minus_identity(const IntegralMatrix& x) {
  return x[1].is_zero() && x[2].is_zero() && x[0] == x[3] &&
         (x[0] == EisensteinInt(1) || x[0] == EisensteinInt(-1));
}

TEST(IntegralGenerators, SatisfyTheRotationRelationsOverTheIntegers) {
  const auto& g = integral_generators();
  for (const auto& rel : rotation_relations()) {
    IntegralMatrix x{EisensteinInt(1), EisensteinInt(0), EisensteinInt(0), EisensteinInt(1)};
    for (int j : rel.word) x = multiply(x, g[j - 1]);
    EXPECT_TRUE(plus_minus_identity(x)) << rel.name;
  }
  for (const auto& m : g) EXPECT_TRUE(eisenstein::is_unit(determinant(m)));
}

// Every s3 with small entries and unit determinant satisfying the relations
// that involve it, given s1 and s2.
TEST(IntegralGenerators, BoundedSearchFindsOnlyTheFrozenThirdGenerator) {
  const auto& g = integral_generators();
  std::vector<EisensteinInt> box;
  for (int a = -3; a <= 3; ++a)
    for (int b = -3; b <= 3; ++b) box.emplace_back(a, b);
  std::set<IntegralMatrix> found;
  for (auto e0 : box)
    for (auto e3 : box) {
      for (auto e1 : box)
        for (auto e2 : box) {
          IntegralMatrix s3{e0, e1, e2, e3};
          if (!eisenstein::is_unit(determinant(s3))) continue;
          if (!plus_minus_identity(pow_int(s3, 3))) continue;
          if (!plus_minus_identity(pow_int(multiply(g[1], s3), 2))) continue;
          if (!plus_minus_identity(pow_int(multiply(multiply(g[0], g[1]), s3), 2))) continue;
          found.insert(s3);
        }
    }
  IntegralMatrix neg = g[2];
  for (auto& e : neg) e = -e;
  EXPECT_EQ(found, (std::set<IntegralMatrix>{g[2], neg}));
}

TEST(ResidueMatrices, ReductionIsAHomomorphism) {
  eisenstein::ResidueRing ring(parse("2-2w"));
  const auto& g = integral_generators();
  for (const auto& x : g)
    for (const auto& y : g)
      EXPECT_EQ(reduce(ring, multiply(x, y)), multiply(ring, reduce(ring, x), reduce(ring, y)));
  EXPECT_EQ(power(ring, reduce(ring, g[1]), 6), scale(ring, ring.one(), identity(ring)));
  EXPECT_EQ(to_string(ring, identity(ring)), "(1, 0, 0, 1)");
}

struct GroupCase {
  const char* m;
  std::size_t rotation_order;
};

class RotationGroupOrder : public ::testing::TestWithParam<GroupCase> {};

TEST_P(RotationGroupOrder, IsHalfTheReflectionGroupOrder) {
  const auto c = GetParam();
  eisenstein::ResidueRing ring(parse(c.m));
  auto a = eisenstein::scalar_subgroup(ring, std::vector<EisensteinInt>{});
  auto mg = generate_group(ring, a, find_generators(ring));
  ASSERT_TRUE(mg.complete);
  EXPECT_EQ(mg.order(), c.rotation_order);
  std::set<std::uint64_t> keys;
  for (auto e : mg.elements) keys.insert(e.key());
  EXPECT_EQ(keys.size(), mg.order());
  EXPECT_EQ(mg.cayley.size(), 3u);
}

INSTANTIATE_TEST_SUITE_P(Moduli, RotationGroupOrder,
                         ::testing::Values(GroupCase{"3", 162}, GroupCase{"2-2w", 360},
                                           GroupCase{"3-3w", 4374},
                                           GroupCase{"(1-w)(1+3w)", 2016}));

TEST(Regularity, ConjugationInvariantModuliAreRegular) {
  auto check = [](const char* text) {
    eisenstein::ResidueRing ring(parse(text));
    return regularity_test(parse(text), eisenstein::scalar_subgroup(ring, std::vector<EisensteinInt>{}));
  };
  EXPECT_EQ(check("3"), Symmetry::kRegular);
  EXPECT_EQ(check("2-2w"), Symmetry::kRegular);
  EXPECT_EQ(check("3-3w"), Symmetry::kRegular);
  EXPECT_EQ(check("(1-w)(1+3w)"), Symmetry::kChiral);
}

TEST(Generators, DomainChecks) {
  EXPECT_THROW(find_generators(eisenstein::ResidueRing(parse("1-w"))), DomainError);
  EXPECT_THROW(find_generators(eisenstein::ResidueRing(parse("2"))), DomainError);
}

TEST(MatrixGroup, OverflowIsReported) {
  eisenstein::ResidueRing ring(parse("3-3w"));
  auto a = eisenstein::scalar_subgroup(ring, std::vector<EisensteinInt>{});
  auto mg = generate_group(ring, a, find_generators(ring), 100);
  EXPECT_FALSE(mg.complete);
  EXPECT_FALSE(mg.reason.empty());
}

}  // namespace
}  // namespace polymedial::matgroup
