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

#include <random>
#include <set>

#include "polymedial/eisenstein.hpp"
#include "polymedial/error.hpp"

namespace polymedial::eisenstein {
namespace {

EisensteinInt random_int(std::mt19937_64& rng, int bound) {
  std::uniform_int_distribution<int> d(-bound, bound);
  return {d(rng), d(rng)};
}

TEST(Eisenstein, OmegaSatisfiesItsMinimalPolynomial) {
  const auto w = EisensteinInt::omega();
  EXPECT_EQ(w * w + w + EisensteinInt(1), EisensteinInt(0));
  EXPECT_EQ(w * w * w, EisensteinInt(1));
}

TEST(Eisenstein, NormIsMultiplicativeAndConjugationIsAnInvolution) {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 500; ++i) {
    auto x = random_int(rng, 40), y = random_int(rng, 40);
    EXPECT_EQ(norm(x * y), norm(x) * norm(y));
    EXPECT_EQ(x.conj().conj(), x);
    EXPECT_EQ((x * x.conj()), EisensteinInt(norm(x)));
  }
}

TEST(Eisenstein, SixUnitsOfNormOne) {
  std::set<EisensteinInt> found;
  for (int a = -3; a <= 3; ++a)
    for (int b = -3; b <= 3; ++b)
      if (EisensteinInt(a, b).norm() == 1) found.insert(EisensteinInt(a, b));
  ASSERT_EQ(found.size(), 6u);
  for (auto u : units()) {
    EXPECT_TRUE(found.count(u));
    EXPECT_TRUE(is_unit(u));
  }
  EXPECT_EQ(units()[1], EisensteinInt(1, 1));
}

TEST(Eisenstein, TextRoundTrip) {
  EXPECT_EQ(to_string({2, -2}), "2-2w");
  EXPECT_EQ(to_string({3, 0}), "3");
  EXPECT_EQ(to_string({0, -1}), "-w");
  EXPECT_EQ(to_string({1, 3}), "1+3w");
  EXPECT_EQ(parse("(1-w)(1+3w)"), EisensteinInt(1, -1) * EisensteinInt(1, 3));
  EXPECT_EQ(parse("2*(1-w)"), EisensteinInt(2, -2));
  std::mt19937_64 rng(11);
  for (int i = 0; i < 200; ++i) {
    auto x = random_int(rng, 30);
    EXPECT_EQ(parse(to_string(x)), x);
  }
  EXPECT_THROW(parse("2+"), DomainError);
  EXPECT_THROW(parse("x"), DomainError);
}

TEST(Eisenstein, DivisionAndAssociates) {
  const EisensteinInt t(1, -1);
  EXPECT_TRUE(divides(t, EisensteinInt(3)));
  EXPECT_FALSE(divides(t, EisensteinInt(2)));
  EXPECT_TRUE(associated(EisensteinInt(3), t * t));
  EXPECT_EQ(canonical_associate(t), EisensteinInt(2, 1));
  for (auto u : units()) EXPECT_EQ(canonical_associate(u * EisensteinInt(4, 5)),
                                   canonical_associate(EisensteinInt(4, 5)));
}

TEST(Eisenstein, FactorizationReconstructsTheInput) {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 300; ++i) {
    auto x = random_int(rng, 25);
    if (x.is_zero()) continue;
    auto f = factor(x);
    EXPECT_EQ(f.product(), x) << to_string(x);
    EXPECT_TRUE(is_unit(f.unit));
    std::int64_t n = 1;
    for (const auto& p : f.parts) {
      for (int k = 0; k < p.exponent; ++k) n *= p.prime.norm();
      // A prime has no proper divisor of smaller norm above 1.
      for (int a = -6; a <= 6; ++a)
        for (int b = -6; b <= 6; ++b) {
          EisensteinInt d(a, b);
          if (d.norm() > 1 && d.norm() < p.prime.norm()) {
            EXPECT_FALSE(divides(d, p.prime));
          }
        }
    }
    EXPECT_EQ(n, x.norm());
  }
  EXPECT_THROW(factor(EisensteinInt(0)), DomainError);
}

// Residue classes counted by pairwise divisibility, without reduce().
std::vector<EisensteinInt> brute_force_residues(EisensteinInt m) {
  const auto n = m.norm();
  std::vector<EisensteinInt> reps;
  for (std::int64_t a = 0; a < n; ++a)
    for (std::int64_t b = 0; b < n; ++b) {
      EisensteinInt x(a, b);
      bool fresh = true;
      for (auto r : reps)
        if (divides(m, x - r)) {
          fresh = false;
          break;
        }
      if (fresh) reps.push_back(x);
    }
  return reps;
}

class ResidueRingTest : public ::testing::TestWithParam<const char*> {};

TEST_P(ResidueRingTest, CardinalityAndUnitsMatchBruteForce) {
  const auto m = parse(GetParam());
  ResidueRing ring(m);
  auto reps = brute_force_residues(m);
  EXPECT_EQ(ring.size(), reps.size());
  EXPECT_EQ(ring.size(), static_cast<std::size_t>(m.norm()));
  std::size_t units_brute = 0;
  for (auto x : reps) {
    bool unit = false;
    for (auto y : reps) unit = unit || divides(m, x * y - EisensteinInt(1));
    units_brute += unit;
  }
  EXPECT_EQ(unit_group(ring).size(), units_brute);
}

TEST_P(ResidueRingTest, ArithmeticAgreesWithIntegers) {
  const auto m = parse(GetParam());
  ResidueRing ring(m);
  std::mt19937_64 rng(5);
  for (int i = 0; i < 300; ++i) {
    auto x = random_int(rng, 50), y = random_int(rng, 50);
    auto ix = ring.index_of(x), iy = ring.index_of(y);
    EXPECT_EQ(ring.add(ix, iy), ring.index_of(x + y));
    EXPECT_EQ(ring.mul(ix, iy), ring.index_of(x * y));
    EXPECT_EQ(ring.sub(ix, iy), ring.index_of(x - y));
    EXPECT_TRUE(divides(m, reduce(x, m) - x));
  }
  EXPECT_EQ(ring.mul(ring.minus_one(), ring.minus_one()), ring.one());
}

INSTANTIATE_TEST_SUITE_P(Moduli, ResidueRingTest,
                         ::testing::Values("3", "2-2w", "3-3w", "(1-w)(1+3w)", "2", "1+3w", "4"));

TEST(ScalarGroups, AdmissibleSubgroupsContainMinusOneAndAreClosed) {
  ResidueRing ring(parse("3-3w"));
  auto all = admissible_subgroups(ring);
  ASSERT_FALSE(all.empty());
  EXPECT_EQ(all.front().order(), 2u);
  for (const auto& a : all) {
    EXPECT_TRUE(a.contains(ring.minus_one()));
    for (auto x : a.members())
      for (auto y : a.members()) EXPECT_TRUE(a.contains(ring.mul(x, y)));
    EXPECT_EQ(unit_group(ring).size() % a.order(), 0u);
  }
  EXPECT_THROW(scalar_subgroup(ring, std::vector<EisensteinInt>{EisensteinInt(1, -1)}),
               DomainError);
}

TEST(VertexCount, KnownModuli) {
  EXPECT_EQ(vertex_count(parse("3"), 2), 54);
  EXPECT_EQ(vertex_count(parse("2-2w"), 2), 120);
  EXPECT_EQ(vertex_count(parse("3-3w"), 2), 1458);
  EXPECT_THROW(vertex_count(parse("1-w"), 2), DomainError);
  EXPECT_THROW(vertex_count(parse("2"), 2), DomainError);
}

}  // namespace
}  // namespace polymedial::eisenstein
