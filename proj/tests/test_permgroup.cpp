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

#include "fixtures.hpp"
#include "polymedial/error.hpp"
#include "polymedial/perm_group.hpp"
#include "polymedial/permutation.hpp"
#include "polymedial/regular_group.hpp"

namespace polymedial::perm {
namespace {

TEST(Permutation, CycleAndOneLineNotation) {
  auto p = Permutation::parse_cycles("(0 1 2)(3 4)", 6);
  EXPECT_EQ(p.to_cycle_string(), "(0 1 2)(3 4)");
  EXPECT_EQ(p.to_one_line(), "[1 2 0 4 3 5]");
  EXPECT_EQ(Permutation::parse_one_line("1 2 0 4 3 5"), p);
  EXPECT_EQ(Permutation::identity(4).to_cycle_string(), "()");
  EXPECT_EQ(p.order(), 6u);
  EXPECT_THROW(Permutation(std::vector<Point>{0, 0, 1}), DomainError);
}

TEST(Permutation, ProductsActOnTheRight) {
  auto p = Permutation::parse_cycles("(0 1)", 3);
  auto q = Permutation::parse_cycles("(1 2)", 3);
  // 0 -> 1 under p, then 1 -> 2 under q.
  EXPECT_EQ((p * q)[0], 2u);
  std::mt19937_64 rng(1);
  for (int i = 0; i < 100; ++i) {
    auto a = testing::random_permutation(9, rng), b = testing::random_permutation(9, rng);
    EXPECT_TRUE((a * a.inverse()).is_identity());
    EXPECT_EQ((a * b).inverse(), b.inverse() * a.inverse());
    EXPECT_TRUE(a.pow(static_cast<std::int64_t>(a.order())).is_identity());
    EXPECT_EQ(Permutation::parse_cycles(a.to_cycle_string(), 9), a);
  }
}

TEST(StabChain, OrdersAgreeWithNaiveClosure) {
  std::mt19937_64 rng(2024);
  int compared = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t degree = 3 + trial % 6;
    std::vector<Permutation> gens;
    const int k = 1 + trial % 3;
    for (int i = 0; i < k; ++i) gens.push_back(testing::random_permutation(degree, rng));
    auto closure = naive_closure(degree, gens, 5000);
    if (!closure) continue;
    PermutationGroup g(degree, gens);
    EXPECT_EQ(g.order(), closure->size());
    for (const auto& x : *closure) EXPECT_TRUE(g.contains(x));
    ++compared;
  }
  EXPECT_GT(compared, 150);
}

TEST(StabChain, NonMembersAreRejected) {
  // The alternating group does not contain a transposition.
  std::vector<Permutation> gens{Permutation::parse_cycles("(0 1 2)", 5),
                                Permutation::parse_cycles("(0 1 2 3 4)", 5)};
  PermutationGroup a5(5, gens);
  EXPECT_EQ(a5.order(), 60u);
  EXPECT_FALSE(a5.contains(Permutation::parse_cycles("(0 1)", 5)));
  EXPECT_TRUE(a5.contains(Permutation::parse_cycles("(0 1)(2 3)", 5)));
}

TEST(StabChain, MathieuGroupM11) {
  std::vector<Permutation> gens{
      Permutation::parse_cycles("(0 1 2 3 4 5 6 7 8 9 10)", 11),
      Permutation::parse_cycles("(2 6 10 7)(3 9 4 5)", 11)};
  PermutationGroup m11(11, gens);
  EXPECT_EQ(m11.order(), 7920u);
  EXPECT_EQ(m11.pointwise_stabilizer_order(std::vector<Point>{0}), 720u);
  EXPECT_EQ(m11.orbits().size(), 1u);
}

TEST(StabChain, KnownOrderMismatchIsAnError) {
  std::vector<Permutation> gens{Permutation::parse_cycles("(0 1 2)", 3)};
  EXPECT_THROW(StabChain::build(3, gens, {}, 6), InconsistencyError);
  EXPECT_EQ(StabChain::build(3, gens, {}, 3).order(), 3u);
}

TEST(PermutationGroup, MappingsAndStabilizers) {
  std::vector<Permutation> gens{Permutation::parse_cycles("(0 1 2 3 4 5)", 6),
                                Permutation::parse_cycles("(1 5)(2 4)", 6)};
  PermutationGroup d6(6, gens);
  EXPECT_EQ(d6.order(), 12u);
  std::vector<Point> from{0, 1}, to{3, 2};
  auto g = d6.find_mapping(from, to);
  ASSERT_TRUE(g);
  EXPECT_EQ((*g)[0], 3u);
  EXPECT_EQ((*g)[1], 2u);
  std::vector<Point> bad{3, 5};
  EXPECT_FALSE(d6.find_mapping(from, bad));
  EXPECT_EQ(d6.pointwise_stabilizer_order(std::vector<Point>{0}), 2u);
  EXPECT_EQ(d6.pointwise_stabilizer_order(from), 1u);
  auto chain = d6.chain_with_base(to);
  EXPECT_EQ(chain.base()[0], 3u);
  EXPECT_EQ(chain.order_from(1), 2u);
}

TEST(RegularGroup, CayleyTableOfTheSymmetricGroup) {
  auto p = fp::Presentation::parse("gens: a b; rels: a^2, b^3, (a b)^2");
  auto g = testing::regular_group(p);
  ASSERT_EQ(g->order(), 6u);
  std::size_t involutions = 0;
  for (Point x = 0; x < 6; ++x) {
    EXPECT_EQ(g->multiply(x, g->inverse(x)), 0u);
    EXPECT_EQ(g->evaluate(g->word(x)), x);
    involutions += g->element_order(x) == 2;
    for (Point y = 0; y < 6; ++y) {
      EXPECT_EQ(g->right_map(y)[x], g->multiply(x, y));
      EXPECT_EQ(g->left_map(x)[y], g->multiply(x, y));
    }
  }
  EXPECT_EQ(involutions, 3u);
  std::vector<Point> a{g->generator_element(0)};
  EXPECT_EQ(g->subgroup_elements(a).size(), 2u);
}

TEST(RegularGroup, NonRegularActionIsRejected) {
  std::vector<Permutation> gens{Permutation::parse_cycles("(0 1)", 3)};
  EXPECT_THROW(RegularGroup{gens}, InconsistencyError);
}

TEST(RegularGroup, HomomorphismExtension) {
  auto p = fp::Presentation::parse("gens: a b; rels: a^2, b^3, (a b)^2");
  auto g = testing::regular_group(p);
  const Point a = g->generator_element(0), b = g->generator_element(1);
  // Conjugation by a is an automorphism; a -> b is not a homomorphism.
  std::vector<Point> conj{a, g->multiply(a, g->multiply(b, a))};
  EXPECT_TRUE(g->extend_homomorphism(conj));
  std::vector<Point> bad{b, b};
  EXPECT_FALSE(g->extend_homomorphism(bad, false));
  std::vector<Point> trivial{0, 0};
  EXPECT_TRUE(g->extend_homomorphism(trivial, false));
  EXPECT_FALSE(g->extend_homomorphism(trivial, true));
}

}  // namespace
}  // namespace polymedial::perm
