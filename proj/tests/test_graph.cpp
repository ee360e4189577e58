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
#include "polymedial/automorphism.hpp"
#include "polymedial/catalog.hpp"
#include "polymedial/classify.hpp"
#include "polymedial/error.hpp"
#include "polymedial/graph_io.hpp"
#include "polymedial/kernels.hpp"

namespace polymedial::graph {
namespace {

using namespace polymedial::testing;

TEST(CubicGraph, RejectsGraphsOutsideTheClass) {
  std::vector<Edge> k4;
  for (Point i = 0; i < 4; ++i)
    for (Point j = i + 1; j < 4; ++j) k4.emplace_back(i, j);
  EXPECT_THROW(make_bipartite(4, k4), DomainError);
  std::vector<Edge> two;
  for (Point base : {0u, 6u})
    for (Point i = 0; i < 3; ++i)
      for (Point j = 3; j < 6; ++j) two.emplace_back(base + i, base + j);
  EXPECT_THROW(make_bipartite(12, two), DomainError);
  std::vector<Edge> hexagon;
  for (Point i = 0; i < 6; ++i) hexagon.emplace_back(std::min(i, (i + 1) % 6), std::max(i, (i + 1) % 6));
  EXPECT_THROW(make_bipartite(6, hexagon), DomainError);
  std::vector<Edge> loop{{0, 0}};
  EXPECT_THROW(Graph::from_edges(1, loop), DomainError);
  std::vector<Edge> repeated{{0, 1}, {1, 0}};
  EXPECT_THROW(Graph::from_edges(2, repeated), DomainError);
  auto g = k33().graph();
  std::vector<std::uint8_t> wrong{1, 1, 1, 1, 2, 2};
  EXPECT_THROW(BipartiteCubicGraph(g, wrong), DomainError);
}

TEST(CubicGraph, RelabelingAndTypeSwap) {
  auto g = heawood();
  std::mt19937_64 rng(4);
  auto p = random_permutation(g.size(), rng);
  auto h = g.relabeled(p);
  for (auto [u, v] : g.graph().edges()) EXPECT_TRUE(h.graph().adjacent(p[u], p[v]));
  for (Point v = 0; v < g.size(); ++v) EXPECT_EQ(h.type(p[v]), g.type(v));
  auto s = g.types_swapped();
  for (Point v = 0; v < g.size(); ++v) EXPECT_EQ(s.type(v), 3 - g.type(v));
  EXPECT_EQ(g.count_of_type(1), 7u);
}

TEST(GraphIo, AdjacencyRoundTrip) {
  for (const auto& g : {k33(), heawood(), tutte_cage(), gray_oracle()}) {
    auto text = write_adjacency(g);
    auto h = read_adjacency(text);
    EXPECT_EQ(h.graph(), g.graph());
    EXPECT_EQ(h.types(), g.types());
  }
  EXPECT_EQ(write_adjacency(k33()).substr(0, 11), "0 1: 3 4 5\n");
}

TEST(GraphIo, AdjacencyErrors) {
  EXPECT_THROW(read_adjacency("0 1: 1 2 3\n"), DomainError);
  EXPECT_THROW(read_adjacency("0 1 3 4 5\n"), DomainError);
  auto text = write_adjacency(k33());
  auto asymmetric = text;
  asymmetric.replace(asymmetric.find("0 1: 3 4 5"), 10, "0 1: 3 4 4");
  EXPECT_THROW(read_adjacency(asymmetric), DomainError);
  EXPECT_NO_THROW(read_adjacency("# comment\n\n" + text));
}

TEST(GraphIo, Graph6MatchesReferenceEncodings) {
  EXPECT_EQ(write_graph6(k33().graph()), "EFz_");
  EXPECT_EQ(write_graph6(heawood().graph()), "M???E`gL?sP_P_g_?");
  EXPECT_EQ(read_graph6("EFz_"), k33().graph());
  EXPECT_EQ(read_graph6(">>graph6<<EFz_\n"), k33().graph());
  for (const auto& g : {tutte_cage(), gray_oracle(), hex_torus_54()})
    EXPECT_EQ(read_graph6(write_graph6(g.graph())), g.graph());
  EXPECT_THROW(read_graph6("E"), DomainError);
}

TEST(GraphIo, DotShapesFollowTypes) {
  auto dot = write_dot(k33(), "k33");
  EXPECT_EQ(dot.rfind("graph k33 {", 0), 0u);
  EXPECT_NE(dot.find("shape=circle"), std::string::npos);
  EXPECT_NE(dot.find("shape=box"), std::string::npos);
  EXPECT_EQ(std::count(dot.begin(), dot.end(), '-'), 2 * 9);
}

TEST(Automorphisms, HexagonHasTheDihedralGroupOfOrder12) {
  std::vector<Edge> e;
  for (Point i = 0; i < 6; ++i) e.emplace_back(std::min(i, (i + 1) % 6), std::max(i, (i + 1) % 6));
  auto r = automorphism_group(Graph::from_edges(6, e));
  ASSERT_TRUE(r.decided);
  EXPECT_EQ(r.order, 12u);
  auto g = r.group(6);
  EXPECT_EQ(g.order(), 12u);
}

TEST(Automorphisms, ColoursRestrictTheGroup) {
  auto g = k33();
  std::vector<std::uint32_t> colours(g.types().begin(), g.types().end());
  EXPECT_EQ(automorphism_group(g.graph(), colours).order, 36u);
  EXPECT_EQ(automorphism_group(g).order, 72u);
}

TEST(Automorphisms, GeneratorsAreAutomorphisms) {
  for (const auto& g : {heawood(), tutte_cage(), gray_oracle(), hex_torus_54()}) {
    auto r = automorphism_group(g);
    ASSERT_TRUE(r.decided);
    for (const auto& p : r.generators)
      for (auto [u, v] : g.graph().edges()) EXPECT_TRUE(g.graph().adjacent(p[u], p[v]));
    std::uint64_t product = 1;
    for (auto l : r.orbit_lengths) product *= l;
    EXPECT_EQ(product, r.order);
  }
}

TEST(Automorphisms, CapYieldsUndecided) {
  SearchLimits tight;
  tight.max_vertices = 20;
  auto r = automorphism_group(tutte_cage(), tight);
  EXPECT_FALSE(r.decided);
  EXPECT_FALSE(r.reason.empty());
  EXPECT_THROW(r.group(30), StateError);
}

TEST(Isomorphism, RelabeledCopiesAreIsomorphic) {
  std::mt19937_64 rng(99);
  for (const auto& g : {heawood(), gray_oracle(), hex_torus_54()}) {
    auto p = random_permutation(g.size(), rng);
    auto h = g.graph().relabeled(p);
    auto r = find_isomorphism(g.graph(), h);
    ASSERT_TRUE(r.decided);
    ASSERT_TRUE(r.isomorphic);
    for (auto [u, v] : g.graph().edges()) EXPECT_TRUE(h.adjacent((*r.mapping)[u], (*r.mapping)[v]));
  }
}

TEST(Isomorphism, GrayGraphIsNotTheHexagonalTorus) {
  auto r = find_isomorphism(gray_oracle().graph(), hex_torus_54().graph());
  ASSERT_TRUE(r.decided);
  EXPECT_FALSE(r.isomorphic);
  EXPECT_FALSE(r.mapping);
}

TEST(GrayOracle, StructureOfCubeletsAndColumns) {
  auto g = gray_oracle();
  EXPECT_EQ(g.size(), 54u);
  EXPECT_EQ(g.count_of_type(1), 27u);
  EXPECT_EQ(g.count_of_type(2), 27u);
  EXPECT_EQ(g.graph().edge_count(), 81u);
  auto r = automorphism_group(g);
  EXPECT_EQ(r.order, 1296u);
}

struct SymmetricCase {
  const char* name;
  BipartiteCubicGraph (*make)();
  int t;
  std::uint64_t order;
};

BipartiteCubicGraph desargues() {
  // Incidence of the 2-subsets and 3-subsets of {0..4}.
  std::vector<int> pairs, triples;
  for (int m = 0; m < 32; ++m) {
    if (__builtin_popcount(m) == 2) pairs.push_back(m);
    if (__builtin_popcount(m) == 3) triples.push_back(m);
  }
  std::vector<Edge> e;
  for (Point i = 0; i < 10; ++i)
    for (Point j = 0; j < 10; ++j)
      if ((pairs[i] & triples[j]) == pairs[i]) e.emplace_back(i, 10 + j);
  return make_bipartite(20, e);
}

class SymmetricGraphs : public ::testing::TestWithParam<SymmetricCase> {};

TEST_P(SymmetricGraphs, ClassificationAndArcStabilizers) {
  const auto c = GetParam();
  auto g = c.make();
  auto aut = automorphism_group(g);
  ASSERT_TRUE(aut.decided);
  EXPECT_EQ(aut.order, c.order);
  auto cl = classify(g, aut, false);
  ASSERT_EQ(cl.verdict, Verdict::kSymmetric);
  EXPECT_EQ(cl.t, c.t);
  const std::uint64_t n = g.size();
  EXPECT_EQ(cl.aut_order, 3 * n << (c.t - 1));
  std::vector<std::uint64_t> expected;
  for (int j = 0; j < c.t; ++j) expected.push_back(std::uint64_t{1} << j);
  expected.push_back(std::uint64_t{3} << (c.t - 1));
  EXPECT_EQ(cl.stabilizer_orders, expected);
  auto grp = aut.group(g.size());
  EXPECT_EQ(grp.pointwise_stabilizer_order(cl.base_arc), 1u);
  for (int r = 1; r <= c.t; ++r) EXPECT_TRUE(arc_transitive(g, grp, 0, r)) << r;
  EXPECT_FALSE(arc_transitive(g, grp, 0, c.t + 1));
  EXPECT_NO_THROW(symmetric_sign(g, grp, cl.base_arc));
  EXPECT_EQ(cl.vertex_orbits, 1u);
  EXPECT_EQ(cl.edge_orbits, 1u);
  EXPECT_EQ(edge_orbit_count(g, grp), 1u);
}

INSTANTIATE_TEST_SUITE_P(
    Census, SymmetricGraphs,
    ::testing::Values(SymmetricCase{"K33", k33, 3, 72}, SymmetricCase{"Cube", cube, 2, 48},
                      SymmetricCase{"Heawood", heawood, 4, 336},
                      SymmetricCase{"Desargues", desargues, 3, 240},
                      SymmetricCase{"TutteCage", tutte_cage, 5, 1440},
                      SymmetricCase{"HexTorus54", hex_torus_54, 2, 324}),
    [](const auto& info) { return std::string(info.param.name); });

TEST(Classify, ArcCounts) {
  auto g = heawood();
  // 3 * 2^(t-1) arcs of length t from each vertex.
  for (int t = 1; t <= 6; ++t) EXPECT_EQ(t_arc_count(g, 0, t), 14u * (3u << (t - 1)));
  EXPECT_EQ(t_arc_count(g, 1, 2), 7u * 6u);
  auto arc = first_arc(g, 1, 3);
  ASSERT_EQ(arc.size(), 4u);
  EXPECT_EQ(g.type(arc[0]), 1);
  for (std::size_t i = 1; i < arc.size(); ++i) EXPECT_TRUE(g.graph().adjacent(arc[i - 1], arc[i]));
}

TEST(Classify, PrismIsNotEdgeTransitive) {
  auto cl = classify(hexagonal_prism(), false);
  EXPECT_EQ(cl.verdict, Verdict::kNotEdgeTransitive);
  EXPECT_EQ(cl.to_string(), "not edge-transitive");
  EXPECT_EQ(cl.aut_order, 24u);
  EXPECT_EQ(cl.edge_orbits, 2u);
}

TEST(Classify, GrayGraphIsSemisymmetric) {
  auto g = gray_oracle();
  auto cl = classify(g, false);
  ASSERT_EQ(cl.verdict, Verdict::kSemisymmetric);
  EXPECT_EQ(cl.vertex_orbits, 2u);
  EXPECT_EQ(cl.edge_orbits, 1u);
  EXPECT_FALSE(cl.ordered);
  EXPECT_EQ(cl.to_string(), "ss-{3,4}");
  auto ordered = classify(g, true);
  EXPECT_TRUE(ordered.ordered);
  auto swapped = classify(g.types_swapped(), true);
  EXPECT_EQ(ordered.t1, swapped.t2);
  EXPECT_EQ(ordered.t2, swapped.t1);
  EXPECT_LE(std::max(ordered.t1, ordered.t2), kMaxSemisymmetricT);
}

TEST(Classify, InvariantUnderRelabeling) {
  std::mt19937_64 rng(12345);
  for (const auto& g : {k33(), heawood(), gray_oracle(), hex_torus_54(), hexagonal_prism()}) {
    const auto base = classify(g, false).to_string();
    for (int i = 0; i < 4; ++i) {
      auto h = g.relabeled(random_permutation(g.size(), rng));
      EXPECT_EQ(classify(h, false).to_string(), base);
    }
  }
}

TEST(Classify, UndecidedPastTheCap) {
  SearchLimits tight;
  tight.max_vertices = 10;
  auto cl = classify(heawood(), true, tight);
  EXPECT_EQ(cl.verdict, Verdict::kUndecided);
  EXPECT_EQ(cl.to_string(), "undecided");
  EXPECT_FALSE(cl.reason.empty());
}

}  // namespace
}  // namespace polymedial::graph

namespace polymedial::kernels {
namespace {

using namespace polymedial::testing;

class KernelThreads : public ::testing::Test {
 protected:
  void SetUp() override { saved_ = threads(); }
  void TearDown() override { set_threads(saved_); }
  int saved_ = 1;
};

TEST_F(KernelThreads, SerialAndParallelAgree) {
  std::mt19937_64 rng(8);
  set_threads(4);
  for (const auto& g : {heawood(), tutte_cage(), graph::gray_oracle()}) {
    auto nb = g.flat_neighbors();
    std::vector<char> start(g.size(), 0);
    for (Point v = 0; v < g.size(); v += 2) start[v] = 1;
    for (int t = 1; t <= 6; ++t)
      EXPECT_EQ(count_t_arcs_serial(nb, start, t), count_t_arcs_parallel(nb, start, t));
    auto aut = graph::automorphism_group(g);
    for (const auto& p : aut.generators) {
      EXPECT_TRUE(preserves_edges_serial(nb, p));
      EXPECT_TRUE(preserves_edges_parallel(nb, p));
    }
    for (int i = 0; i < 5; ++i) {
      auto p = random_permutation(g.size(), rng);
      EXPECT_EQ(preserves_edges_serial(nb, p), preserves_edges_parallel(nb, p));
    }
  }
}

TEST_F(KernelThreads, RelatorsAndCayleyConsistency) {
  set_threads(3);
  auto p = catalog::coxeter_string(3, 3, 3);
  auto table = fp::coset_enumeration(p, {});
  auto gens = table.permutations();
  std::vector<Word> rels(p.relators.begin(), p.relators.end());
  EXPECT_TRUE(relators_trivial_serial(gens, rels));
  EXPECT_TRUE(relators_trivial_parallel(gens, rels));
  rels.push_back({0, 1});
  EXPECT_FALSE(relators_trivial_serial(gens, rels));
  EXPECT_FALSE(relators_trivial_parallel(gens, rels));
  std::vector<Point> id(gens[0].degree());
  std::iota(id.begin(), id.end(), 0);
  EXPECT_TRUE(cayley_consistent_serial(gens, gens, id));
  EXPECT_TRUE(cayley_consistent_parallel(gens, gens, id));
  std::swap(id[0], id[1]);
  EXPECT_EQ(cayley_consistent_serial(gens, gens, id), cayley_consistent_parallel(gens, gens, id));
}

}  // namespace
}  // namespace polymedial::kernels
