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

#include "polymedial/classify.hpp"
#include "polymedial/eisenstein.hpp"
#include "polymedial/error.hpp"
#include "polymedial/instances.hpp"
#include "polymedial/report.hpp"

namespace polymedial::instances {
namespace {

Instance built(std::string_view key) {
  auto r = build(InstanceKey::parse(key));
  EXPECT_EQ(r.status, BuildStatus::kBuilt) << r.reason;
  return *r.instance;
}

TEST(InstanceKey, ParseAndPrint) {
  auto k = InstanceKey::parse("universal:3,6:1,1:3,0");
  EXPECT_EQ(k.kind, KeyKind::kUniversal);
  EXPECT_EQ(k.s.v(), 3);
  EXPECT_EQ(k.t.v(), 9);
  EXPECT_EQ(k.to_string(), "universal:3,6:1,1:3,0");
  EXPECT_EQ(k.first_param(), "(1,1)");
  EXPECT_EQ(InstanceKey::parse("p1296").kind, KeyKind::kP1296);
  auto e = InstanceKey::parse("eisenstein:m=2-2w:A=");
  EXPECT_EQ(e.kind, KeyKind::kEisenstein);
  EXPECT_EQ(e.m, eisenstein::EisensteinInt(2, -2));
  EXPECT_TRUE(e.a_gens.empty());
  EXPECT_EQ(InstanceKey::parse(e.to_string()).m, e.m);
  for (const char* bad : {"universal:3,5:1,1:1,1", "universal:3,6:2,1:1,1",
                          "p1297", "", "universal:3,6:1,1", "eisenstein:m=3:A=2+"})
    EXPECT_THROW(InstanceKey::parse(bad), DomainError) << bad;
}

TEST(Build, UniversalInstances) {
  auto i = built("universal:3,6:1,1:3,0");
  EXPECT_EQ(i.group_order, 324u);
  ASSERT_TRUE(i.rotation_order);
  EXPECT_EQ(*i.rotation_order, 162u);
  EXPECT_EQ(i.type, (polytope::SchlafliType{3, 6, 3}));
  EXPECT_EQ(i.self_dual, polytope::Tristate::kFalse);
  ASSERT_TRUE(i.graph);
  EXPECT_EQ(i.graph->size(), 54u);
  EXPECT_EQ(i.graph->count_of_type(1), 27u);
  EXPECT_FALSE(i.graph_action.empty());
  auto j = built("universal:3,6:2,0:2,0");
  EXPECT_EQ(j.self_dual, polytope::Tristate::kTrue);
}

TEST(Build, SimplexToroidalHasNoMedialGraph) {
  auto i = built("p1296");
  EXPECT_EQ(i.group_order, 1296u);
  EXPECT_EQ(i.type, (polytope::SchlafliType{3, 3, 6}));
  EXPECT_FALSE(i.graph);
}

TEST(Build, OverflowIsAStatusNotAnError) {
  Limits tight;
  tight.max_cosets = 1000;
  auto r = build(InstanceKey::parse("universal:3,6:3,0:3,0"), tight);
  EXPECT_EQ(r.status, BuildStatus::kOverflow);
  EXPECT_FALSE(r.reason.empty());
  EXPECT_FALSE(r.instance);
}

TEST(Build, EisensteinChiralInstance) {
  auto i = built("eisenstein:m=(1-w)(1+3w):A=");
  EXPECT_EQ(i.kind, polytope::SymmetryKind::kChiral);
  EXPECT_EQ(i.group_order, 2016u);
  ASSERT_TRUE(i.graph);
  EXPECT_EQ(i.graph->size(), 672u);
  EXPECT_EQ(i.self_dual, polytope::Tristate::kFalse);
}

TEST(Build, EisensteinDomainErrors) {
  EXPECT_THROW(build(InstanceKey::parse("eisenstein:m=1-w:A=")), DomainError);
  EXPECT_THROW(build(InstanceKey::parse("eisenstein:m=2:A=")), DomainError);
  // w has order 3 in the units, so A would not be a 2-group.
  EXPECT_THROW(build(InstanceKey::parse("eisenstein:m=3:A=w")), DomainError);
}

// The enumerated medial graph agrees with the closed vertex-count formula for
// every admissible 2-group of scalars.
class VertexFormula : public ::testing::TestWithParam<const char*> {};

TEST_P(VertexFormula, MatchesTheBuiltGraph) {
  const auto m = eisenstein::parse(GetParam());
  eisenstein::ResidueRing ring(m);
  int tested = 0;
  for (const auto& a : eisenstein::admissible_subgroups(ring)) {
    if ((a.order() & (a.order() - 1)) != 0) continue;
    InstanceKey key;
    key.kind = KeyKind::kEisenstein;
    key.m = m;
    for (auto x : a.members()) key.a_gens.push_back(ring.element(x));
    auto r = build(key);
    ASSERT_EQ(r.status, BuildStatus::kBuilt) << r.reason;
    ASSERT_TRUE(r.instance->graph);
    EXPECT_EQ(static_cast<std::int64_t>(r.instance->graph->size()),
              eisenstein::vertex_count(m, a))
        << key.to_string();
    ++tested;
  }
  EXPECT_GT(tested, 0);
}

INSTANTIATE_TEST_SUITE_P(Moduli, VertexFormula,
                         ::testing::Values("3", "2-2w", "(1-w)(1+3w)", "(1-w)(2+3w)", "7(1-w)"));

}  // namespace
}  // namespace polymedial::instances

namespace polymedial::report {
namespace {

TEST(Report, CsvQuoting) {
  EXPECT_EQ(csv_field("plain"), "plain");
  EXPECT_EQ(csv_field("a,b"), "\"a,b\"");
  EXPECT_EQ(csv_field("say \"x\""), "\"say \"\"x\"\"\"");
}

TEST(Report, RowsAreDeterministicWithoutTiming) {
  RowOptions o;
  std::vector<Row> a, b;
  for (const char* k : {"universal:3,6:1,1:1,1", "universal:3,6:2,0:2,0", "eisenstein:m=3:A="}) {
    a.push_back(run_instance(instances::InstanceKey::parse(k), o));
    b.push_back(run_instance(instances::InstanceKey::parse(k), o));
  }
  EXPECT_EQ(render(a, Format::kCsv, false), render(b, Format::kCsv, false));
  auto md = render(a, Format::kMarkdown, false);
  EXPECT_EQ(md.substr(0, md.find('\n')),
            "| key | s | t | group_order | N | verdict | aut_order | seconds |");
  auto csv = render(a, Format::kCsv, false);
  EXPECT_EQ(csv.substr(0, csv.find('\n')), "key,s,t,group_order,N,verdict,aut_order,seconds");
  EXPECT_EQ(a[0].verdict, "3+");
  EXPECT_EQ(a[2].s, "3");
}

TEST(Report, ErrorsBecomeRows) {
  RowOptions o;
  auto r = run_instance(instances::InstanceKey::parse("eisenstein:m=2:A="), o);
  EXPECT_EQ(r.verdict, "error");
  EXPECT_EQ(r.exit_code, kExitBadInput);
  o.limits.max_cosets = 500;
  auto over = run_instance(instances::InstanceKey::parse("universal:3,6:3,0:3,0"), o);
  EXPECT_EQ(over.verdict, "overflow");
  EXPECT_EQ(over.exit_code, kExitUndecided);
  RowOptions gated;
  gated.gate = "skipped";
  auto g = run_instance(instances::InstanceKey::parse("universal:3,6:1,1:1,1"), gated);
  EXPECT_EQ(g.verdict, "undecided");
  EXPECT_EQ(g.vertices, 18u);
  EXPECT_EQ(g.exit_code, kExitUndecided);
}

TEST(Report, ImportedGraphsAreUnordered) {
  RowOptions o;
  auto r = run_graph("gray", graph::gray_oracle(), o);
  EXPECT_EQ(r.verdict, "ss-{3,4}");
  EXPECT_EQ(r.aut_order, 1296u);
  EXPECT_EQ(r.exit_code, kExitOk);
}

}  // namespace
}  // namespace polymedial::report
