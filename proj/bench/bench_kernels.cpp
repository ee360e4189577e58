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


// Serial and OpenMP kernels on the larger known instances.

#include <benchmark/benchmark.h>

#include <random>

#include "polymedial/catalog.hpp"
#include "polymedial/fpgroup.hpp"
#include "polymedial/instances.hpp"
#include "polymedial/kernels.hpp"

namespace {

using namespace polymedial;

const instances::Instance& row6() {
  static const instances::Instance inst = [] {
    auto r = instances::build(instances::InstanceKey::parse("universal:3,6:3,0:2,2"));
    return *r.instance;
  }();
  return inst;
}

struct Enumerated {
  fp::Presentation p;
  std::vector<perm::Permutation> gens;
};

const Enumerated& row5_table() {
  static const Enumerated e = [] {
    auto p = catalog::universal_locally_toroidal({3, 0}, {3, 0});
    auto t = fp::coset_enumeration(p, {});
    return Enumerated{p, t.permutations()};
  }();
  return e;
}

std::vector<char> type_one_starts(const graph::BipartiteCubicGraph& g) {
  std::vector<char> start(g.size());
  for (perm::Point v = 0; v < g.size(); ++v) start[v] = g.type(v) == 1;
  return start;
}

void BM_CountArcsSerial(benchmark::State& state) {
  const auto& g = *row6().graph;
  auto start = type_one_starts(g);
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        kernels::count_t_arcs_serial(g.flat_neighbors(), start, static_cast<int>(state.range(0))));
  }
}
BENCHMARK(BM_CountArcsSerial)->Arg(6)->Arg(8);

void BM_CountArcsParallel(benchmark::State& state) {
  const auto& g = *row6().graph;
  auto start = type_one_starts(g);
  for (auto _ : state) {
    benchmark::DoNotOptimize(kernels::count_t_arcs_parallel(g.flat_neighbors(), start,
                                                            static_cast<int>(state.range(0))));
  }
}
BENCHMARK(BM_CountArcsParallel)->Arg(6)->Arg(8);

void BM_PreservesEdgesSerial(benchmark::State& state) {
  const auto& inst = row6();
  for (auto _ : state) {
    for (const auto& a : inst.graph_action)
      benchmark::DoNotOptimize(kernels::preserves_edges_serial(inst.graph->flat_neighbors(), a));
  }
}
BENCHMARK(BM_PreservesEdgesSerial);

void BM_PreservesEdgesParallel(benchmark::State& state) {
  const auto& inst = row6();
  for (auto _ : state) {
    for (const auto& a : inst.graph_action)
      benchmark::DoNotOptimize(kernels::preserves_edges_parallel(inst.graph->flat_neighbors(), a));
  }
}
BENCHMARK(BM_PreservesEdgesParallel);

void BM_RelatorsSerial(benchmark::State& state) {
  const auto& e = row5_table();
  std::vector<kernels::Word> rels(e.p.relators.begin(), e.p.relators.end());
  for (auto _ : state) benchmark::DoNotOptimize(kernels::relators_trivial_serial(e.gens, rels));
}
BENCHMARK(BM_RelatorsSerial);

void BM_RelatorsParallel(benchmark::State& state) {
  const auto& e = row5_table();
  std::vector<kernels::Word> rels(e.p.relators.begin(), e.p.relators.end());
  for (auto _ : state) benchmark::DoNotOptimize(kernels::relators_trivial_parallel(e.gens, rels));
}
BENCHMARK(BM_RelatorsParallel);

}  // namespace

BENCHMARK_MAIN();
