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


#include "polymedial/classify.hpp"

#include <algorithm>
#include <array>
#include <numeric>

#include "polymedial/error.hpp"
#include "polymedial/kernels.hpp"

namespace polymedial::graph {

namespace {

std::vector<char> type_flags(const BipartiteCubicGraph& g, int type) {
  std::vector<char> flags(g.size());
  for (Point v = 0; v < g.size(); ++v) flags[v] = type == 0 || g.type(v) == type;
  return flags;
}

Permutation require_mapping(const perm::PermutationGroup& aut, const std::vector<Point>& from,
                            const std::vector<Point>& to, const char* what) {
  auto m = aut.find_mapping(from, to);
  if (!m) throw InconsistencyError(std::string("no automorphism realizes the ") + what);
  return *m;
}

}  // namespace

std::string Classification::to_string() const {
  switch (verdict) {
    case Verdict::kSymmetric:
      return std::to_string(t) + (sign == Sign::kPlus ? "+" : "-");
    case Verdict::kSemisymmetric:
      if (ordered) return "ss-(" + std::to_string(t1) + "," + std::to_string(t2) + ")";
      return "ss-{" + std::to_string(std::min(t1, t2)) + "," + std::to_string(std::max(t1, t2)) +
             "}";
    case Verdict::kNotEdgeTransitive:
      return "not edge-transitive";
    case Verdict::kUndecided:
      break;
  }
  return "undecided";
}

std::uint64_t t_arc_count(const BipartiteCubicGraph& g, int type, int t) {
  if (t < 1) throw DomainError("arc length must be at least 1");
  if (type < 0 || type > 2) throw DomainError("type must be 0, 1 or 2");
  auto flags = type_flags(g, type);
  return kernels::count_t_arcs(g.flat_neighbors(), flags, t);
}

std::vector<Point> first_arc(const BipartiteCubicGraph& g, int type, int t) {
  if (t < 1) throw DomainError("arc length must be at least 1");
  if (type < 0 || type > 2) throw DomainError("type must be 0, 1 or 2");
  Point start = 0;
  while (type != 0 && g.type(start) != type) ++start;
  std::vector<Point> arc{start, g.neighbors(start).front()};
  while (static_cast<int>(arc.size()) <= t) {
    Point prev = arc[arc.size() - 2];
    for (Point w : g.neighbors(arc.back())) {
      if (w != prev) {
        arc.push_back(w);
        break;
      }
    }
  }
  return arc;
}

bool arc_transitive(const BipartiteCubicGraph& g, const perm::PermutationGroup& aut, int type,
                    int t) {
  auto arc = first_arc(g, type, t);
  std::uint64_t orbit = aut.order() / aut.pointwise_stabilizer_order(arc);
  return orbit == t_arc_count(g, type, t);
}

std::size_t edge_orbit_count(const BipartiteCubicGraph& g, const perm::PermutationGroup& aut) {
  auto edges = g.graph().edges();
  std::vector<std::uint32_t> parent(edges.size());
  std::iota(parent.begin(), parent.end(), 0u);
  auto find = [&](std::uint32_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& p : aut.generators()) {
    for (std::uint32_t i = 0; i < edges.size(); ++i) {
      Point a = p[edges[i].first], b = p[edges[i].second];
      Edge e = a < b ? Edge{a, b} : Edge{b, a};
      auto j = static_cast<std::uint32_t>(std::lower_bound(edges.begin(), edges.end(), e) -
                                          edges.begin());
      if (j == edges.size() || edges[j] != e) throw InconsistencyError("generator is not an automorphism");
      auto ri = find(i), rj = find(j);
      if (ri != rj) parent[std::max(ri, rj)] = std::min(ri, rj);
    }
  }
  std::size_t count = 0;
  for (std::uint32_t i = 0; i < edges.size(); ++i) count += find(i) == i;
  return count;
}

Sign symmetric_sign(const BipartiteCubicGraph& g, const perm::PermutationGroup& aut,
                    const std::vector<Point>& arc) {
  if (arc.size() < 2) throw DomainError("arc length must be at least 1");
  const std::size_t t = arc.size() - 1;
  std::array<Point, 2> y{};
  std::size_t k = 0;
  for (Point w : g.neighbors(arc[t])) {
    if (w != arc[t - 1]) y.at(k++) = w;
  }
  std::array<Permutation, 2> shunt;
  for (std::size_t i = 0; i < 2; ++i) {
    std::vector<Point> succ(arc.begin() + 1, arc.end());
    succ.push_back(y[i]);
    shunt[i] = require_mapping(aut, arc, succ, "shunt");
  }
  std::vector<Point> reversed(arc.rbegin(), arc.rend());
  Permutation alpha = require_mapping(aut, arc, reversed, "reverser");
  Permutation conj = alpha * shunt[0] * alpha;
  bool plus = conj == shunt[0].inverse();
  bool minus = conj == shunt[1].inverse();
  if (plus == minus) {
    throw InconsistencyError("conjugated shunt matches " + std::string(plus ? "both" : "neither") +
                             " inverse shunt");
  }
  return plus ? Sign::kPlus : Sign::kMinus;
}

std::vector<std::uint64_t> stabilizer_sequence(const perm::PermutationGroup& aut,
                                               const std::vector<Point>& arc) {
  if (arc.empty()) throw DomainError("empty arc");
  auto chain = aut.chain_with_base(arc);
  const std::size_t t = arc.size() - 1;
  std::vector<std::uint64_t> out;
  for (std::size_t j = 0; j <= t; ++j) out.push_back(chain.order_from(t - j + 1));
  return out;
}

Classification classify(const BipartiteCubicGraph& g, const AutomorphismResult& aut,
                        bool ordered_types) {
  Classification c;
  if (!aut.decided) {
    c.reason = aut.reason;
    return c;
  }
  const auto group = aut.group(g.size());
  c.aut_order = aut.order;
  c.vertex_orbits = group.orbits().size();
  c.edge_orbits = edge_orbit_count(g, group);
  c.ordered = ordered_types;

  if (c.vertex_orbits == 1 && c.edge_orbits == 1) {
    int t = 0;
    while (arc_transitive(g, group, 0, t + 1)) {
      if (++t > kMaxSymmetricT) throw InconsistencyError("arc transitivity beyond t = 5");
    }
    if (t == 0) throw InconsistencyError("edge-transitive cubic graph without arc transitivity");
    c.verdict = Verdict::kSymmetric;
    c.t = t;
    c.base_arc = first_arc(g, 0, t);
    c.stabilizer_orders = stabilizer_sequence(group, c.base_arc);
    for (int j = 0; j <= t; ++j) {
      std::uint64_t want = j < t ? (1ULL << j) : 3ULL << (t - 1);
      if (c.stabilizer_orders[j] != want) {
        throw InconsistencyError("|B_" + std::to_string(j) + "| = " +
                                 std::to_string(c.stabilizer_orders[j]) + ", expected " +
                                 std::to_string(want));
      }
    }
    if (aut.order != 3ULL * g.size() * (1ULL << (t - 1))) {
      throw InconsistencyError("automorphism group order differs from 3N 2^(t-1)");
    }
    c.sign = symmetric_sign(g, group, c.base_arc);
    return c;
  }
  if (c.vertex_orbits == 2 && c.edge_orbits == 1) {
    for (Point v = 0; v < g.size(); ++v) {
      if (group.orbit(v).size() != g.size() / 2) {
        throw InconsistencyError("vertex orbits do not match the bipartition");
      }
    }
    c.verdict = Verdict::kSemisymmetric;
    for (int j = 1; j <= 2; ++j) {
      int t = 0;
      while (arc_transitive(g, group, j, t + 1)) {
        if (++t > kMaxSemisymmetricT) throw InconsistencyError("arc transitivity beyond t = 7");
      }
      (j == 1 ? c.t1 : c.t2) = t;
    }
    return c;
  }
  c.verdict = Verdict::kNotEdgeTransitive;
  return c;
}

Classification classify(const BipartiteCubicGraph& g, bool ordered_types,
                        const SearchLimits& limits) {
  return classify(g, automorphism_group(g, limits), ordered_types);
}

BipartiteCubicGraph gray_oracle() {
  // Column (d, a, b) runs along axis d through the other two coordinates
  // (a, b) in increasing axis order.
  auto column = [](int d, int a, int b) { return static_cast<Point>(9 * d + 3 * a + b); };
  std::vector<Edge> edges;
  for (int x = 0; x < 3; ++x) {
    for (int y = 0; y < 3; ++y) {
      for (int z = 0; z < 3; ++z) {
        auto cube = static_cast<Point>(27 + 9 * x + 3 * y + z);
        edges.emplace_back(column(0, y, z), cube);
        edges.emplace_back(column(1, x, z), cube);
        edges.emplace_back(column(2, x, y), cube);
      }
    }
  }
  std::vector<std::uint8_t> types(54, 1);
  std::fill(types.begin() + 27, types.end(), 2);
  return BipartiteCubicGraph(Graph::from_edges(54, edges), std::move(types));
}

}  // namespace polymedial::graph
