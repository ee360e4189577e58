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

#include "polymedial/polytope.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "polymedial/error.hpp"

namespace polymedial::polytope {
namespace {

std::string index_set(unsigned mask, const char* prefix) {
  std::string out = "{";
  bool first = true;
  for (int i = 0; i < 4; ++i) {
    if (mask & (1u << i)) {
      if (!first) out += ",";
      out += prefix + std::to_string(i);
      first = false;
    }
  }
  return out + "}";
}

std::size_t intersection_size(const std::vector<Point>& a, const std::vector<Point>& b) {
  std::size_t n = 0;
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() && j != b.end()) {
    if (*i < *j) {
      ++i;
    } else if (*j < *i) {
      ++j;
    } else {
      ++n;
      ++i;
      ++j;
    }
  }
  return n;
}

// Regular group on the same points generated by right multiplication by the
// given elements; reuses `group` when those are already its generators.
GroupPtr regenerate(const GroupPtr& group, std::span<const Point> elems) {
  bool same = group->rank() == elems.size();
  for (std::size_t i = 0; same && i < elems.size(); ++i) {
    same = group->generator_element(i) == elems[i];
  }
  if (same) return group;
  std::vector<perm::Permutation> gens;
  for (Point x : elems) gens.push_back(group->right_map(x));
  try {
    return std::make_shared<const RegularGroup>(std::move(gens));
  } catch (const InconsistencyError&) {
    throw InconsistencyError("the given elements do not generate the group");
  }
}

Point mul(const RegularGroup& g, std::initializer_list<Point> xs) {
  Point p = 0;
  for (Point x : xs) p = g.multiply(p, x);
  return p;
}

// Label each element g with its coset <gens> g, numbering cosets by their
// smallest element.
std::vector<std::uint32_t> coset_labels(const RegularGroup& g, const std::vector<Point>& gens,
                                        std::size_t* count, std::size_t* coset_size) {
  std::vector<perm::Permutation> left;
  for (Point x : gens) left.push_back(g.left_map(x));
  const std::size_t n = g.order();
  std::vector<std::uint32_t> label(n, UINT32_MAX);
  std::uint32_t next = 0;
  std::size_t size = 0;
  std::vector<Point> queue;
  for (Point s = 0; s < n; ++s) {
    if (label[s] != UINT32_MAX) continue;
    queue.assign(1, s);
    label[s] = next;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      for (const auto& l : left) {
        Point t = l[queue[head]];
        if (label[t] == UINT32_MAX) {
          label[t] = next;
          queue.push_back(t);
        }
      }
    }
    if (next == 0) size = queue.size();
    if (queue.size() != size) throw InconsistencyError("cosets of unequal size");
    ++next;
  }
  *count = next;
  *coset_size = size;
  return label;
}

}  // namespace

std::string SchlafliType::to_string() const {
  return "{" + std::to_string(p1) + "," + std::to_string(p2) + "," + std::to_string(p3) + "}";
}

StringCGroup validate_string_cgroup(GroupPtr group, std::array<Point, 4> rho) {
  const RegularGroup& g0 = *group;
  for (int j = 0; j < 4; ++j) {
    if (rho[j] >= g0.order()) throw DomainError("element out of range");
    if (rho[j] == 0 || g0.multiply(rho[j], rho[j]) != 0) {
      throw InconsistencyError("rho" + std::to_string(j) + " is not an involution");
    }
  }
  for (int i = 0; i < 4; ++i) {
    for (int j = i + 2; j < 4; ++j) {
      Point x = g0.multiply(rho[i], rho[j]);
      if (g0.multiply(x, x) != 0) {
        throw InconsistencyError("relation (rho" + std::to_string(i) + " rho" + std::to_string(j) +
                                 ")^2 fails");
      }
    }
  }
  StringCGroup c;
  c.group_ = regenerate(group, rho);
  const RegularGroup& g = *c.group_;
  c.type_ = {static_cast<int>(g.element_order(g.multiply(rho[0], rho[1]))),
             static_cast<int>(g.element_order(g.multiply(rho[1], rho[2]))),
             static_cast<int>(g.element_order(g.multiply(rho[2], rho[3])))};

  std::array<std::vector<Point>, 16> sub;
  for (unsigned mask = 0; mask < 16; ++mask) {
    std::vector<Point> gens;
    for (int i = 0; i < 4; ++i) {
      if (mask & (1u << i)) gens.push_back(rho[i]);
    }
    sub[mask] = g.subgroup_elements(gens);
  }
  for (unsigned a = 0; a < 16; ++a) {
    for (unsigned b = a + 1; b < 16; ++b) {
      if ((a & b) == a || (a & b) == b) continue;
      if (intersection_size(sub[a], sub[b]) != sub[a & b].size()) {
        throw InconsistencyError("intersection condition fails for I = " + index_set(a, "") +
                                 ", J = " + index_set(b, ""));
      }
    }
  }
  return c;
}

StringCGroup validate_string_cgroup(GroupPtr group) {
  if (group->rank() < 4) throw DomainError("need four generators");
  return validate_string_cgroup(group, {group->generator_element(0), group->generator_element(1),
                                        group->generator_element(2),
                                        group->generator_element(3)});
}

RotationGroup validate_rotation_group(GroupPtr group, std::array<Point, 3> sigma,
                                      std::optional<SchlafliType> expected) {
  for (Point s : sigma) {
    if (s >= group->order()) throw DomainError("element out of range");
  }
  RotationGroup r;
  r.group_ = regenerate(group, sigma);
  const RegularGroup& g = *r.group_;
  const Point s1 = sigma[0], s2 = sigma[1], s3 = sigma[2];
  r.type_ = {static_cast<int>(g.element_order(s1)), static_cast<int>(g.element_order(s2)),
             static_cast<int>(g.element_order(s3))};
  if (expected) {
    const int want[3] = {expected->p1, expected->p2, expected->p3};
    const int got[3] = {r.type_.p1, r.type_.p2, r.type_.p3};
    for (int i = 0; i < 3; ++i) {
      if (want[i] != got[i]) {
        throw InconsistencyError("relation sigma" + std::to_string(i + 1) + "^" +
                                 std::to_string(want[i]) + " fails: sigma" + std::to_string(i + 1) +
                                 " has order " + std::to_string(got[i]));
      }
    }
  }
  auto square_is_one = [&](Point x) { return g.multiply(x, x) == 0; };
  if (!square_is_one(g.multiply(s1, s2))) throw InconsistencyError("relation (s1 s2)^2 fails");
  if (!square_is_one(g.multiply(s2, s3))) throw InconsistencyError("relation (s2 s3)^2 fails");
  if (!square_is_one(mul(g, {s1, s2, s3}))) {
    throw InconsistencyError("relation (s1 s2 s3)^2 fails");
  }
  auto e1 = g.subgroup_elements(std::vector<Point>{s1});
  auto e2 = g.subgroup_elements(std::vector<Point>{s2});
  auto e3 = g.subgroup_elements(std::vector<Point>{s3});
  if (intersection_size(e1, e2) != 1) {
    throw InconsistencyError("intersection <s1> n <s2> is not trivial");
  }
  if (intersection_size(e2, e3) != 1) {
    throw InconsistencyError("intersection <s2> n <s3> is not trivial");
  }
  auto e12 = g.subgroup_elements(std::vector<Point>{s1, s2});
  auto e23 = g.subgroup_elements(std::vector<Point>{s2, s3});
  if (intersection_size(e12, e23) != e2.size()) {
    throw InconsistencyError("intersection <s1,s2> n <s2,s3> differs from <s2>");
  }
  return r;
}

RotationGroup validate_rotation_group(GroupPtr group, std::optional<SchlafliType> expected) {
  if (group->rank() < 3) throw DomainError("need three generators");
  return validate_rotation_group(
      group, {group->generator_element(0), group->generator_element(1), group->generator_element(2)},
      expected);
}

std::optional<StringCGroup> reflection_recovery(const RotationGroup& r) {
  const RegularGroup& g = r.group();
  const Point s1 = r.sigma(1), s2 = r.sigma(2), s3 = r.sigma(3);
  const Point s23 = g.multiply(s2, s3);
  auto involution = [&](Point x) { return x != 0 && g.multiply(x, x) == 0; };
  for (Point x = 1; x < g.order(); ++x) {
    if (!involution(x)) continue;
    std::array<Point, 4> rho = {g.multiply(s1, x), x, g.multiply(x, s2), g.multiply(x, s23)};
    if (!involution(rho[0]) || !involution(rho[2]) || !involution(rho[3])) continue;
    try {
      return validate_string_cgroup(r.group_ptr(), rho);
    } catch (const InconsistencyError&) {
    }
  }
  return std::nullopt;
}

DirectRegularity is_directly_regular(const RotationGroup& r, std::size_t max_order) {
  DirectRegularity out;
  if (r.order() > max_order) {
    out.decided = false;
    return out;
  }
  const RegularGroup& g = r.group();
  const Point s1 = r.sigma(1), s2 = r.sigma(2), s3 = r.sigma(3);
  std::array<Point, 3> images = {g.inverse(s1), mul(g, {s1, s1, s2}), s3};
  auto phi = g.extend_homomorphism(images, true);
  if (phi) {
    out.directly_regular = true;
    out.automorphism = std::move(*phi);
  }
  return out;
}

StringCGroup directly_regular_extension(const RotationGroup& r, const DirectRegularity& d) {
  if (!d.decided || !d.directly_regular) {
    throw StateError("the rotation group is not known to be directly regular");
  }
  const RegularGroup& g = r.group();
  const std::size_t n = g.order();
  // Points h + e n stand for h r^e; (h, e) s = (h phi^e(s), e), (h, e) r = (h, 1 - e).
  std::vector<perm::Permutation> gens;
  for (int i = 1; i <= 3; ++i) {
    auto right = g.right_map(r.sigma(i));
    auto twisted = g.right_map(d.automorphism[r.sigma(i)]);
    std::vector<Point> img(2 * n);
    for (Point h = 0; h < n; ++h) {
      img[h] = right[h];
      img[h + n] = static_cast<Point>(twisted[h] + n);
    }
    gens.emplace_back(std::move(img));
  }
  std::vector<Point> flip(2 * n);
  for (Point h = 0; h < n; ++h) {
    flip[h] = static_cast<Point>(h + n);
    flip[h + n] = h;
  }
  gens.emplace_back(std::move(flip));
  auto big = std::make_shared<const RegularGroup>(std::move(gens));
  const Point rr = big->generator_element(3);
  const Point t1 = big->generator_element(0), t2 = big->generator_element(1),
              t3 = big->generator_element(2);
  std::array<Point, 4> rho = {rr, mul(*big, {rr, t1}), mul(*big, {rr, t1, t2}),
                              mul(*big, {rr, t1, t2, t3})};
  return validate_string_cgroup(big, rho);
}

Tristate self_duality_test(const StringCGroup& c, std::size_t max_order) {
  if (c.order() > max_order) return Tristate::kUndecided;
  std::array<Point, 4> images = {c.rho(3), c.rho(2), c.rho(1), c.rho(0)};
  return c.group().extend_homomorphism(images, true) ? Tristate::kTrue : Tristate::kFalse;
}

Tristate self_duality_test(const RotationGroup& r, std::size_t max_order) {
  if (r.order() > max_order) return Tristate::kUndecided;
  const RegularGroup& g = r.group();
  const Point s1 = r.sigma(1), s2 = r.sigma(2), s3 = r.sigma(3);
  const Point a = g.inverse(s3), b = g.inverse(s2), c = g.inverse(s1);
  std::array<Point, 3> proper = {a, b, c};
  std::array<Point, 3> improper = {s3, mul(g, {a, a, b}), c};
  if (g.extend_homomorphism(proper, true) || g.extend_homomorphism(improper, true)) {
    return Tristate::kTrue;
  }
  return Tristate::kFalse;
}

PolytopeHandle PolytopeHandle::regular(const StringCGroup& c, Source source) {
  PolytopeHandle h;
  h.source_ = source;
  h.kind_ = SymmetryKind::kRegular;
  h.group_ = c.group_ptr();
  h.q_ = c.type().p2;
  h.build({c.rho(0), c.rho(2), c.rho(3)}, {c.rho(0), c.rho(1), c.rho(3)});
  return h;
}

PolytopeHandle PolytopeHandle::chiral(const RotationGroup& r, Source source) {
  PolytopeHandle h;
  h.source_ = source;
  h.kind_ = SymmetryKind::kChiral;
  h.group_ = r.group_ptr();
  h.q_ = r.type().p2;
  const RegularGroup& g = r.group();
  h.build({g.multiply(r.sigma(1), r.sigma(2)), r.sigma(3)},
          {r.sigma(1), g.multiply(r.sigma(2), r.sigma(3))});
  return h;
}

void PolytopeHandle::build(const std::vector<Point>& e_gens, const std::vector<Point>& f_gens) {
  const RegularGroup& g = *group_;
  face1_ = coset_labels(g, e_gens, &n1_, &e_order_);
  face2_ = coset_labels(g, f_gens, &n2_, &f_order_);
  for (std::size_t i = 0; i < g.rank(); ++i) {
    const auto& gen = g.generator(i);
    std::vector<Point> a1(n1_, UINT32_MAX), a2(n2_, UINT32_MAX);
    for (Point x = 0; x < g.order(); ++x) {
      Point y = gen[x];
      for (auto [face, act] : {std::pair{&face1_, &a1}, std::pair{&face2_, &a2}}) {
        auto& slot = (*act)[(*face)[x]];
        if (slot == UINT32_MAX) {
          slot = (*face)[y];
        } else if (slot != (*face)[y]) {
          throw InconsistencyError("generator action on faces is not well defined");
        }
      }
    }
    action1_.emplace_back(std::move(a1));
    action2_.emplace_back(std::move(a2));
  }
}

std::vector<perm::Permutation> PolytopeHandle::graph_action() const {
  std::vector<perm::Permutation> out;
  for (std::size_t i = 0; i < action1_.size(); ++i) {
    std::vector<Point> img(n1_ + n2_);
    for (Point v = 0; v < n1_; ++v) img[v] = action1_[i][v];
    for (Point v = 0; v < n2_; ++v) img[n1_ + v] = static_cast<Point>(n1_ + action2_[i][v]);
    out.emplace_back(std::move(img));
  }
  return out;
}

graph::BipartiteCubicGraph medial_layer_graph(const PolytopeHandle& h) {
  const std::size_t n1 = h.face_count(1), n2 = h.face_count(2);
  std::vector<graph::Edge> edges;
  edges.reserve(h.group_order());
  for (Point x = 0; x < h.group_order(); ++x) {
    edges.emplace_back(h.face_of(1, x), static_cast<Point>(n1 + h.face_of(2, x)));
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  std::vector<std::uint8_t> types(n1 + n2, 2);
  std::fill(types.begin(), types.begin() + static_cast<std::ptrdiff_t>(n1), 1);
  try {
    return graph::BipartiteCubicGraph(graph::Graph::from_edges(n1 + n2, edges), std::move(types));
  } catch (const DomainError& e) {
    throw InconsistencyError(std::string("medial layer construction: ") + e.what());
  }
}

bool has_section_cycle(const PolytopeHandle& h, const graph::BipartiteCubicGraph& g) {
  const Point u = h.base_pair().first;
  const Point v = static_cast<Point>(h.face_count(1) + h.base_pair().second);
  const int len = 2 * h.q();
  if (!g.graph().adjacent(u, v)) return false;
  // Simple paths v -> u of length len - 1.
  std::vector<char> on_path(g.size(), 0);
  on_path[v] = 1;
  std::vector<std::pair<Point, std::size_t>> stack{{v, 0}};
  int depth = 0;
  while (!stack.empty()) {
    auto& [x, k] = stack.back();
    auto nb = g.neighbors(x);
    if (k == nb.size()) {
      on_path[x] = 0;
      stack.pop_back();
      --depth;
      continue;
    }
    Point y = nb[k++];
    if (depth + 1 == len - 1) {
      if (y == u) return true;
      continue;
    }
    if (on_path[y] || y == u) continue;
    on_path[y] = 1;
    stack.emplace_back(y, 0);
    ++depth;
  }
  return false;
}

bool diamond_condition(const StringCGroup& c) {
  const RegularGroup& g = c.group();
  std::array<std::vector<std::uint32_t>, 4> label;
  for (int j = 0; j < 4; ++j) {
    std::vector<Point> gens;
    for (int i = 0; i < 4; ++i) {
      if (i != j) gens.push_back(c.rho(i));
    }
    std::size_t count = 0, size = 0;
    label[j] = coset_labels(g, gens, &count, &size);
  }
  auto face = [&](int rank, Point x) -> std::uint32_t {
    return rank < 0 || rank > 3 ? 0 : label[rank][x];
  };
  for (int j = 0; j < 4; ++j) {
    std::map<std::pair<std::uint32_t, std::uint32_t>, std::vector<std::uint32_t>> middle;
    for (Point x = 0; x < g.order(); ++x) {
      auto& m = middle[{face(j - 1, x), face(j + 1, x)}];
      std::uint32_t f = face(j, x);
      if (std::find(m.begin(), m.end(), f) == m.end()) m.push_back(f);
    }
    for (const auto& [pair, faces] : middle) {
      if (faces.size() != 2) return false;
    }
  }
  return true;
}

}  // namespace polymedial::polytope
