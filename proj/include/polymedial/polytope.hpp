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

#ifndef POLYMEDIAL_POLYTOPE_HPP_
#define POLYMEDIAL_POLYTOPE_HPP_

#include <array>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "polymedial/cubic_graph.hpp"
#include "polymedial/regular_group.hpp"

namespace polymedial::polytope {

using perm::Point;
using perm::RegularGroup;
using GroupPtr = std::shared_ptr<const RegularGroup>;

struct SchlafliType {
  int p1 = 0, p2 = 0, p3 = 0;
  std::string to_string() const;
  friend bool operator==(const SchlafliType&, const SchlafliType&) = default;
};

// A group generated by rho0..rho3 satisfying the string Coxeter relations and
// the intersection condition. The underlying regular group has exactly these
// four generators, in order.
class StringCGroup {
 public:
  const RegularGroup& group() const { return *group_; }
  GroupPtr group_ptr() const { return group_; }
  std::size_t order() const { return group_->order(); }
  Point rho(int j) const { return group_->generator_element(j); }
  SchlafliType type() const { return type_; }

 private:
  friend StringCGroup validate_string_cgroup(GroupPtr, std::array<Point, 4>);
  GroupPtr group_;
  SchlafliType type_;
};

// The rotation subgroup data sigma1..sigma3 (chiral or directly regular).
class RotationGroup {
 public:
  const RegularGroup& group() const { return *group_; }
  GroupPtr group_ptr() const { return group_; }
  std::size_t order() const { return group_->order(); }
  Point sigma(int j) const { return group_->generator_element(j - 1); }
  SchlafliType type() const { return type_; }

 private:
  friend RotationGroup validate_rotation_group(GroupPtr, std::array<Point, 3>,
                                               std::optional<SchlafliType>);
  GroupPtr group_;
  SchlafliType type_;
};

// Checks rho_j^2 = 1, (rho_i rho_j)^2 = 1 for |i-j| > 1 and the intersection
// condition over all pairs of index sets; the elements must generate the
// group. Throws InconsistencyError naming the failing relation or pair I, J.
StringCGroup validate_string_cgroup(GroupPtr group, std::array<Point, 4> rho);
// Convenience: the elements are the group's first four generators.
StringCGroup validate_string_cgroup(GroupPtr group);

// Checks the rotation relations and the revised intersection condition.
// When `expected` is given the element orders must match it.
RotationGroup validate_rotation_group(GroupPtr group, std::array<Point, 3> sigma,
                                      std::optional<SchlafliType> expected = std::nullopt);
RotationGroup validate_rotation_group(GroupPtr group,
                                      std::optional<SchlafliType> expected = std::nullopt);

// An involution r in the rotation group itself with rho1 = r, rho0 = s1 r,
// rho2 = r s2, rho3 = r s2 s3 forming a string C-group.
std::optional<StringCGroup> reflection_recovery(const RotationGroup& r);

struct DirectRegularity {
  bool decided = true;
  bool directly_regular = false;
  // Images of every element under rho (point indices) when it exists.
  std::vector<Point> automorphism;
};
// Whether s1 -> s1^-1, s2 -> s1^2 s2, s3 -> s3 extends to an automorphism.
// Undecided above `max_order`.
DirectRegularity is_directly_regular(const RotationGroup& r, std::size_t max_order = 1'000'000);

// The full group Lambda x| <rho> with rho0 = r, rho1 = r s1, rho2 = r s1 s2,
// rho3 = r s1 s2 s3. Requires a directly regular rotation group.
StringCGroup directly_regular_extension(const RotationGroup& r, const DirectRegularity& d);

enum class Tristate { kFalse, kTrue, kUndecided };
// An automorphism with rho_j -> rho_(3-j). Undecided above `max_order`.
Tristate self_duality_test(const StringCGroup& c, std::size_t max_order = 100'000);
// An automorphism taking (s1, s2, s3) to the dual generators
// (s3^-1, s2^-1, s1^-1) or to their enantiomorphic form.
Tristate self_duality_test(const RotationGroup& r, std::size_t max_order = 100'000);

enum class Source { kPresentation, kEisenstein, kPermutations };
enum class SymmetryKind { kRegular, kChiral };

// Face data for the medial layer: element g lies in the 1-face E g and the
// 2-face F g, where E and F are the stabilizers of the base 1-face and 2-face.
class PolytopeHandle {
 public:
  static PolytopeHandle regular(const StringCGroup& c, Source source);
  static PolytopeHandle chiral(const RotationGroup& r, Source source);

  Source source() const { return source_; }
  SymmetryKind kind() const { return kind_; }
  const RegularGroup& group() const { return *group_; }
  std::size_t group_order() const { return group_->order(); }
  int q() const { return q_; }
  std::size_t stabilizer_order(int rank) const { return rank == 1 ? e_order_ : f_order_; }
  std::size_t face_count(int rank) const { return rank == 1 ? n1_ : n2_; }
  // Coset label of element g in the given rank.
  std::uint32_t face_of(int rank, Point g) const { return rank == 1 ? face1_[g] : face2_[g]; }
  // Action of group generator i on the rank-1 and rank-2 cosets.
  const std::vector<perm::Permutation>& face_action(int rank) const {
    return rank == 1 ? action1_ : action2_;
  }
  // Incident pair of the identity element: always (0, 0).
  std::pair<std::uint32_t, std::uint32_t> base_pair() const { return {face1_[0], face2_[0]}; }

  // Generator actions on the medial graph vertices (rank-1 faces first).
  std::vector<perm::Permutation> graph_action() const;

 private:
  void build(const std::vector<Point>& e_gens, const std::vector<Point>& f_gens);

  Source source_ = Source::kPresentation;
  SymmetryKind kind_ = SymmetryKind::kRegular;
  GroupPtr group_;
  int q_ = 0;
  std::size_t e_order_ = 0, f_order_ = 0;
  std::size_t n1_ = 0, n2_ = 0;
  std::vector<std::uint32_t> face1_, face2_;
  std::vector<perm::Permutation> action1_, action2_;
};

// Vertices: rank-1 cosets (type 1) then rank-2 cosets (type 2); adjacency is
// the orbit of the base pair. Throws InconsistencyError unless the result is a
// connected bipartite cubic graph.
graph::BipartiteCubicGraph medial_layer_graph(const PolytopeHandle& h);

// Whether a cycle of length 2q passes through the base edge.
bool has_section_cycle(const PolytopeHandle& h, const graph::BipartiteCubicGraph& g);

// Diamond condition on all ranks for a string C-group: every incident pair of
// faces of ranks j-1 and j+1 has exactly two faces of rank j between them.
bool diamond_condition(const StringCGroup& c);

}  // namespace polymedial::polytope

#endif  // POLYMEDIAL_POLYTOPE_HPP_
