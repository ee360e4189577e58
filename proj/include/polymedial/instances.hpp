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


// Instance keys and the pipeline from group data to medial layer graph.

#ifndef POLYMEDIAL_INSTANCES_HPP_
#define POLYMEDIAL_INSTANCES_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "polymedial/catalog.hpp"
#include "polymedial/cubic_graph.hpp"
#include "polymedial/eisenstein.hpp"
#include "polymedial/polytope.hpp"

namespace polymedial::instances {

struct Limits {
  std::size_t max_cosets = 10'000'000;
  std::size_t max_elements = 2'000'000;
  std::optional<double> time_budget_seconds;
};

enum class KeyKind { kUniversal, kP1296, kEisenstein };

// "universal:3,6:<s>:<t>", "p1296" or "eisenstein:m=<expr>:A=<gens>" where
// <gens> is a comma-separated list of Eisenstein integers (empty: A = {1,-1}).
struct InstanceKey {
  KeyKind kind = KeyKind::kUniversal;
  catalog::ToroidalParams s, t;
  eisenstein::EisensteinInt m;
  std::vector<eisenstein::EisensteinInt> a_gens;

  // Throws DomainError on malformed or unsupported keys.
  static InstanceKey parse(std::string_view text);
  std::string to_string() const;
  // Table columns for the instance parameters: (s, t) or (m, A).
  std::string first_param() const;
  std::string second_param() const;
};

struct Instance {
  InstanceKey key;
  polytope::SchlafliType type;
  polytope::SymmetryKind kind = polytope::SymmetryKind::kRegular;
  // Full automorphism group of a regular polytope, rotation group of a chiral
  // one.
  std::uint64_t group_order = 0;
  std::optional<std::uint64_t> rotation_order;
  polytope::Tristate self_dual = polytope::Tristate::kUndecided;
  bool directly_regular = false;
  // Medial layer graph, absent when the polytope is not of type {3,q,3}.
  std::optional<graph::BipartiteCubicGraph> graph;
  // Action of the polytope group generators on the graph vertices.
  std::vector<perm::Permutation> graph_action;
  std::optional<std::int64_t> predicted_vertices;
  std::vector<std::string> checks;  // passed validation steps
};

enum class BuildStatus { kBuilt, kOverflow };

struct BuildResult {
  BuildStatus status = BuildStatus::kOverflow;
  std::string reason;  // set on overflow
  std::optional<Instance> instance;
  double seconds = 0;
};

// Bad input raises DomainError; failed validation raises InconsistencyError
// or ConfigurationError.
BuildResult build(const InstanceKey& key, const Limits& limits = {});

// Parameter pairs of the seven known finite {3,6,3} instances, in row order.
std::vector<InstanceKey> table1_keys();

}  // namespace polymedial::instances

#endif  // POLYMEDIAL_INSTANCES_HPP_
