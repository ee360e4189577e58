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


#include "polymedial/instances.hpp"

#include <chrono>

#include "polymedial/error.hpp"
#include "polymedial/fpgroup.hpp"
#include "polymedial/matgroup.hpp"

namespace polymedial::instances {

namespace {

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  for (;;) {
    auto i = s.find(sep);
    out.push_back(s.substr(0, i));
    if (i == std::string_view::npos) return out;
    s.remove_prefix(i + 1);
  }
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
  while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
  return s;
}

bool power_of_two(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }

const char* tristate_name(polytope::Tristate t) {
  switch (t) {
    case polytope::Tristate::kTrue:
      return "yes";
    case polytope::Tristate::kFalse:
      return "no";
    case polytope::Tristate::kUndecided:
      break;
  }
  return "undecided";
}

using Clock = std::chrono::steady_clock;

double since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::optional<double> remaining(const Limits& limits, Clock::time_point t0) {
  if (!limits.time_budget_seconds) return std::nullopt;
  return std::max(0.0, *limits.time_budget_seconds - since(t0));
}

// Coset enumeration over the trivial subgroup; nullopt on overflow.
std::optional<polytope::GroupPtr> enumerate(const fp::Presentation& p, const Limits& limits,
                                            Clock::time_point t0, std::string& reason) {
  auto table = fp::coset_enumeration(p, {}, {limits.max_cosets, remaining(limits, t0)});
  if (!table.complete()) {
    reason = "coset enumeration: " + table.reason();
    return std::nullopt;
  }
  return std::make_shared<const perm::RegularGroup>(table.permutations());
}

void attach_graph(Instance& inst, const polytope::PolytopeHandle& h) {
  inst.graph = polytope::medial_layer_graph(h);
  inst.graph_action = h.graph_action();
  inst.checks.push_back("medial layer graph bipartite cubic, N = " +
                        std::to_string(inst.graph->size()));
  if (!polytope::has_section_cycle(h, *inst.graph)) {
    throw InconsistencyError("no " + std::to_string(2 * h.q()) + "-cycle through the base edge");
  }
  inst.checks.push_back(std::to_string(2 * h.q()) + "-cycle through the base edge");
}

BuildResult build_universal(const InstanceKey& key, const Limits& limits, Clock::time_point t0) {
  BuildResult out;
  fp::Presentation p = key.kind == KeyKind::kP1296
                           ? catalog::simplex_toroidal_1296()
                           : catalog::universal_locally_toroidal(key.s, key.t);
  auto g = enumerate(p, limits, t0, out.reason);
  if (!g) return out;
  Instance inst;
  inst.key = key;
  auto c = polytope::validate_string_cgroup(*g);
  inst.checks.push_back("string C-group, intersection condition holds");
  inst.type = c.type();
  inst.group_order = c.order();
  const auto& G = c.group();
  std::vector<perm::Point> sigma{G.multiply(c.rho(0), c.rho(1)), G.multiply(c.rho(1), c.rho(2)),
                           G.multiply(c.rho(2), c.rho(3))};
  inst.rotation_order = G.subgroup_elements(sigma).size();
  inst.directly_regular = *inst.rotation_order * 2 == inst.group_order;
  inst.self_dual = polytope::self_duality_test(c);
  inst.checks.push_back(std::string("self-dual: ") + tristate_name(inst.self_dual));
  if (c.type().p1 == 3 && c.type().p3 == 3) {
    attach_graph(inst, polytope::PolytopeHandle::regular(c, polytope::Source::kPresentation));
  }
  out.status = BuildStatus::kBuilt;
  out.instance = std::move(inst);
  return out;
}

BuildResult build_eisenstein(const InstanceKey& key, const Limits& limits) {
  BuildResult out;
  const auto m = key.m;
  if (m.norm() % 3 != 0 || m.norm() / 3 <= 1) {
    throw DomainError("norm of m must be 3k with k > 1, got " + std::to_string(m.norm()));
  }
  eisenstein::ResidueRing ring(m);
  auto scalars = eisenstein::scalar_subgroup(ring, key.a_gens);
  if (!power_of_two(scalars.order())) {
    throw DomainError("scalar group has order " + std::to_string(scalars.order()) +
                      ", not a power of 2");
  }
  auto gens = matgroup::find_generators(ring);
  auto mg = matgroup::generate_group(ring, scalars, gens, limits.max_elements);
  if (!mg.complete) {
    out.reason = "matrix group: " + mg.reason;
    return out;
  }
  Instance inst;
  inst.key = key;
  auto group = std::make_shared<const perm::RegularGroup>(std::move(mg.cayley));
  auto r = polytope::validate_rotation_group(group, polytope::SchlafliType{3, 6, 3});
  inst.checks.push_back("rotation relations and intersection condition hold");
  inst.type = r.type();
  inst.rotation_order = r.order();
  const auto expected = matgroup::regularity_test(m, scalars);
  auto direct = polytope::is_directly_regular(r);
  if (!direct.decided) throw InconsistencyError("direct regularity undecided");
  inst.directly_regular = direct.directly_regular;
  inst.predicted_vertices = eisenstein::vertex_count(m, scalars);
  if (expected == matgroup::Symmetry::kRegular) {
    if (!direct.directly_regular) {
      throw InconsistencyError("regularity criterion holds but no reflection extends the group");
    }
    auto c = polytope::directly_regular_extension(r, direct);
    inst.checks.push_back("regular: extension by a reflection is a string C-group");
    inst.group_order = c.order();
    inst.self_dual = polytope::self_duality_test(c);
    attach_graph(inst, polytope::PolytopeHandle::regular(c, polytope::Source::kEisenstein));
  } else {
    if (direct.directly_regular) {
      throw InconsistencyError("regularity criterion fails but a reflection extends the group");
    }
    inst.kind = polytope::SymmetryKind::kChiral;
    inst.checks.push_back("chiral: no reflection extends the rotation group");
    inst.group_order = r.order();
    inst.self_dual = polytope::self_duality_test(r);
    attach_graph(inst, polytope::PolytopeHandle::chiral(r, polytope::Source::kEisenstein));
  }
  inst.checks.push_back(std::string("self-dual: ") + tristate_name(inst.self_dual));
  if (static_cast<std::int64_t>(inst.graph->size()) != *inst.predicted_vertices) {
    throw InconsistencyError("graph has " + std::to_string(inst.graph->size()) +
                             " vertices, formula gives " +
                             std::to_string(*inst.predicted_vertices));
  }
  inst.checks.push_back("vertex count matches the formula");
  out.status = BuildStatus::kBuilt;
  out.instance = std::move(inst);
  return out;
}

}  // namespace

InstanceKey InstanceKey::parse(std::string_view text) {
  text = trim(text);
  auto parts = split(text, ':');
  InstanceKey k;
  if (parts[0] == "p1296") {
    if (parts.size() != 1) throw DomainError("key 'p1296' takes no parameters");
    k.kind = KeyKind::kP1296;
    return k;
  }
  if (parts[0] == "universal") {
    if (parts.size() != 4) throw DomainError("expected universal:3,6:<s>:<t>");
    if (trim(parts[1]) != "3,6") {
      throw DomainError("only the {3,6} family is supported, got '" + std::string(parts[1]) + "'");
    }
    k.kind = KeyKind::kUniversal;
    k.s = catalog::ToroidalParams::parse(parts[2]);
    k.t = catalog::ToroidalParams::parse(parts[3]);
    for (auto p : {k.s, k.t}) {
      if (!p.regular_form()) {
        throw DomainError("toroidal parameters " + p.to_string() + " are not of regular form");
      }
      if (p.v() <= 1) throw DomainError("toroidal parameters need s^2 + st + t^2 > 1");
    }
    return k;
  }
  if (parts[0] == "eisenstein") {
    k.kind = KeyKind::kEisenstein;
    bool have_m = false;
    for (std::size_t i = 1; i < parts.size(); ++i) {
      auto f = trim(parts[i]);
      if (f.starts_with("m=")) {
        k.m = eisenstein::parse(f.substr(2));
        have_m = true;
      } else if (f.starts_with("A=")) {
        for (auto g : split(f.substr(2), ',')) {
          g = trim(g);
          if (!g.empty()) k.a_gens.push_back(eisenstein::parse(g));
        }
      } else {
        throw DomainError("unknown eisenstein key field '" + std::string(f) + "'");
      }
    }
    if (!have_m) throw DomainError("eisenstein key needs m=<expr>");
    if (k.m.is_zero()) throw DomainError("m must be nonzero");
    return k;
  }
  throw DomainError("unknown instance key '" + std::string(text) + "'");
}

std::string InstanceKey::to_string() const {
  switch (kind) {
    case KeyKind::kP1296:
      return "p1296";
    case KeyKind::kUniversal:
      return "universal:3,6:" + std::to_string(s.s) + "," + std::to_string(s.t) + ":" +
             std::to_string(t.s) + "," + std::to_string(t.t);
    case KeyKind::kEisenstein:
      break;
  }
  return "eisenstein:m=" + eisenstein::to_string(m) + ":A=" + second_param();
}

std::string InstanceKey::first_param() const {
  switch (kind) {
    case KeyKind::kUniversal:
      return s.to_string();
    case KeyKind::kEisenstein:
      return eisenstein::to_string(m);
    case KeyKind::kP1296:
      break;
  }
  return "";
}

std::string InstanceKey::second_param() const {
  switch (kind) {
    case KeyKind::kUniversal:
      return t.to_string();
    case KeyKind::kEisenstein: {
      std::string out;
      for (std::size_t i = 0; i < a_gens.size(); ++i) {
        if (i) out += ",";
        out += eisenstein::to_string(a_gens[i]);
      }
      return out;
    }
    case KeyKind::kP1296:
      break;
  }
  return "";
}

BuildResult build(const InstanceKey& key, const Limits& limits) {
  const auto t0 = Clock::now();
  BuildResult out = key.kind == KeyKind::kEisenstein ? build_eisenstein(key, limits)
                                                     : build_universal(key, limits, t0);
  out.seconds = since(t0);
  return out;
}

std::vector<InstanceKey> table1_keys() {
  std::vector<InstanceKey> out;
  for (auto text : {"universal:3,6:1,1:1,1", "universal:3,6:1,1:3,0", "universal:3,6:2,0:2,0",
                    "universal:3,6:2,0:2,2", "universal:3,6:3,0:3,0", "universal:3,6:3,0:2,2",
                    "universal:3,6:3,0:4,0"}) {
    out.push_back(InstanceKey::parse(text));
  }
  return out;
}

}  // namespace polymedial::instances
