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


// Command-line interface: build, classify, table1 and gray-verify.

#include <CLI11.hpp>

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include "polymedial/automorphism.hpp"
#include "polymedial/catalog.hpp"
#include "polymedial/classify.hpp"
#include "polymedial/error.hpp"
#include "polymedial/fpgroup.hpp"
#include "polymedial/graph_io.hpp"
#include "polymedial/instances.hpp"
#include "polymedial/kernels.hpp"
#include "polymedial/matgroup.hpp"
#include "polymedial/report.hpp"

namespace {

using namespace polymedial;
using report::kExitBadInput;
using report::kExitOk;
using report::kExitUndecided;
using report::kExitValidation;

struct Settings {
  std::size_t max_cosets = 10'000'000;
  std::size_t max_elements = 2'000'000;
  std::size_t max_vertices = 10'000;
  double time_budget = 0;
  bool extended = false;
  int jobs = 1;
  std::string format;
  bool no_timing = false;
};

report::RowOptions row_options(const Settings& s) {
  report::RowOptions o;
  o.limits.max_cosets = s.max_cosets;
  o.limits.max_elements = s.max_elements;
  double budget = s.time_budget > 0 ? s.time_budget : (s.extended ? 7200.0 : 0.0);
  if (budget > 0) {
    o.limits.time_budget_seconds = budget;
    o.search.time_budget_seconds = budget;
  }
  o.search.max_vertices = s.max_vertices;
  return o;
}

report::Format table_format(const std::string& f) {
  if (f.empty() || f == "csv") return report::Format::kCsv;
  if (f == "md") return report::Format::kMarkdown;
  throw DomainError("tables are written as csv or md, not " + f);
}

int worst(const std::vector<report::Row>& rows) {
  int code = kExitOk;
  for (const auto& r : rows) code = std::max(code, r.exit_code);
  return code;
}

void print_notes(const std::vector<report::Row>& rows) {
  for (const auto& r : rows) {
    if (!r.note.empty()) std::cerr << r.key << ": " << r.note << '\n';
  }
}

const char* yes_no(polytope::Tristate t) {
  return t == polytope::Tristate::kTrue ? "yes" : t == polytope::Tristate::kFalse ? "no" : "undecided";
}

std::string graph_text(const graph::BipartiteCubicGraph& g, const std::string& format) {
  if (format == "adj") return graph::write_adjacency(g);
  if (format == "dot") return graph::write_dot(g);
  if (format == "graph6") return graph::write_graph6(g.graph()) + "\n";
  throw DomainError("unknown graph format " + format);
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw DomainError("cannot write " + path);
  out << text;
}

int cmd_build(const Settings& s, const std::string& key_text, const std::string& coset_csv,
              const std::string& elements_path) {
  auto key = instances::InstanceKey::parse(key_text);
  auto options = row_options(s);
  options.classify = false;
  auto row = report::run_instance(key, options);
  if (row.exit_code != kExitOk) {
    std::cout << "key: " << row.key << "\n" << row.verdict << ": " << row.note << '\n';
    return row.exit_code;
  }
  const auto& inst = *row.instance;
  if (!coset_csv.empty() && key.kind != instances::KeyKind::kEisenstein) {
    auto p = key.kind == instances::KeyKind::kP1296
                 ? catalog::simplex_toroidal_1296()
                 : catalog::universal_locally_toroidal(key.s, key.t);
    auto table = fp::coset_enumeration(p, {}, {s.max_cosets, options.limits.time_budget_seconds});
    if (!table.complete()) throw DomainError("coset table overflow: " + table.reason());
    write_file(coset_csv, table.to_csv(p));
  }
  if (!elements_path.empty() && key.kind == instances::KeyKind::kEisenstein) {
    eisenstein::ResidueRing ring(key.m);
    auto scalars = eisenstein::scalar_subgroup(ring, key.a_gens);
    auto mg = matgroup::generate_group(ring, scalars, matgroup::find_generators(ring),
                                       s.max_elements);
    std::string text;
    for (const auto& e : mg.elements) text += matgroup::to_string(ring, e.matrix()) + "\n";
    write_file(elements_path, text);
  }
  if (s.format == "csv" || s.format == "md") {
    std::cout << report::render({row}, table_format(s.format), !s.no_timing);
    return kExitOk;
  }
  if (!s.format.empty()) {
    if (!inst.graph) throw DomainError("this instance has no medial layer graph");
    std::cout << graph_text(*inst.graph, s.format);
    return kExitOk;
  }
  std::cout << "key: " << row.key << '\n';
  if (key.kind == instances::KeyKind::kEisenstein) {
    std::cout << "m: " << eisenstein::to_string(key.m) << " = "
              << eisenstein::to_string(eisenstein::factor(key.m)) << '\n';
    std::cout << "A generators: " << (row.t.empty() ? "(none)" : row.t) << '\n';
  } else {
    auto p = key.kind == instances::KeyKind::kP1296
                 ? catalog::simplex_toroidal_1296()
                 : catalog::universal_locally_toroidal(key.s, key.t);
    std::cout << "presentation: " << p.to_string() << '\n';
  }
  std::cout << "type: " << inst.type.to_string() << '\n';
  std::cout << "symmetry: "
            << (inst.kind == polytope::SymmetryKind::kRegular ? "regular" : "chiral") << '\n';
  std::cout << "group_order: " << inst.group_order << '\n';
  if (inst.rotation_order) std::cout << "rotation_order: " << *inst.rotation_order << '\n';
  std::cout << "directly_regular: " << (inst.directly_regular ? "yes" : "no") << '\n';
  std::cout << "self_dual: " << yes_no(inst.self_dual) << '\n';
  if (inst.graph) std::cout << "N: " << inst.graph->size() << '\n';
  if (inst.predicted_vertices) std::cout << "N_formula: " << *inst.predicted_vertices << '\n';
  for (const auto& c : inst.checks) std::cout << "check: " << c << '\n';
  if (!s.no_timing) std::printf("seconds: %.3f\n", row.seconds);
  return kExitOk;
}

bool looks_like_key(const std::string& arg) {
  return arg == "p1296" || arg.starts_with("universal:") || arg.starts_with("eisenstein:");
}

int cmd_classify(const Settings& s, const std::string& arg, bool show_generators) {
  auto format = table_format(s.format);
  auto options = row_options(s);
  report::Row row;
  if (looks_like_key(arg)) {
    row = report::run_instance(instances::InstanceKey::parse(arg), options);
  } else {
    std::ifstream in(arg);
    if (!in) throw DomainError("cannot read " + arg + " (neither a key nor a file)");
    std::stringstream buf;
    buf << in.rdbuf();
    std::string text = buf.str();
    auto g = text.find(':') != std::string::npos
                 ? graph::read_adjacency(text)
                 : graph::BipartiteCubicGraph::from_graph(graph::read_graph6(text));
    row = report::run_graph(arg, g, options);
  }
  std::cout << report::render({row}, format, !s.no_timing);
  print_notes({row});
  if (row.classification && row.classification->verdict != graph::Verdict::kUndecided) {
    const auto& c = *row.classification;
    std::cerr << "vertex_orbits: " << c.vertex_orbits << ", edge_orbits: " << c.edge_orbits;
    if (!c.stabilizer_orders.empty()) {
      std::cerr << ", stabilizers:";
      for (auto b : c.stabilizer_orders) std::cerr << ' ' << b;
    }
    std::cerr << '\n';
  }
  if (show_generators && row.vertices && row.exit_code == kExitOk) {
    const graph::BipartiteCubicGraph& g = *row.instance->graph;
    auto aut = graph::automorphism_group(g, options.search);
    for (const auto& p : aut.generators) std::cout << p.to_cycle_string() << '\n';
  }
  return row.exit_code;
}

int cmd_table1(const Settings& s) {
  auto format = table_format(s.format);
  auto keys = instances::table1_keys();
  auto base = row_options(s);
  std::vector<report::Row> rows(keys.size());
  auto run = [&](std::size_t i) {
    auto o = base;
    if (i == 5 && !s.extended) o.gate = "classification of the 6912-vertex row needs --extended";
    rows[i] = report::run_instance(keys[i], o);
  };
  const int jobs = std::max(1, s.jobs);
  if (jobs == 1) {
    for (std::size_t i = 0; i < keys.size(); ++i) run(i);
  } else {
    kernels::set_threads(1);
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    for (int j = 0; j < jobs; ++j) {
      pool.emplace_back([&] {
        for (std::size_t i; (i = next++) < keys.size();) run(i);
      });
    }
    for (auto& t : pool) t.join();
  }
  std::cout << report::render(rows, format, !s.no_timing);
  print_notes(rows);
  // Undecided rows are part of the expected table; only failures count.
  int code = worst(rows);
  return code == kExitUndecided ? kExitOk : code;
}

std::uint64_t fnv1a(std::string_view s) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

int cmd_gray_verify(const Settings& s) {
  auto options = row_options(s);
  bool ok = true;
  auto check = [&](bool cond, const std::string& what) {
    std::cout << (cond ? "ok: " : "FAILED: ") << what << '\n';
    ok = ok && cond;
  };
  auto key = instances::InstanceKey::parse("eisenstein:m=3:A=");
  auto built = instances::build(key, options.limits);
  if (built.status != instances::BuildStatus::kBuilt) {
    std::cout << "overflow: " << built.reason << '\n';
    return kExitUndecided;
  }
  const auto& inst = *built.instance;
  const auto& g3 = *inst.graph;
  auto gray = graph::gray_oracle();
  check(g3.size() == 54 && gray.size() == 54, "both graphs have 54 vertices");

  auto iso = graph::find_isomorphism(g3.graph(), gray.graph(), options.search);
  if (!iso.decided) {
    std::cout << "undecided: " << iso.reason << '\n';
    return kExitUndecided;
  }
  bool mapped = iso.isomorphic;
  if (mapped) {
    const auto& m = *iso.mapping;
    for (auto [u, v] : g3.graph().edges()) mapped = mapped && gray.graph().adjacent(m[u], m[v]);
  }
  check(mapped, "medial layer graph of Q_3 is isomorphic to the cubelet-column graph");
  if (iso.mapping) {
    auto line = iso.mapping->to_one_line();
    char digest[17];
    std::snprintf(digest, sizeof digest, "%016llx", static_cast<unsigned long long>(fnv1a(line)));
    std::cout << "witness: " << line << '\n';
    std::cout << "witness_digest: fnv1a64:" << digest << '\n';
  }

  auto aut3 = graph::automorphism_group(g3, options.search);
  auto autg = graph::automorphism_group(gray, options.search);
  if (!aut3.decided || !autg.decided) {
    std::cout << "undecided: automorphism search\n";
    return kExitUndecided;
  }
  check(aut3.order == 1296, "|Aut(G_3)| = " + std::to_string(aut3.order));
  check(autg.order == 1296, "|Aut(gray oracle)| = " + std::to_string(autg.order));
  auto c3 = graph::classify(g3, aut3, true);
  auto cg = graph::classify(gray, autg, false);
  check(c3.verdict == graph::Verdict::kSemisymmetric, "G_3 verdict " + c3.to_string());
  check(cg.verdict == graph::Verdict::kSemisymmetric, "gray oracle verdict " + cg.to_string());
  check(inst.group_order == 324, "|H_3| = " + std::to_string(inst.group_order));
  const bool divides = inst.group_order && aut3.order % inst.group_order == 0;
  std::uint64_t index = divides ? aut3.order / inst.group_order : 0;
  check(index == 4, "index |Aut(G_3)| / |H_3| = " + std::to_string(index));
  auto p = instances::build(instances::InstanceKey::parse("p1296"), options.limits);
  if (p.status == instances::BuildStatus::kBuilt) {
    check(p.instance->group_order == aut3.order,
          "|Aut(G_3)| equals the order " + std::to_string(p.instance->group_order) +
              " of {{3,3},{3,6}_(3,0)}");
  }
  return ok ? kExitOk : kExitValidation;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Medial layer graphs of {3,q,3} polytopes"};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_config("--config", "", "key=value file with option defaults");
  Settings s;
  app.add_option("--max-cosets", s.max_cosets, "coset table row limit")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  app.add_option("--max-elements", s.max_elements, "matrix group element limit")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  app.add_option("--max-vertices", s.max_vertices, "automorphism search vertex cap")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  app.add_option("--time-budget", s.time_budget, "seconds per stage (0: none)")
      ->check(CLI::NonNegativeNumber);
  app.add_flag("--extended", s.extended, "attempt the 6912-vertex table row");
  app.add_option("--jobs", s.jobs, "table rows run in parallel")->check(CLI::PositiveNumber);
  app.add_option("--format", s.format, "csv, md, dot, adj or graph6")
      ->check(CLI::IsMember({"csv", "md", "dot", "adj", "graph6"}));
  app.add_flag("--no-timing", s.no_timing, "write '-' for elapsed seconds");

  std::string build_key, coset_csv, elements_path;
  auto* build = app.add_subcommand("build", "construct an instance and its medial layer graph");
  build->add_option("key", build_key, "instance key")->required();
  build->add_option("--coset-table", coset_csv, "write the coset table as CSV");
  build->add_option("--elements", elements_path, "write matrix group elements");

  std::string classify_arg;
  bool show_generators = false;
  auto* classify = app.add_subcommand("classify", "classify a medial layer graph");
  classify->add_option("source", classify_arg, "instance key or graph file (adj or graph6)")
      ->required();
  classify->add_flag("--show-generators", show_generators,
                     "print automorphism generators in cycle notation");

  auto* table1 = app.add_subcommand("table1", "classify the seven known finite {3,6,3} instances");
  auto* gray = app.add_subcommand("gray-verify", "verify the Gray graph identification");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitBadInput;
  }

  try {
    if (*build) return cmd_build(s, build_key, coset_csv, elements_path);
    if (*classify) return cmd_classify(s, classify_arg, show_generators);
    if (*table1) return cmd_table1(s);
    if (*gray) return cmd_gray_verify(s);
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitBadInput;
  } catch (const std::exception& e) {
    std::cerr << "validation failed: " << e.what() << '\n';
    return kExitValidation;
  }
  return kExitBadInput;
}
