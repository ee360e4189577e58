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


#include "polymedial/report.hpp"

#include <chrono>
#include <cstdio>
#include <sstream>

#include "polymedial/error.hpp"

namespace polymedial::report {

namespace {

using Clock = std::chrono::steady_clock;

double since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

void fill_classification(Row& row, const graph::BipartiteCubicGraph& g, bool ordered,
                         const RowOptions& options) {
  if (!options.gate.empty()) {
    row.verdict = "undecided";
    row.note = options.gate;
    row.exit_code = kExitUndecided;
    return;
  }
  auto aut = graph::automorphism_group(g, options.search);
  auto c = graph::classify(g, aut, ordered);
  row.verdict = c.to_string();
  if (c.verdict == graph::Verdict::kUndecided) {
    row.note = c.reason;
    row.exit_code = kExitUndecided;
  } else {
    row.aut_order = c.aut_order;
  }
  row.classification = std::move(c);
}

template <class F>
void guarded(Row& row, F&& f) {
  try {
    f();
  } catch (const DomainError& e) {
    row.verdict = "error";
    row.note = e.what();
    row.exit_code = kExitBadInput;
  } catch (const std::exception& e) {
    row.verdict = "error";
    row.note = e.what();
    row.exit_code = kExitValidation;
  }
}

std::string number(const std::optional<std::uint64_t>& x) {
  return x ? std::to_string(*x) : std::string();
}

}  // namespace

Row run_instance(const instances::InstanceKey& key, const RowOptions& options) {
  const auto t0 = Clock::now();
  Row row;
  row.key = key.to_string();
  row.s = key.first_param();
  row.t = key.second_param();
  guarded(row, [&] {
    auto built = instances::build(key, options.limits);
    if (built.status == instances::BuildStatus::kOverflow) {
      row.verdict = "overflow";
      row.note = built.reason;
      row.exit_code = kExitUndecided;
      return;
    }
    const auto& inst = *built.instance;
    row.group_order = inst.group_order;
    row.verdict = "built";
    if (inst.graph) {
      row.vertices = inst.graph->size();
      if (options.classify) fill_classification(row, *inst.graph, true, options);
    }
    row.instance = std::move(built.instance);
  });
  row.seconds = since(t0);
  return row;
}

Row run_graph(std::string name, const graph::BipartiteCubicGraph& g, const RowOptions& options) {
  const auto t0 = Clock::now();
  Row row;
  row.key = std::move(name);
  row.vertices = g.size();
  guarded(row, [&] { fill_classification(row, g, false, options); });
  row.seconds = since(t0);
  return row;
}

std::string csv_field(std::string_view s) {
  if (s.find_first_of(",\"\n") == std::string_view::npos) return std::string(s);
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

std::string render(const std::vector<Row>& rows, Format format, bool timing) {
  std::ostringstream out;
  auto cells = [&](const Row& r) {
    char secs[32];
    std::snprintf(secs, sizeof secs, "%.3f", r.seconds);
    std::vector<std::string> v = {r.key,
                                  r.s,
                                  r.t,
                                  number(r.group_order),
                                  r.vertices ? std::to_string(*r.vertices) : std::string(),
                                  r.verdict,
                                  number(r.aut_order),
                                  timing ? std::string(secs) : std::string("-")};
    return v;
  };
  if (format == Format::kCsv) {
    for (std::size_t i = 0; i < columns().size(); ++i) out << (i ? "," : "") << columns()[i];
    out << '\n';
    for (const auto& r : rows) {
      auto v = cells(r);
      for (std::size_t i = 0; i < v.size(); ++i) out << (i ? "," : "") << csv_field(v[i]);
      out << '\n';
    }
    return out.str();
  }
  out << '|';
  for (const auto& c : columns()) out << ' ' << c << " |";
  out << "\n|";
  for (std::size_t i = 0; i < columns().size(); ++i) out << "---|";
  out << '\n';
  for (const auto& r : rows) {
    out << '|';
    for (const auto& c : cells(r)) out << ' ' << c << " |";
    out << '\n';
  }
  return out.str();
}

}  // namespace polymedial::report
