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


// Table rows for instance builds and classifications.

#ifndef POLYMEDIAL_REPORT_HPP_
#define POLYMEDIAL_REPORT_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "polymedial/automorphism.hpp"
#include "polymedial/classify.hpp"
#include "polymedial/instances.hpp"

namespace polymedial::report {

// Process exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitUndecided = 2;
inline constexpr int kExitValidation = 3;
inline constexpr int kExitBadInput = 4;

struct Row {
  std::string key;
  std::string s;  // s, or m for Eisenstein keys
  std::string t;  // t, or the generators of A for Eisenstein keys
  std::optional<std::uint64_t> group_order;
  std::optional<std::size_t> vertices;
  std::string verdict;  // classification, "built", "undecided", "overflow" or "error"
  std::optional<std::uint64_t> aut_order;
  double seconds = 0;
  int exit_code = kExitOk;
  std::string note;  // reason for undecided, overflow or error verdicts
  std::optional<graph::Classification> classification;
  std::optional<instances::Instance> instance;
};

struct RowOptions {
  instances::Limits limits;
  graph::SearchLimits search;
  bool classify = true;
  // When set the classification is skipped and reported undecided.
  std::string gate;
};

// Builds (and classifies) one instance; errors become rows, never exceptions.
Row run_instance(const instances::InstanceKey& key, const RowOptions& options);
// Classifies an imported graph whose types carry no polytope meaning.
Row run_graph(std::string name, const graph::BipartiteCubicGraph& g, const RowOptions& options);

enum class Format { kCsv, kMarkdown };

inline const std::vector<std::string>& columns() {
  static const std::vector<std::string> c = {"key", "s", "t", "group_order", "N",
                                             "verdict", "aut_order", "seconds"};
  return c;
}

// With `timing` false the seconds column reads "-" so output is reproducible.
std::string render(const std::vector<Row>& rows, Format format, bool timing = true);
std::string csv_field(std::string_view s);

}  // namespace polymedial::report

#endif  // POLYMEDIAL_REPORT_HPP_
