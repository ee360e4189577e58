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


// Text formats for bipartite cubic graphs: adjacency lists, DOT and graph6.

#ifndef POLYMEDIAL_GRAPH_IO_HPP_
#define POLYMEDIAL_GRAPH_IO_HPP_

#include <string>
#include <string_view>

#include "polymedial/cubic_graph.hpp"

namespace polymedial::graph {

// One line per vertex: "id type: n1 n2 n3". Blank lines and lines starting
// with '#' are ignored on input. Throws DomainError on malformed text and on
// graphs that are not bipartite cubic.
std::string write_adjacency(const BipartiteCubicGraph& g);
BipartiteCubicGraph read_adjacency(std::string_view text);

// Undirected DOT; type 1 vertices are circles and type 2 vertices are boxes.
std::string write_dot(const BipartiteCubicGraph& g, std::string_view name = "medial");

// Standard graph6 encoding (no header, no trailing newline).
std::string write_graph6(const Graph& g);
Graph read_graph6(std::string_view text);

}  // namespace polymedial::graph

#endif  // POLYMEDIAL_GRAPH_IO_HPP_
