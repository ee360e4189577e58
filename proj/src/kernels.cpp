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

#include "polymedial/kernels.hpp"

#include <omp.h>

#include <algorithm>
#include <atomic>

namespace polymedial::kernels {
namespace {

std::atomic<int> g_threads{1};

Point apply_word(std::span<const Permutation> gens, std::span<const Permutation> inv,
                 const Word& w, Point p) {
  for (int l : w) p = l >= 0 ? gens[l][p] : inv[-1 - l][p];
  return p;
}

std::vector<Permutation> inverses(std::span<const Permutation> gens) {
  std::vector<Permutation> out;
  for (const auto& g : gens) out.push_back(g.inverse());
  return out;
}

bool adjacent(std::span<const Point> nb, Point a, Point b) {
  return nb[3 * a] == b || nb[3 * a + 1] == b || nb[3 * a + 2] == b;
}

std::uint64_t walks_from(std::span<const Point> nb, Point v, int t) {
  // Depth-first over non-backtracking walks; 3 * 2^(t-1) in a simple cubic graph.
  struct Frame {
    Point prev, cur;
    int depth;
  };
  std::vector<Frame> stack{{UINT32_MAX, v, 0}};
  std::uint64_t count = 0;
  while (!stack.empty()) {
    Frame f = stack.back();
    stack.pop_back();
    if (f.depth == t) {
      ++count;
      continue;
    }
    for (int k = 0; k < 3; ++k) {
      Point w = nb[3 * f.cur + k];
      if (w != f.prev) stack.push_back({f.cur, w, f.depth + 1});
    }
  }
  return count;
}

}  // namespace

void set_threads(int n) {
  n = std::max(1, n);
  g_threads = n;
  omp_set_num_threads(n);
}

int threads() { return g_threads; }

bool cayley_consistent_serial(std::span<const Permutation> gens,
                              std::span<const Permutation> right, std::span<const Point> phi) {
  for (std::size_t i = 0; i < gens.size(); ++i) {
    for (std::size_t p = 0; p < phi.size(); ++p) {
      if (phi[gens[i][p]] != right[i][phi[p]]) return false;
    }
  }
  return true;
}

bool cayley_consistent_parallel(std::span<const Permutation> gens,
                                std::span<const Permutation> right, std::span<const Point> phi) {
  const auto n = static_cast<std::int64_t>(phi.size());
  bool ok = true;
#pragma omp parallel for schedule(static) reduction(&& : ok)
  for (std::int64_t p = 0; p < n; ++p) {
    for (std::size_t i = 0; i < gens.size(); ++i) {
      ok = ok && phi[gens[i][p]] == right[i][phi[p]];
    }
  }
  return ok;
}

bool cayley_consistent(std::span<const Permutation> gens, std::span<const Permutation> right,
                       std::span<const Point> phi) {
  return threads() > 1 ? cayley_consistent_parallel(gens, right, phi)
                       : cayley_consistent_serial(gens, right, phi);
}

bool relators_trivial_serial(std::span<const Permutation> gens, std::span<const Word> relators) {
  if (gens.empty()) return true;
  auto inv = inverses(gens);
  const std::size_t n = gens[0].degree();
  for (const auto& r : relators) {
    for (Point p = 0; p < n; ++p) {
      if (apply_word(gens, inv, r, p) != p) return false;
    }
  }
  return true;
}

bool relators_trivial_parallel(std::span<const Permutation> gens,
                               std::span<const Word> relators) {
  if (gens.empty()) return true;
  auto inv = inverses(gens);
  const auto n = static_cast<std::int64_t>(gens[0].degree());
  bool ok = true;
#pragma omp parallel for schedule(static) reduction(&& : ok)
  for (std::int64_t p = 0; p < n; ++p) {
    for (const auto& r : relators) {
      ok = ok && apply_word(gens, inv, r, static_cast<Point>(p)) == static_cast<Point>(p);
    }
  }
  return ok;
}

bool relators_trivial(std::span<const Permutation> gens, std::span<const Word> relators) {
  return threads() > 1 ? relators_trivial_parallel(gens, relators)
                       : relators_trivial_serial(gens, relators);
}

bool preserves_edges_serial(std::span<const Point> neighbors, const Permutation& g) {
  const std::size_t n = neighbors.size() / 3;
  if (g.degree() != n) return false;
  for (Point v = 0; v < n; ++v) {
    for (int k = 0; k < 3; ++k) {
      if (!adjacent(neighbors, g[v], g[neighbors[3 * v + k]])) return false;
    }
  }
  return true;
}

bool preserves_edges_parallel(std::span<const Point> neighbors, const Permutation& g) {
  const auto n = static_cast<std::int64_t>(neighbors.size() / 3);
  if (static_cast<std::int64_t>(g.degree()) != n) return false;
  bool ok = true;
#pragma omp parallel for schedule(static) reduction(&& : ok)
  for (std::int64_t v = 0; v < n; ++v) {
    for (int k = 0; k < 3; ++k) {
      ok = ok && adjacent(neighbors, g[static_cast<Point>(v)], g[neighbors[3 * v + k]]);
    }
  }
  return ok;
}

bool preserves_edges(std::span<const Point> neighbors, const Permutation& g) {
  return threads() > 1 ? preserves_edges_parallel(neighbors, g)
                       : preserves_edges_serial(neighbors, g);
}

std::uint64_t count_t_arcs_serial(std::span<const Point> neighbors, std::span<const char> start,
                                  int t) {
  std::uint64_t total = 0;
  for (Point v = 0; v < start.size(); ++v) {
    if (start[v]) total += walks_from(neighbors, v, t);
  }
  return total;
}

std::uint64_t count_t_arcs_parallel(std::span<const Point> neighbors,
                                    std::span<const char> start, int t) {
  const auto n = static_cast<std::int64_t>(start.size());
  std::uint64_t total = 0;
#pragma omp parallel for schedule(dynamic, 64) reduction(+ : total)
  for (std::int64_t v = 0; v < n; ++v) {
    if (start[v]) total += walks_from(neighbors, static_cast<Point>(v), t);
  }
  return total;
}

std::uint64_t count_t_arcs(std::span<const Point> neighbors, std::span<const char> start, int t) {
  return threads() > 1 ? count_t_arcs_parallel(neighbors, start, t)
                       : count_t_arcs_serial(neighbors, start, t);
}

}  // namespace polymedial::kernels
