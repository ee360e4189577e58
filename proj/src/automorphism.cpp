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


#include "polymedial/automorphism.hpp"

#include <algorithm>
#include <chrono>
#include <numeric>
#include <optional>

#include "polymedial/error.hpp"
#include "polymedial/kernels.hpp"

namespace polymedial::graph {

namespace {

using Colours = std::vector<std::uint32_t>;

struct Timeout {};

std::uint64_t mix(std::uint64_t h, std::uint64_t x) {
  h ^= x + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  return h;
}

// Ranks arbitrary colour values into 0..k-1 preserving their order.
Colours normalize(std::span<const std::uint32_t> raw, std::size_t n) {
  if (raw.empty()) return Colours(n, 0);
  if (raw.size() != n) throw DomainError("one colour per vertex required");
  std::vector<std::uint32_t> values(raw.begin(), raw.end());
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());
  Colours out(n);
  for (std::size_t v = 0; v < n; ++v) {
    out[v] = static_cast<std::uint32_t>(
        std::lower_bound(values.begin(), values.end(), raw[v]) - values.begin());
  }
  return out;
}

struct Node {
  Colours colours;  // refined, ranks 0..cells-1
  std::uint32_t cells = 0;
  std::uint64_t trace = 0;
};

class Refiner {
 public:
  explicit Refiner(const Graph& g) : g_(g), order_(g.size()), keys_(2 * g.edge_count()) {}

  // Colour refinement to the coarsest equitable partition finer than
  // `colours`; the result and its trace depend only on the labelled input up
  // to relabelling.
  Node refine(Colours colours) {
    const std::size_t n = g_.size();
    std::uint32_t cells = count(colours);
    std::iota(order_.begin(), order_.end(), 0);
    for (;;) {
      for (Point v = 0; v < n; ++v) {
        auto nb = g_.neighbors(v);
        auto* k = key(v);
        for (std::size_t i = 0; i < nb.size(); ++i) k[i] = colours[nb[i]];
        std::sort(k, k + nb.size());
      }
      std::sort(order_.begin(), order_.end(), [&](Point a, Point b) {
        if (colours[a] != colours[b]) return colours[a] < colours[b];
        return std::lexicographical_compare(key(a), key(a) + g_.degree(a), key(b),
                                            key(b) + g_.degree(b));
      });
      Colours next(n);
      std::uint32_t c = 0;
      for (std::size_t i = 0; i < n; ++i) {
        if (i > 0 && !same(colours, order_[i - 1], order_[i])) ++c;
        next[order_[i]] = c;
      }
      const std::uint32_t k = n ? c + 1 : 0;
      colours = std::move(next);
      if (k == cells) break;
      cells = k;
    }
    Node node;
    node.cells = cells;
    std::uint64_t h = cells;
    for (std::size_t i = 0; i < n; ++i) {
      Point v = order_[i];
      if (i > 0 && colours[order_[i - 1]] == colours[v]) continue;
      h = mix(h, colours[v]);
      for (std::size_t j = 0; j < g_.degree(v); ++j) h = mix(h, key(v)[j]);
    }
    std::vector<std::uint32_t> sizes(cells, 0);
    for (auto c : colours) ++sizes[c];
    for (auto s : sizes) h = mix(h, s);
    node.trace = h;
    node.colours = std::move(colours);
    return node;
  }

 private:
  static std::uint32_t count(const Colours& c) {
    std::uint32_t k = 0;
    for (auto x : c) k = std::max(k, x + 1);
    return k;
  }
  std::uint32_t* key(Point v) { return keys_.data() + offset(v); }
  const std::uint32_t* key(Point v) const { return keys_.data() + offset(v); }
  std::size_t offset(Point v) const {
    return static_cast<std::size_t>(g_.neighbors(v).data() - g_.neighbors(0).data());
  }
  bool same(const Colours& colours, Point a, Point b) const {
    if (colours[a] != colours[b] || g_.degree(a) != g_.degree(b)) return false;
    return std::equal(key(a), key(a) + g_.degree(a), key(b));
  }

  const Graph& g_;
  std::vector<Point> order_;
  std::vector<std::uint32_t> keys_;
};

Colours individualize(const Colours& c, Point v) {
  Colours out(c.size());
  const std::uint32_t cv = c[v];
  for (std::size_t u = 0; u < c.size(); ++u) {
    out[u] = c[u] + (c[u] > cv ? 1 : 0) + (c[u] == cv && u != v ? 1 : 0);
  }
  return out;
}

// First smallest non-singleton cell, members in increasing order.
std::vector<Point> target_cell(const Node& node) {
  std::vector<std::uint32_t> sizes(node.cells, 0);
  for (auto c : node.colours) ++sizes[c];
  std::uint32_t best = UINT32_MAX;
  std::uint32_t colour = 0;
  for (std::uint32_t c = 0; c < node.cells; ++c) {
    if (sizes[c] >= 2 && sizes[c] < best) {
      best = sizes[c];
      colour = c;
    }
  }
  std::vector<Point> out;
  for (Point v = 0; v < node.colours.size(); ++v) {
    if (node.colours[v] == colour) out.push_back(v);
  }
  return out;
}

// Vertex in each colour of a discrete partition.
std::vector<Point> labelling(const Node& node) {
  std::vector<Point> lab(node.colours.size());
  for (Point v = 0; v < lab.size(); ++v) lab[node.colours[v]] = v;
  return lab;
}

bool maps_edges(const Graph& from, const Graph& to, const std::vector<Point>& img) {
  for (Point u = 0; u < from.size(); ++u) {
    for (Point v : from.neighbors(u)) {
      if (u < v && !to.adjacent(img[u], img[v])) return false;
    }
  }
  return true;
}

class Search {
 public:
  Search(const Graph& g, const SearchLimits& limits)
      : g_(g), refiner_(g), limits_(limits), start_(std::chrono::steady_clock::now()) {
    cubic_ = g.size() > 0;
    for (Point v = 0; v < g.size() && cubic_; ++v) cubic_ = g.degree(v) == 3;
    if (cubic_) {
      for (Point v = 0; v < g.size(); ++v) {
        for (Point w : g.neighbors(v)) flat_.push_back(w);
      }
    }
  }

  // Leftmost path of the search tree.
  void first_path(Colours initial) {
    path_.push_back(visit(std::move(initial)));
    while (path_.back().cells < g_.size()) {
      auto cell = target_cell(path_.back());
      cells_.push_back(cell);
      base_.push_back(cell.front());
      path_.push_back(visit(individualize(path_.back().colours, cell.front())));
    }
    first_lab_ = labelling(path_.back());
  }

  const std::vector<Node>& path() const { return path_; }
  const std::vector<std::vector<Point>>& cells() const { return cells_; }
  const std::vector<Point>& base() const { return base_; }
  const std::vector<Point>& first_lab() const { return first_lab_; }
  std::uint64_t nodes() const { return nodes_; }
  Refiner& refiner() { return refiner_; }

  Node visit(Colours c) {
    ++nodes_;
    if ((nodes_ & 63) == 0) check_time();
    return refiner_.refine(std::move(c));
  }

  void check_time() const {
    if (!limits_.time_budget_seconds) return;
    std::chrono::duration<double> spent = std::chrono::steady_clock::now() - start_;
    if (spent.count() > *limits_.time_budget_seconds) throw Timeout{};
  }

  bool is_automorphism(const std::vector<Point>& img) const {
    if (cubic_) {
      return kernels::preserves_edges(flat_, Permutation(std::vector<Point>(img)));
    }
    return maps_edges(g_, g_, img);
  }

  // Searches the subtree below `c` (at `depth`) in the tree of `self` for a
  // leaf equivalent to the reference first leaf; `accept` tests the induced
  // vertex map.
  template <class Accept>
  static std::optional<std::vector<Point>> descend(Search& self, const Search& ref, Colours c,
                                                   std::size_t depth, Accept&& accept) {
    Node node = self.visit(std::move(c));
    const Node& want = ref.path_[depth];
    if (node.trace != want.trace || node.cells != want.cells) return std::nullopt;
    if (node.cells == self.g_.size()) {
      auto lab = labelling(node);
      std::vector<Point> img(lab.size());
      for (std::size_t i = 0; i < lab.size(); ++i) img[ref.first_lab_[i]] = lab[i];
      if (accept(img)) return img;
      return std::nullopt;
    }
    for (Point u : target_cell(node)) {
      auto r = descend(self, ref, individualize(node.colours, u), depth + 1, accept);
      if (r) return r;
    }
    return std::nullopt;
  }

 private:
  const Graph& g_;
  Refiner refiner_;
  SearchLimits limits_;
  std::chrono::steady_clock::time_point start_;
  bool cubic_ = false;
  std::vector<Point> flat_;
  std::vector<Node> path_;
  std::vector<std::vector<Point>> cells_;
  std::vector<Point> base_;
  std::vector<Point> first_lab_;
  std::uint64_t nodes_ = 0;
};

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n), size_(n, 1), failed_(n, 0) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }
  Point find(Point x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }
  void unite(Point a, Point b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (size_[a] < size_[b]) std::swap(a, b);
    parent_[b] = a;
    size_[a] += size_[b];
    failed_[a] = failed_[a] || failed_[b];
  }
  void absorb(const Permutation& g) {
    for (Point x = 0; x < parent_.size(); ++x) unite(x, g[x]);
  }
  std::size_t size(Point x) { return size_[find(x)]; }
  bool failed(Point x) { return failed_[find(x)]; }
  void mark_failed(Point x) { failed_[find(x)] = 1; }

 private:
  std::vector<Point> parent_;
  std::vector<std::size_t> size_;
  std::vector<char> failed_;
};

}  // namespace

perm::PermutationGroup AutomorphismResult::group(std::size_t degree) const {
  if (!decided) throw StateError("automorphism group is undecided: " + reason);
  return perm::PermutationGroup(degree, generators, order);
}

AutomorphismResult automorphism_group(const Graph& g, std::span<const std::uint32_t> colours,
                                      const SearchLimits& limits) {
  AutomorphismResult out;
  const std::size_t n = g.size();
  if (n > limits.max_vertices) {
    out.reason = std::to_string(n) + " vertices exceed the cap of " +
                 std::to_string(limits.max_vertices);
    return out;
  }
  Search s(g, limits);
  try {
    s.first_path(normalize(colours, n));
    struct Gen {
      Permutation perm;
      std::size_t level;
    };
    std::vector<Gen> gens;
    const std::size_t depth = s.base().size();
    std::vector<std::uint64_t> lengths(depth, 1);
    for (std::size_t k = depth; k-- > 0;) {
      UnionFind uf(n);
      for (const auto& gen : gens) uf.absorb(gen.perm);
      const Point vk = s.base()[k];
      for (Point w : s.cells()[k]) {
        if (uf.find(w) == uf.find(vk) || uf.failed(w)) continue;
        auto img = Search::descend(s, s, individualize(s.path()[k].colours, w), k + 1,
                                   [&](const std::vector<Point>& m) {
                                     return s.is_automorphism(m);
                                   });
        if (img) {
          Permutation p(std::move(*img));
          uf.absorb(p);
          gens.push_back({std::move(p), k});
        } else {
          uf.mark_failed(w);
        }
      }
      lengths[k] = uf.size(vk);
    }
    std::uint64_t order = 1;
    for (auto l : lengths) {
      if (__builtin_mul_overflow(order, l, &order)) {
        throw InconsistencyError("automorphism group order exceeds 64 bits");
      }
    }
    out.decided = true;
    out.order = order;
    out.base = s.base();
    out.orbit_lengths = std::move(lengths);
    for (auto& gen : gens) out.generators.push_back(std::move(gen.perm));
  } catch (const Timeout&) {
    out.reason = "time budget exhausted";
  }
  out.nodes = s.nodes();
  return out;
}

AutomorphismResult automorphism_group(const BipartiteCubicGraph& g, const SearchLimits& limits) {
  return automorphism_group(g.graph(), {}, limits);
}

IsomorphismResult find_isomorphism(const Graph& g, const Graph& h, const SearchLimits& limits) {
  IsomorphismResult out;
  const std::size_t n = g.size();
  if (std::max(n, h.size()) > limits.max_vertices) {
    out.reason = "vertex count exceeds the cap of " + std::to_string(limits.max_vertices);
    return out;
  }
  out.decided = true;
  if (n != h.size() || g.edge_count() != h.edge_count()) return out;
  Search sg(g, limits);
  Search sh(h, limits);
  try {
    sg.first_path(Colours(n, 0));
    auto img = Search::descend(sh, sg, Colours(n, 0), 0, [&](const std::vector<Point>& m) {
      return maps_edges(g, h, m);
    });
    if (img) {
      out.isomorphic = true;
      out.mapping = Permutation(std::move(*img));
    }
  } catch (const Timeout&) {
    out.decided = false;
    out.reason = "time budget exhausted";
  }
  return out;
}

}  // namespace polymedial::graph
