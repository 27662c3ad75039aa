// Copyright 2026 The Authors.
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

// Exchange digraph and the single-matroid coloring algorithm built on it.
//
// For a matroid M, a palette of size P and a feasible partial coloring c with
// classes S_1..S_P, the exchange digraph has one source node per color and one
// node per element. For each color i and element x outside S_i:
//   * arc (i, x)  if S_i + x is independent;
//   * arc (y, x)  for every y in S_i with S_i - y + x independent, otherwise.
// Shifting colors along a source-to-uncolored path that has no color-chord
// (an arc (x_j, x_k), j <= k-2, whose tail shares the color of x_{k-1})
// keeps every class independent and colors one more element. Repeating this
// from the empty coloring either colors everything or proves P colors are
// not enough.

#pragma once

#include <algorithm>
#include <compare>
#include <deque>
#include <functional>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "mchroma/coloring.hpp"
#include "mchroma/element_set.hpp"
#include "mchroma/errors.hpp"
#include "mchroma/matroid.hpp"
#include "mchroma/matroid_ops.hpp"

namespace mchroma {

// A node of the exchange digraph: either the source node of a color
// (1-based) or a ground-set element. Color nodes order before elements.
class Vertex {
 public:
  static constexpr Vertex color(int c) { return Vertex(-c); }
  static constexpr Vertex element(Element x) { return Vertex(x); }

  constexpr bool is_color() const { return raw_ < 0; }
  constexpr bool is_element() const { return raw_ >= 0; }
  constexpr int color_index() const { return -raw_; }
  constexpr Element element_index() const { return raw_; }

  // Color carried by this vertex under coloring c (0 for uncolored elements).
  int color_under(const Coloring& c) const {
    return is_color() ? color_index() : c.color_of(raw_);
  }

  constexpr bool operator==(const Vertex&) const = default;
  constexpr std::strong_ordering operator<=>(const Vertex& o) const {
    if (is_color() != o.is_color()) {
      return is_color() ? std::strong_ordering::less : std::strong_ordering::greater;
    }
    if (is_color()) return color_index() <=> o.color_index();
    return raw_ <=> o.raw_;
  }

  std::string to_string() const {
    return is_color() ? "c" + std::to_string(color_index()) : "x" + std::to_string(raw_);
  }

 private:
  constexpr explicit Vertex(int raw) : raw_(raw) {}
  int raw_;
};

inline std::ostream& operator<<(std::ostream& os, Vertex v) { return os << v.to_string(); }

struct Arc {
  Vertex source;
  Element target;
  bool operator==(const Arc&) const = default;
};

class ExchangeDigraph {
 public:
  ExchangeDigraph(std::size_t n, int num_colors)
      : n_(n), num_colors_(num_colors),
        arcs_by_color_(static_cast<std::size_t>(num_colors)),
        color_out_(static_cast<std::size_t>(num_colors), ElementSet(n)),
        element_out_(n, ElementSet(n)),
        in_arcs_(n) {}

  std::size_t ground_size() const { return n_; }
  int num_colors() const { return num_colors_; }

  // Arcs whose exchange concerns color class i (1-based).
  const std::vector<Arc>& arcs_of_color(int color) const {
    return arcs_by_color_.at(static_cast<std::size_t>(color - 1));
  }
  std::size_t arc_count() const {
    std::size_t total = 0;
    for (const auto& a : arcs_by_color_) total += a.size();
    return total;
  }

  bool has_arc(Vertex from, Element to) const {
    if (from.is_color()) return color_out_[from.color_index() - 1].contains(to);
    return element_out_[from.element_index()].contains(to);
  }
  const ElementSet& out_neighbors(Vertex from) const {
    if (from.is_color()) return color_out_[from.color_index() - 1];
    return element_out_[from.element_index()];
  }
  // Sources of arcs entering x, in ascending Vertex order.
  const std::vector<Vertex>& in_neighbors(Element x) const {
    return in_arcs_[static_cast<std::size_t>(x)];
  }

  void add_arc(int color, Vertex from, Element to) {
    arcs_by_color_[static_cast<std::size_t>(color - 1)].push_back({from, to});
    if (from.is_color()) {
      color_out_[from.color_index() - 1].insert(to);
    } else {
      element_out_[from.element_index()].insert(to);
    }
    in_arcs_[static_cast<std::size_t>(to)].push_back(from);
  }

  void finalize() {
    for (auto& v : in_arcs_) std::sort(v.begin(), v.end());
  }

 private:
  std::size_t n_;
  int num_colors_;
  std::vector<std::vector<Arc>> arcs_by_color_;
  std::vector<ElementSet> color_out_;
  std::vector<ElementSet> element_out_;
  std::vector<std::vector<Vertex>> in_arcs_;
};

// Vertex sequence (x_1, ..., x_l). A full augmenting path starts at a color
// node; suffixes built by the intersection algorithm may start at an element.
struct AugmentingPath {
  std::vector<Vertex> vertices;

  std::size_t length() const { return vertices.size(); }
  bool operator==(const AugmentingPath&) const = default;

  std::string to_string() const {
    std::string out = "(";
    for (std::size_t i = 0; i < vertices.size(); ++i) {
      if (i) out += ",";
      out += vertices[i].to_string();
    }
    return out + ")";
  }
};

template <IndependenceOracle M>
ExchangeDigraph build_digraph(const M& m, const Coloring& c) {
  const std::size_t n = m.ground_size();
  if (c.size() != n) {
    throw InputError("coloring covers " + std::to_string(c.size()) +
                     " elements, matroid has " + std::to_string(n));
  }
  ExchangeDigraph g(n, c.num_colors());
  for (int color = 1; color <= c.num_colors(); ++color) {
    const ElementSet cls = c.color_class(color);
    if (!m.is_independent(cls)) {
      throw ContractError("build_digraph: color class " + std::to_string(color) + " " +
                          cls.to_string() + " is dependent");
    }
    for (std::size_t xi = 0; xi < n; ++xi) {
      const auto x = static_cast<Element>(xi);
      if (cls.contains(x)) continue;
      auto circuit = find_circuit(m, cls, x);
      if (!circuit) {
        g.add_arc(color, Vertex::color(color), x);
        continue;
      }
      for (Element y : *circuit) {
        if (y != x) g.add_arc(color, Vertex::element(y), x);
      }
    }
  }
  g.finalize();
  return g;
}

// True iff no arc (x_j, x_k) with j <= k-2 between element vertices has
// c(x_j) == c(x_{k-1}).
inline bool is_color_chordless(const ExchangeDigraph& g, const Coloring& c,
                               const AugmentingPath& p) {
  const auto& v = p.vertices;
  for (std::size_t k = 2; k < v.size(); ++k) {
    if (!v[k].is_element()) continue;
    const int pred_color = v[k - 1].color_under(c);
    for (std::size_t j = 0; j + 2 <= k; ++j) {
      if (!v[j].is_element()) continue;
      if (c.color_of(v[j].element_index()) == pred_color &&
          g.has_arc(v[j], v[k].element_index())) {
        return false;
      }
    }
  }
  return true;
}

// c Δ P: x_i takes the old color of x_{i-1}; if x_1 is an element it ends up
// uncolored. The input coloring is left untouched.
inline Coloring apply_path(const Coloring& c, const AugmentingPath& p) {
  const auto& v = p.vertices;
  if (v.size() < 2) throw ContractError("apply_path: path needs at least two vertices");
  const Vertex last = v.back();
  if (!last.is_element() || c.is_colored(last.element_index())) {
    throw ContractError("apply_path: path " + p.to_string() +
                        " does not end at an uncolored element");
  }
  Coloring out = c;
  for (std::size_t i = 1; i < v.size(); ++i) {
    if (!v[i].is_element()) {
      throw ContractError("apply_path: color node inside path " + p.to_string());
    }
    out.set(v[i].element_index(), v[i - 1].color_under(c));
  }
  if (v.front().is_element()) out.set(v.front().element_index(), 0);
  return out;
}

using PathSelector =
    std::function<std::optional<AugmentingPath>(const ExchangeDigraph&, const Coloring&)>;

// Breadth-first search from all color nodes; returns a shortest path to the
// lowest-index reachable sink. Shortest paths have no chords at all.
inline std::optional<AugmentingPath> shortest_path(const ExchangeDigraph& g,
                                                   const Coloring& c) {
  const std::size_t n = g.ground_size();
  std::vector<std::optional<Vertex>> parent(n);
  std::vector<char> seen(n, 0);
  std::deque<Vertex> queue;
  for (int color = 1; color <= g.num_colors(); ++color) queue.push_back(Vertex::color(color));
  while (!queue.empty()) {
    const Vertex u = queue.front();
    queue.pop_front();
    for (Element x : g.out_neighbors(u)) {
      if (seen[x]) continue;
      seen[x] = 1;
      parent[x] = u;
      if (c.is_colored(x)) queue.push_back(Vertex::element(x));
    }
  }
  for (std::size_t xi = 0; xi < n; ++xi) {
    const auto x = static_cast<Element>(xi);
    if (!seen[xi] || c.is_colored(x)) continue;
    AugmentingPath p;
    Vertex cur = Vertex::element(x);
    p.vertices.push_back(cur);
    while (cur.is_element()) {
      cur = *parent[cur.element_index()];
      p.vertices.push_back(cur);
    }
    std::reverse(p.vertices.begin(), p.vertices.end());
    return p;
  }
  return std::nullopt;
}

// Depth-first search that refuses any extension creating a color-chord, so
// whatever it returns is color-chordless but usually not shortest. Elements
// are visited at most once overall; if that pruning strands every sink the
// breadth-first path is returned instead, so the selector fails only when no
// source-sink path exists.
inline std::optional<AugmentingPath> dfs_chordless_path(const ExchangeDigraph& g,
                                                        const Coloring& c) {
  const std::size_t n = g.ground_size();
  std::vector<char> visited(n, 0);
  std::vector<Vertex> stack;

  auto creates_chord = [&](Element next) {
    const std::size_t k = stack.size();
    if (k < 2) return false;
    const int pred_color = stack[k - 1].color_under(c);
    for (std::size_t j = 0; j + 1 < k; ++j) {
      if (stack[j].is_element() && c.color_of(stack[j].element_index()) == pred_color &&
          g.has_arc(stack[j], next)) {
        return true;
      }
    }
    return false;
  };

  auto dfs = [&](auto&& self, Vertex u) -> bool {
    stack.push_back(u);
    for (Element x : g.out_neighbors(u)) {
      if (visited[x] || creates_chord(x)) continue;
      visited[x] = 1;
      if (!c.is_colored(x)) {
        stack.push_back(Vertex::element(x));
        return true;
      }
      if (self(self, Vertex::element(x))) return true;
    }
    stack.pop_back();
    return false;
  };

  for (int color = 1; color <= g.num_colors(); ++color) {
    if (dfs(dfs, Vertex::color(color))) return AugmentingPath{stack};
  }
  return shortest_path(g, c);
}

enum class SelectorKind { kShortest, kDfsChordless };

inline PathSelector make_selector(SelectorKind kind) {
  switch (kind) {
    case SelectorKind::kShortest: return shortest_path;
    case SelectorKind::kDfsChordless: return dfs_chordless_path;
  }
  return shortest_path;
}

inline const char* selector_name(SelectorKind kind) {
  return kind == SelectorKind::kShortest ? "shortest" : "dfs-chordless";
}

// Colors every element with at most `alpha` colors, or returns nullopt when
// some iteration finds no source-sink path (then M is not alpha-colorable).
template <IndependenceOracle M>
std::optional<Coloring> color_single(const M& m, int alpha,
                                     const PathSelector& selector = shortest_path,
                                     int* iterations = nullptr) {
  if (alpha < 1) throw InputError("color_single: alpha must be >= 1");
  require_loop_free(m);
  Coloring c(m.ground_size(), alpha);
  int steps = 0;
  while (!c.is_total()) {
    const ExchangeDigraph g = build_digraph(m, c);
    auto path = selector(g, c);
    if (!path) {
      if (iterations) *iterations = steps;
      return std::nullopt;
    }
    c = apply_path(c, *path);
    ++steps;
  }
  if (iterations) *iterations = steps;
  return c;
}

struct ChromaticResult {
  int chi = 0;
  Coloring coloring;
};

// Binary search over [ceil(n / rank), n] for the least alpha that
// color_single accepts, together with a witness coloring.
template <IndependenceOracle M>
ChromaticResult optimal_coloring(const M& m, const PathSelector& selector = shortest_path) {
  const std::size_t n = m.ground_size();
  if (n == 0) return {0, Coloring(0, 0)};
  require_loop_free(m);
  const int r = rank(m);
  int lo = static_cast<int>((n + static_cast<std::size_t>(r) - 1) / static_cast<std::size_t>(r));
  int hi = static_cast<int>(n);
  std::optional<Coloring> best = color_single(m, hi, selector);
  if (!best) throw InvariantViolation("loop-free matroid not colorable with n colors");
  while (lo < hi) {
    const int mid = lo + (hi - lo) / 2;
    if (auto c = color_single(m, mid, selector)) {
      hi = mid;
      best = std::move(c);
    } else {
      lo = mid + 1;
    }
  }
  if (best->num_colors() != hi) best = color_single(m, hi, selector);
  return {hi, std::move(*best)};
}

template <IndependenceOracle M>
int chromatic_number(const M& m) {
  return optimal_coloring(m).chi;
}

}  // namespace mchroma
