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

// Two reductions onto intersection coloring:
//   * rainbow covers: cover the union of disjoint independent blocks by
//     independent sets that take at most one element per block;
//   * strong coloring: color the vertices of a graph so every class is both
//     a stable set of the graph and independent in a matroid on the
//     vertices. The edges are split into matchings and each matching becomes
//     a partition matroid whose parts are its edges.

#pragma once

#include <algorithm>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "mchroma/coloring.hpp"
#include "mchroma/errors.hpp"
#include "mchroma/intersection.hpp"
#include "mchroma/matroid.hpp"
#include "mchroma/matroid_ops.hpp"

namespace mchroma {

class SimpleGraph {
 public:
  SimpleGraph() = default;
  SimpleGraph(int num_vertices, std::vector<std::pair<int, int>> edges)
      : num_vertices_(num_vertices), edges_(std::move(edges)),
        degree_(static_cast<std::size_t>(std::max(num_vertices, 0)), 0) {
    if (num_vertices < 0) throw ValidationError("graph vertex count must be non-negative");
    std::set<std::pair<int, int>> seen;
    for (std::size_t i = 0; i < edges_.size(); ++i) {
      auto [u, v] = edges_[i];
      if (u < 0 || v < 0 || u >= num_vertices || v >= num_vertices) {
        throw ValidationError("graph edge " + std::to_string(i) + " has endpoint out of range");
      }
      if (u == v) throw ValidationError("graph edge " + std::to_string(i) + " is a self-loop");
      if (!seen.insert(std::minmax(u, v)).second) {
        throw ValidationError("graph edge " + std::to_string(i) + " duplicates an earlier edge");
      }
      ++degree_[u];
      ++degree_[v];
    }
  }

  int num_vertices() const { return num_vertices_; }
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }
  int degree(int v) const { return degree_[static_cast<std::size_t>(v)]; }
  int max_degree() const {
    return degree_.empty() ? 0 : *std::max_element(degree_.begin(), degree_.end());
  }

 private:
  int num_vertices_ = 0;
  std::vector<std::pair<int, int>> edges_;
  std::vector<int> degree_;
};

// Stable-set test over the vertices of a graph. Not a matroid; used to check
// strong colorings and by the brute-force oracle.
class StableSetOracle {
 public:
  explicit StableSetOracle(const SimpleGraph& g) : g_(&g) {}
  std::size_t ground_size() const { return static_cast<std::size_t>(g_->num_vertices()); }
  bool is_independent(const ElementSet& s) const {
    detail::require_universe(s, ground_size());
    for (auto [u, v] : g_->edges()) {
      if (s.contains(u) && s.contains(v)) return false;
    }
    return true;
  }

 private:
  const SimpleGraph* g_;
};

using Matching = std::vector<int>;  // edge indices

// Proper edge coloring with at most max_degree + 1 colors by fan rotation
// and alternating-path inversion (Misra-Gries). Returns the nonempty color
// classes as matchings.
inline std::vector<Matching> edge_color(const SimpleGraph& g) {
  const int nv = g.num_vertices();
  const auto& edges = g.edges();
  const int palette = g.max_degree() + 1;
  std::vector<int> color(edges.size(), -1);
  std::vector<std::vector<int>> at(static_cast<std::size_t>(nv), std::vector<int>(static_cast<std::size_t>(palette), -1));
  auto other = [&](int e, int v) { return edges[e].first == v ? edges[e].second : edges[e].first; };
  auto is_free = [&](int v, int col) { return at[v][col] == -1; };
  auto first_free = [&](int v) {
    for (int col = 0; col < palette; ++col) {
      if (is_free(v, col)) return col;
    }
    throw InvariantViolation("edge_color: vertex " + std::to_string(v) + " has no free color");
  };
  auto uncolor = [&](int e) {
    if (color[e] < 0) return;
    at[edges[e].first][color[e]] = -1;
    at[edges[e].second][color[e]] = -1;
    color[e] = -1;
  };
  auto paint = [&](int e, int col) {
    color[e] = col;
    at[edges[e].first][col] = e;
    at[edges[e].second][col] = e;
  };

  for (std::size_t ei = 0; ei < edges.size(); ++ei) {
    const int e = static_cast<int>(ei);
    const int u = edges[ei].first;

    // A color free at both ends needs no rotation; keeps easy graphs
    // (even cycles, paths) at Delta colors.
    int common = -1;
    for (int col = 0; col < palette && common < 0; ++col) {
      if (is_free(u, col) && is_free(edges[ei].second, col)) common = col;
    }
    if (common >= 0) {
      paint(e, common);
      continue;
    }

    // Maximal fan at u: fan[i+1]'s edge color is free on fan[i].
    std::vector<int> fan{edges[ei].second};
    std::vector<int> fan_edge{e};
    std::vector<char> in_fan(static_cast<std::size_t>(nv), 0);
    in_fan[fan[0]] = 1;
    for (bool grew = true; grew;) {
      grew = false;
      const int last = fan.back();
      for (int col = 0; col < palette && !grew; ++col) {
        const int f = at[u][col];
        if (f == -1 || !is_free(last, col)) continue;
        const int w = other(f, u);
        if (in_fan[w]) continue;
        in_fan[w] = 1;
        fan.push_back(w);
        fan_edge.push_back(f);
        grew = true;
      }
    }

    const int c = first_free(u);
    const int d = first_free(fan.back());
    if (!is_free(u, d)) {
      // Invert the maximal d/c alternating path starting at u.
      std::vector<int> path;
      int cur = u;
      int want = d;
      while (at[cur][want] != -1) {
        const int f = at[cur][want];
        path.push_back(f);
        cur = other(f, cur);
        want = want == d ? c : d;
      }
      std::vector<int> old(path.size());
      for (std::size_t i = 0; i < path.size(); ++i) {
        old[i] = color[path[i]];
        uncolor(path[i]);
      }
      for (std::size_t i = 0; i < path.size(); ++i) paint(path[i], old[i] == d ? c : d);
    }

    // First fan vertex with d free whose prefix is still a fan.
    int w = -1;
    for (std::size_t i = 0; i < fan.size(); ++i) {
      if (i > 0 && !is_free(fan[i - 1], color[fan_edge[i]])) break;
      if (is_free(fan[i], d)) {
        w = static_cast<int>(i);
        break;
      }
    }
    if (w < 0) throw InvariantViolation("edge_color: fan rotation found no endpoint");

    std::vector<int> shifted(static_cast<std::size_t>(w));
    for (int i = 0; i < w; ++i) shifted[i] = color[fan_edge[i + 1]];
    for (int i = 0; i <= w; ++i) uncolor(fan_edge[i]);
    for (int i = 0; i < w; ++i) paint(fan_edge[i], shifted[i]);
    paint(fan_edge[w], d);
  }

  std::vector<Matching> matchings(static_cast<std::size_t>(palette));
  for (std::size_t ei = 0; ei < edges.size(); ++ei) matchings[color[ei]].push_back(static_cast<int>(ei));
  std::erase_if(matchings, [](const Matching& m) { return m.empty(); });
  return matchings;
}

// Partition matroid over the vertices: one part {v, w} per matched edge,
// singletons elsewhere, all capacities 1.
inline PartitionStructure matching_to_partition(const SimpleGraph& g, const Matching& s) {
  const int nv = g.num_vertices();
  std::vector<char> used(static_cast<std::size_t>(nv), 0);
  std::vector<std::vector<Element>> parts;
  for (int e : s) {
    if (e < 0 || static_cast<std::size_t>(e) >= g.edges().size()) {
      throw InputError("matching references edge " + std::to_string(e) + " outside the graph");
    }
    auto [u, v] = g.edges()[static_cast<std::size_t>(e)];
    if (used[u] || used[v]) {
      throw InputError("edge set is not a matching: vertex " +
                       std::to_string(used[u] ? u : v) + " covered twice");
    }
    used[u] = used[v] = 1;
    parts.push_back({u, v});
  }
  for (int v = 0; v < nv; ++v) {
    if (!used[v]) parts.push_back({v});
  }
  return PartitionStructure(static_cast<std::size_t>(nv), std::move(parts));
}

struct StrongColoring {
  Coloring coloring;
  std::vector<Matching> matchings;
  IntersectionResult run;
};

// Colors the vertices with at most max_degree + chi(m) + 1 colors so every
// class is stable in g and independent in m.
template <IndependenceOracle M>
StrongColoring strong_color(const SimpleGraph& g, const M& m,
                            std::optional<int> alpha = std::nullopt) {
  if (m.ground_size() != static_cast<std::size_t>(g.num_vertices())) {
    throw InputError("matroid ground set has " + std::to_string(m.ground_size()) +
                     " elements but the graph has " + std::to_string(g.num_vertices()) +
                     " vertices");
  }
  StrongColoring out;
  out.matchings = edge_color(g);
  IntersectionInstance<const M&> inst{m, {}, alpha};
  for (const auto& s : out.matchings) inst.partitions.push_back(matching_to_partition(g, s));
  out.run = color_intersection(inst);
  out.coloring = out.run.coloring;
  return out;
}

template <IndependenceOracle M>
struct RainbowInstance {
  M matroid;
  std::vector<std::vector<Element>> blocks;
};

struct RainbowCover {
  std::vector<ElementSet> sets;  // over the full ground set
  int m = 0;                     // number of blocks
  int r = 0;                     // rank of the union of the blocks
  IntersectionResult run;        // over the union, re-indexed

  int h() const { return static_cast<int>(sets.size()); }
};

template <IndependenceOracle M>
void validate_rainbow(const RainbowInstance<M>& inst) {
  const std::size_t n = inst.matroid.ground_size();
  std::vector<int> owner(n, -1);
  for (std::size_t b = 0; b < inst.blocks.size(); ++b) {
    ElementSet block(n);
    for (Element e : inst.blocks[b]) {
      if (e < 0 || static_cast<std::size_t>(e) >= n) {
        throw InputError("block " + std::to_string(b) + " has element " + std::to_string(e) +
                         " outside the ground set");
      }
      if (owner[e] != -1) {
        throw InputError("blocks " + std::to_string(owner[e]) + " and " + std::to_string(b) +
                         " share element " + std::to_string(e));
      }
      owner[e] = static_cast<int>(b);
      block.insert(e);
    }
    if (!inst.matroid.is_independent(block)) {
      throw InputError("block " + std::to_string(b) + " " + block.to_string() + " is dependent");
    }
  }
}

// Rainbow cover of the union of the blocks by at most m + r - 1 sets.
template <IndependenceOracle M>
RainbowCover rainbow_cover(const RainbowInstance<M>& inst) {
  validate_rainbow(inst);
  const std::size_t n = inst.matroid.ground_size();
  std::vector<Element> covered;
  for (const auto& b : inst.blocks) covered.insert(covered.end(), b.begin(), b.end());
  std::sort(covered.begin(), covered.end());
  std::vector<int> local(n, -1);
  for (std::size_t i = 0; i < covered.size(); ++i) local[covered[i]] = static_cast<int>(i);

  std::vector<std::vector<Element>> parts;
  for (const auto& b : inst.blocks) {
    std::vector<Element> part;
    for (Element e : b) part.push_back(local[e]);
    parts.push_back(std::move(part));
  }

  using R = Restriction<std::remove_cvref_t<M>>;
  IntersectionInstance<R> sub{R(inst.matroid, covered), {}, std::nullopt};
  sub.partitions.emplace_back(covered.size(), std::move(parts));

  RainbowCover out;
  out.m = static_cast<int>(inst.blocks.size());
  ElementSet all(n, covered);
  out.r = rank(inst.matroid, all);
  out.run = color_intersection(sub);
  for (int col = 1; col <= out.run.coloring.num_colors(); ++col) {
    ElementSet cls(n);
    for (std::size_t i = 0; i < covered.size(); ++i) {
      if (out.run.coloring.color_of(static_cast<Element>(i)) == col) cls.insert(covered[i]);
    }
    if (!cls.empty()) out.sets.push_back(std::move(cls));
  }
  return out;
}

}  // namespace mchroma
