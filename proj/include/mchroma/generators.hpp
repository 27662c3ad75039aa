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

// Seeded random instances. Output depends only on (seed, family, params):
// mt19937_64 has a fixed output sequence and every draw goes through
// Rng::below, which avoids the implementation-defined std distributions.

#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "mchroma/applications.hpp"
#include "mchroma/errors.hpp"
#include "mchroma/instance_io.hpp"
#include "mchroma/matroid.hpp"

namespace mchroma {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  // Uniform in [0, bound), bound >= 1.
  std::uint64_t below(std::uint64_t bound) {
    const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
    std::uint64_t v;
    do {
      v = engine_();
    } while (v >= limit);
    return v % bound;
  }
  int range(int lo, int hi) {  // inclusive
    return lo + static_cast<int>(below(static_cast<std::uint64_t>(hi - lo + 1)));
  }
  bool chance(int num, int den) { return below(static_cast<std::uint64_t>(den)) < static_cast<std::uint64_t>(num); }

  template <class T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) std::swap(v[i - 1], v[below(i)]);
  }

 private:
  std::mt19937_64 engine_;
};

enum class Family { kPartition, kLaminar, kGraphic, kTransversal, kUniform, kRainbow, kStrong };

inline Family parse_family(const std::string& s) {
  if (s == "partition") return Family::kPartition;
  if (s == "laminar") return Family::kLaminar;
  if (s == "graphic") return Family::kGraphic;
  if (s == "transversal") return Family::kTransversal;
  if (s == "uniform") return Family::kUniform;
  if (s == "rainbow") return Family::kRainbow;
  if (s == "strong" || s == "strong-coloring") return Family::kStrong;
  throw InputError("unknown family '" + s +
                   "' (expected partition, laminar, graphic, transversal, uniform, rainbow, strong)");
}

struct GenParams {
  int n = 10;           // ground set size (vertices for strong)
  int k = 2;            // partition matroids besides M1
  int vertices = 0;     // graphic / rainbow vertex count; 0 = derived
  int max_degree = 4;   // strong coloring
  int blocks = 0;       // rainbow block count; 0 = rank
  int extra = 0;        // rainbow: edges outside every block
};

namespace gen {

inline PartitionStructure random_partition(Rng& rng, int n) {
  const int num_parts = n == 0 ? 0 : rng.range(1, std::max(1, (n + 1) / 2));
  std::vector<std::vector<Element>> parts(static_cast<std::size_t>(num_parts));
  for (int x = 0; x < n; ++x) parts[rng.below(static_cast<std::uint64_t>(num_parts))].push_back(x);
  std::erase_if(parts, [](const auto& p) { return p.empty(); });
  std::vector<int> caps;
  for (std::size_t j = 0; j < parts.size(); ++j) caps.push_back(rng.chance(3, 4) ? 1 : 2);
  return PartitionStructure(static_cast<std::size_t>(n), std::move(parts), std::move(caps));
}

inline Matroid random_laminar(Rng& rng, int n) {
  std::vector<Element> perm(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) perm[static_cast<std::size_t>(i)] = i;
  rng.shuffle(perm);
  std::vector<std::vector<Element>> sets;
  std::vector<int> caps;
  // Intervals of a shuffled order, split recursively: laminar by construction.
  auto split = [&](auto&& self, int lo, int hi, int depth) -> void {
    const int size = hi - lo;
    if (size <= 1) return;
    if (depth == 0 || rng.chance(3, 4)) {
      sets.emplace_back(perm.begin() + lo, perm.begin() + hi);
      caps.push_back(rng.range(1, std::max(1, (2 * size) / 3)));
    }
    if (size <= 2 || depth >= 4) return;
    const int pieces = rng.range(2, std::min(3, size));
    std::vector<int> cuts{lo, hi};
    while (static_cast<int>(cuts.size()) < pieces + 1) {
      const int c = rng.range(lo + 1, hi - 1);
      if (std::find(cuts.begin(), cuts.end(), c) == cuts.end()) cuts.push_back(c);
    }
    std::sort(cuts.begin(), cuts.end());
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i) self(self, cuts[i], cuts[i + 1], depth + 1);
  };
  split(split, 0, n, 0);
  return Matroid::laminar(static_cast<std::size_t>(n), std::move(sets), std::move(caps));
}

inline Matroid random_graphic(Rng& rng, int n, int vertices) {
  if (vertices == 0) vertices = std::max(2, n / 2 + 1);
  if (vertices < 2 && n > 0) throw InputError("graphic family needs at least 2 vertices");
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n; ++i) {
    const int u = rng.range(0, vertices - 1);
    int v = rng.range(0, vertices - 2);
    if (v >= u) ++v;
    edges.emplace_back(u, v);
  }
  return Matroid::graphic(vertices, std::move(edges));
}

inline Matroid random_transversal(Rng& rng, int n) {
  const int right = std::max(1, (n + 1) / 2);
  std::vector<std::vector<int>> adj(static_cast<std::size_t>(n));
  for (auto& row : adj) {
    const int deg = rng.range(1, std::min(3, right));
    std::set<int> picks;
    while (static_cast<int>(picks.size()) < deg) picks.insert(rng.range(0, right - 1));
    row.assign(picks.begin(), picks.end());
  }
  return Matroid::transversal(right, std::move(adj));
}

inline Matroid random_uniform(Rng& rng, int n) {
  return Matroid::uniform(static_cast<std::size_t>(n), n == 0 ? 0 : rng.range(1, std::max(1, std::min(n, 4))));
}

// Random spanning tree on `vertices` nodes: each vertex in a shuffled order
// attaches to a uniformly chosen earlier one.
inline std::vector<std::pair<int, int>> random_tree(Rng& rng, int vertices) {
  std::vector<int> order(static_cast<std::size_t>(vertices));
  for (int i = 0; i < vertices; ++i) order[static_cast<std::size_t>(i)] = i;
  rng.shuffle(order);
  std::vector<std::pair<int, int>> edges;
  for (int i = 1; i < vertices; ++i) {
    edges.emplace_back(order[static_cast<std::size_t>(rng.range(0, i - 1))], order[static_cast<std::size_t>(i)]);
  }
  return edges;
}

inline SimpleGraph random_bounded_degree_graph(Rng& rng, int vertices, int max_degree) {
  std::vector<int> deg(static_cast<std::size_t>(vertices), 0);
  std::set<std::pair<int, int>> seen;
  std::vector<std::pair<int, int>> edges;
  if (vertices >= 2) {
    const int attempts = vertices * max_degree;
    for (int t = 0; t < attempts; ++t) {
      const int u = rng.range(0, vertices - 1);
      int v = rng.range(0, vertices - 2);
      if (v >= u) ++v;
      if (deg[u] >= max_degree || deg[v] >= max_degree) continue;
      if (!seen.insert(std::minmax(u, v)).second) continue;
      ++deg[u];
      ++deg[v];
      edges.emplace_back(u, v);
    }
  }
  return SimpleGraph(vertices, std::move(edges));
}

}  // namespace gen

inline InstanceFile generate(std::uint64_t seed, Family family, const GenParams& params) {
  if (params.n < 0 || params.k < 0 || params.vertices < 0 || params.max_degree < 0 ||
      params.blocks < 0 || params.extra < 0) {
    throw InputError("generator size parameters must be non-negative");
  }
  Rng rng(seed);
  InstanceFile inst;
  const int n = params.n;

  auto add_partitions = [&]() {
    for (int i = 0; i < params.k; ++i) inst.matroids.emplace_back(gen::random_partition(rng, n));
  };

  switch (family) {
    case Family::kPartition:
      inst.n = static_cast<std::size_t>(n);
      inst.matroids.emplace_back(gen::random_partition(rng, n));
      add_partitions();
      break;
    case Family::kLaminar:
      inst.n = static_cast<std::size_t>(n);
      inst.matroids.push_back(gen::random_laminar(rng, n));
      add_partitions();
      break;
    case Family::kGraphic:
      inst.n = static_cast<std::size_t>(n);
      inst.matroids.push_back(gen::random_graphic(rng, n, params.vertices));
      add_partitions();
      break;
    case Family::kTransversal:
      inst.n = static_cast<std::size_t>(n);
      inst.matroids.push_back(gen::random_transversal(rng, n));
      add_partitions();
      break;
    case Family::kUniform:
      inst.n = static_cast<std::size_t>(n);
      inst.matroids.push_back(gen::random_uniform(rng, n));
      add_partitions();
      break;
    case Family::kRainbow: {
      const int vertices = params.vertices == 0 ? 4 : params.vertices;
      if (vertices < 2) throw InputError("rainbow family needs at least 2 vertices");
      const int m = params.blocks == 0 ? vertices - 1 : params.blocks;
      std::vector<std::pair<int, int>> edges;
      std::vector<std::vector<Element>> blocks;
      for (int b = 0; b < m; ++b) {
        auto tree = gen::random_tree(rng, vertices);
        // A random nonempty prefix of a shuffled tree is still a forest.
        rng.shuffle(tree);
        const int keep = params.blocks == 0 ? static_cast<int>(tree.size())
                                            : rng.range(1, static_cast<int>(tree.size()));
        std::vector<Element> block;
        for (int i = 0; i < keep; ++i) {
          block.push_back(static_cast<Element>(edges.size()));
          edges.push_back(tree[static_cast<std::size_t>(i)]);
        }
        blocks.push_back(std::move(block));
      }
      for (int i = 0; i < params.extra; ++i) {
        const int u = rng.range(0, vertices - 1);
        int v = rng.range(0, vertices - 2);
        if (v >= u) ++v;
        edges.emplace_back(u, v);
      }
      inst.n = edges.size();
      inst.matroids.push_back(Matroid::graphic(vertices, std::move(edges)));
      inst.blocks = std::move(blocks);
      break;
    }
    case Family::kStrong: {
      inst.n = static_cast<std::size_t>(n);
      inst.graph = gen::random_bounded_degree_graph(rng, n, params.max_degree);
      switch (rng.below(3)) {
        case 0: inst.matroids.emplace_back(gen::random_partition(rng, n)); break;
        case 1: inst.matroids.push_back(gen::random_laminar(rng, n)); break;
        default: inst.matroids.push_back(gen::random_uniform(rng, n)); break;
      }
      break;
    }
  }
  return inst;
}

}  // namespace mchroma
