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

// Coloring the intersection of one arbitrary matroid M1 with partition
// matroids M2..Mk using alpha + B colors, where alpha = chi(M1) and
// B = sum_i (chi(Mi) - 1).
//
// Each iteration builds the exchange digraph G of M1 for the current
// coloring, then a layered subgraph H of G: layer 0 holds the color nodes,
// and an element joins the next layer once it has in-arcs from B+1 distinct
// colors among already-layered vertices, keeping for each color only an arc
// from that color's earliest layer. Every source-sink path of H is
// color-chordless in G, so shifting along it keeps M1 feasible. The path is
// grown backwards from an uncolored element: among the B+1 kept in-arcs of
// the current head, at least one comes from a color that the head's parts
// can still absorb, which keeps every partition matroid feasible for every
// suffix of the path.

#pragma once

#include <algorithm>
#include <functional>
#include <optional>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include "mchroma/coloring.hpp"
#include "mchroma/edmonds.hpp"
#include "mchroma/errors.hpp"
#include "mchroma/matroid.hpp"
#include "mchroma/matroid_ops.hpp"

namespace mchroma {

template <IndependenceOracle M>
struct IntersectionInstance {
  M m1;
  std::vector<PartitionStructure> partitions;  // M2..Mk
  std::optional<int> alpha;                    // chi(M1); computed when absent

  std::size_t ground_size() const { return m1.ground_size(); }
};

// B = sum over the partition matroids of (chi - 1).
inline int palette_surplus(const std::vector<PartitionStructure>& partitions) {
  int b = 0;
  for (const auto& p : partitions) b += partition_chromatic(p) - 1;
  return b;
}

class LayeredSubgraph {
 public:
  LayeredSubgraph(std::size_t n, int num_colors, int surplus)
      : num_colors_(num_colors), surplus_(surplus), layer_of_(n, -1), in_arcs_(n) {
    layers_.emplace_back();
    for (int c = 1; c <= num_colors; ++c) layers_[0].push_back(Vertex::color(c));
  }

  int num_colors() const { return num_colors_; }
  int surplus() const { return surplus_; }
  int height() const { return static_cast<int>(layers_.size()) - 1; }
  const std::vector<std::vector<Vertex>>& layers() const { return layers_; }

  bool contains(Vertex v) const { return v.is_color() || layer_of_[v.element_index()] >= 0; }
  // Layer index, or -1 for an element outside H.
  int layer_of(Vertex v) const { return v.is_color() ? 0 : layer_of_[v.element_index()]; }

  // The B+1 kept in-arc sources of x, ascending by source color.
  const std::vector<Vertex>& chosen_in_arcs(Element x) const {
    return in_arcs_[static_cast<std::size_t>(x)];
  }

  std::vector<Element> sinks(const Coloring& c) const {
    std::vector<Element> out;
    for (std::size_t x = 0; x < layer_of_.size(); ++x) {
      if (layer_of_[x] >= 0 && !c.is_colored(static_cast<Element>(x))) {
        out.push_back(static_cast<Element>(x));
      }
    }
    return out;
  }

  void place(Element x, int layer, std::vector<Vertex> sources) {
    if (layer >= static_cast<int>(layers_.size())) layers_.resize(static_cast<std::size_t>(layer) + 1);
    layers_[static_cast<std::size_t>(layer)].push_back(Vertex::element(x));
    layer_of_[static_cast<std::size_t>(x)] = layer;
    in_arcs_[static_cast<std::size_t>(x)] = std::move(sources);
  }

 private:
  int num_colors_;
  int surplus_;
  std::vector<int> layer_of_;
  std::vector<std::vector<Vertex>> in_arcs_;
  std::vector<std::vector<Vertex>> layers_;
};

// Layer-by-layer fixed point. For each candidate the earliest-layer source
// per color is kept (ties to the lowest vertex), and of those colors the
// B+1 smallest are chosen.
inline LayeredSubgraph build_layered_subgraph(const ExchangeDigraph& g, const Coloring& c,
                                              int surplus) {
  if (surplus < 0) throw InputError("build_layered_subgraph: surplus must be >= 0");
  const std::size_t n = g.ground_size();
  const int want = surplus + 1;
  LayeredSubgraph h(n, g.num_colors(), surplus);
  for (int layer = 1;; ++layer) {
    std::vector<std::pair<Element, std::vector<Vertex>>> admitted;
    for (std::size_t xi = 0; xi < n; ++xi) {
      const auto x = static_cast<Element>(xi);
      if (h.contains(Vertex::element(x))) continue;
      // best[color] = earliest (layer, vertex) source of that color
      std::vector<std::optional<std::pair<int, Vertex>>> best(
          static_cast<std::size_t>(g.num_colors()) + 1);
      for (Vertex src : g.in_neighbors(x)) {
        if (!h.contains(src)) continue;
        const int col = src.color_under(c);
        const std::pair<int, Vertex> key{h.layer_of(src), src};
        auto& slot = best[static_cast<std::size_t>(col)];
        if (!slot || key < *slot) slot = key;
      }
      std::vector<Vertex> chosen;
      for (int col = 1; col <= g.num_colors() && static_cast<int>(chosen.size()) < want; ++col) {
        if (best[static_cast<std::size_t>(col)]) chosen.push_back(best[static_cast<std::size_t>(col)]->second);
      }
      if (static_cast<int>(chosen.size()) == want) admitted.emplace_back(x, std::move(chosen));
    }
    if (admitted.empty()) break;
    for (auto& [x, sources] : admitted) h.place(x, layer, std::move(sources));
  }
  return h;
}

inline bool subgraph_has_sink(const LayeredSubgraph& h, const Coloring& c) {
  return !h.sinks(c).empty();
}

// H must contain an uncolored element whenever one exists and the palette is
// at least chi(M1) + B. Throws with the separating cut otherwise.
inline bool assert_reaches_sink(const LayeredSubgraph& h, const Coloring& c) {
  if (c.is_total() || subgraph_has_sink(h, c)) return true;
  std::ostringstream os;
  os << "layered subgraph reaches no uncolored element; V(H) = {";
  bool first = true;
  for (const auto& layer : h.layers()) {
    for (Vertex v : layer) {
      os << (first ? "" : ",") << v.to_string();
      first = false;
    }
  }
  os << "}, outside H = {";
  first = true;
  for (std::size_t x = 0; x < c.size(); ++x) {
    if (!h.contains(Vertex::element(static_cast<Element>(x)))) {
      os << (first ? "" : ",") << "x" << x;
      first = false;
    }
  }
  os << "} (palette too small for chi(M1), or a bug)";
  throw InvariantViolation(os.str());
}

// A suffix (x_{l-j}, ..., x_l = u) together with c Δ suffix and per-part,
// per-color counts of that coloring for every partition matroid.
class SuffixState {
 public:
  SuffixState(const Coloring& c, Element sink, const std::vector<PartitionStructure>& partitions)
      : working_(c) {
    if (c.is_colored(sink)) {
      throw ContractError("suffix must start at an uncolored element, x" +
                          std::to_string(sink) + " is colored");
    }
    reversed_.push_back(Vertex::element(sink));
    counts_.resize(partitions.size());
    for (std::size_t p = 0; p < partitions.size(); ++p) {
      counts_[p].assign(partitions[p].num_parts(),
                        std::vector<int>(static_cast<std::size_t>(c.num_colors()) + 1, 0));
      for (std::size_t x = 0; x < c.size(); ++x) {
        const int col = c.color_of(static_cast<Element>(x));
        if (col != 0) ++counts_[p][partitions[p].part_of(static_cast<Element>(x))][col];
      }
    }
  }

  Vertex head() const { return reversed_.back(); }
  const Coloring& working_coloring() const { return working_; }
  AugmentingPath path() const {
    return AugmentingPath{{reversed_.rbegin(), reversed_.rend()}};
  }
  int count(std::size_t partition, int part, int color) const {
    return counts_[partition][static_cast<std::size_t>(part)][static_cast<std::size_t>(color)];
  }

  // Would prepending z (color r) keep c Δ (z, suffix) within every capacity?
  bool admits(Vertex z, const std::vector<PartitionStructure>& partitions) const {
    const Element x = head().element_index();
    const int r = z.color_under(working_);
    for (std::size_t p = 0; p < partitions.size(); ++p) {
      const int part = partitions[p].part_of(x);
      int after = count(p, part, r) + 1;
      if (z.is_element() && partitions[p].part_of(z.element_index()) == part) --after;
      if (after > partitions[p].capacity(part)) return false;
    }
    return true;
  }

  SuffixState prepend(Vertex z, const std::vector<PartitionStructure>& partitions) const {
    SuffixState next = *this;
    const Element x = head().element_index();
    const int r = z.color_under(working_);
    for (std::size_t p = 0; p < partitions.size(); ++p) {
      ++next.counts_[p][static_cast<std::size_t>(partitions[p].part_of(x))][static_cast<std::size_t>(r)];
      if (z.is_element()) {
        --next.counts_[p][static_cast<std::size_t>(partitions[p].part_of(z.element_index()))]
                      [static_cast<std::size_t>(r)];
      }
    }
    next.working_.set(x, r);
    if (z.is_element()) next.working_.set(z.element_index(), 0);
    next.reversed_.push_back(z);
    return next;
  }

 private:
  std::vector<Vertex> reversed_;  // head is back()
  Coloring working_;
  std::vector<std::vector<std::vector<int>>> counts_;
};

// Prepends the first admissible kept in-neighbor of the head, ordered by
// (color, layer, vertex).
inline SuffixState extend_suffix(const LayeredSubgraph& h, const SuffixState& s,
                                 const std::vector<PartitionStructure>& partitions) {
  const Vertex head = s.head();
  if (!head.is_element()) {
    throw ContractError("extend_suffix: suffix already starts at a color node");
  }
  std::vector<Vertex> candidates = h.chosen_in_arcs(head.element_index());
  const Coloring& wc = s.working_coloring();
  std::sort(candidates.begin(), candidates.end(), [&](Vertex a, Vertex b) {
    return std::tuple(a.color_under(wc), h.layer_of(a), a) <
           std::tuple(b.color_under(wc), h.layer_of(b), b);
  });
  for (Vertex z : candidates) {
    if (s.admits(z, partitions)) return s.prepend(z, partitions);
  }
  throw InvariantViolation("extend_suffix: no kept in-arc of " + head.to_string() +
                           " keeps suffix " + s.path().to_string() +
                           " feasible in every partition matroid");
}

// Suffix-feasible source-sink path of H ending at its lowest-index sink.
inline AugmentingPath find_path(const LayeredSubgraph& h, const Coloring& c,
                                const std::vector<PartitionStructure>& partitions) {
  const auto sinks = h.sinks(c);
  if (sinks.empty()) throw InvariantViolation("find_path: layered subgraph contains no sink");
  SuffixState state(c, sinks.front(), partitions);
  // Layers strictly decrease along the way back, so at most height steps.
  for (int step = 0; step <= h.height() && state.head().is_element(); ++step) {
    const int before = h.layer_of(state.head());
    state = extend_suffix(h, state, partitions);
    if (h.layer_of(state.head()) >= before) {
      throw InvariantViolation("find_path: layer did not decrease at " +
                               state.head().to_string());
    }
  }
  if (!state.head().is_element()) return state.path();
  throw InvariantViolation("find_path: walk back did not reach a color node");
}

struct IterationTrace {
  int iteration;
  const Coloring& before;
  const ExchangeDigraph& digraph;
  const LayeredSubgraph& subgraph;
  const AugmentingPath& path;
  const Coloring& after;
};

using IterationObserver = std::function<void(const IterationTrace&)>;

struct IntersectionOptions {
  std::optional<Coloring> initial;  // feasible partial coloring to resume from
  IterationObserver observer;
  bool verify_each_iteration = false;
};

struct IntersectionResult {
  Coloring coloring;
  int alpha = 0;
  int surplus = 0;
  int iterations = 0;

  int palette() const { return alpha + surplus; }
};

namespace detail {

inline std::string dump_state(const Coloring& c, const AugmentingPath* p) {
  std::ostringstream os;
  os << "coloring=[";
  for (std::size_t x = 0; x < c.size(); ++x) os << (x ? "," : "") << c.color_of(static_cast<Element>(x));
  os << "] palette=" << c.num_colors();
  if (p) os << " path=" << p->to_string();
  return os.str();
}

template <IndependenceOracle M>
void check_feasible(const M& m1, const std::vector<PartitionStructure>& partitions,
                    const Coloring& c, const char* when, const AugmentingPath* p) {
  auto v = verify_against(m1, c);
  if (!v.feasible) {
    throw InvariantViolation(std::string(when) + ": class " +
                             std::to_string(v.dependent_classes.front()) +
                             " dependent in M1; " + dump_state(c, p));
  }
  for (std::size_t i = 0; i < partitions.size(); ++i) {
    auto pv = verify_against(partitions[i], c);
    if (!pv.feasible) {
      throw InvariantViolation(std::string(when) + ": class " +
                               std::to_string(pv.dependent_classes.front()) +
                               " over capacity in partition " + std::to_string(i + 2) +
                               "; " + dump_state(c, p));
    }
  }
}

}  // namespace detail

template <IndependenceOracle M>
IntersectionResult color_intersection(const IntersectionInstance<M>& inst,
                                      const IntersectionOptions& options = {}) {
  const std::size_t n = inst.ground_size();
  for (std::size_t i = 0; i < inst.partitions.size(); ++i) {
    if (inst.partitions[i].ground_size() != n) {
      throw InputError("partition matroid " + std::to_string(i + 2) + " has ground set of size " +
                       std::to_string(inst.partitions[i].ground_size()) + ", expected " +
                       std::to_string(n));
    }
  }
  require_loop_free(inst.m1, "M1");

  IntersectionResult result;
  result.surplus = palette_surplus(inst.partitions);
  if (inst.alpha) {
    if (*inst.alpha < 1 && n > 0) throw InputError("alpha must be >= 1");
    result.alpha = *inst.alpha;
  } else {
    result.alpha = chromatic_number(inst.m1);
  }
  const int palette = result.palette();

  Coloring c(n, palette);
  if (options.initial) {
    const Coloring& init = *options.initial;
    if (init.size() != n || init.num_colors() > palette) {
      throw ContractError("initial coloring must cover " + std::to_string(n) +
                          " elements with at most " + std::to_string(palette) + " colors");
    }
    c = Coloring(init.assignment(), palette);
    try {
      detail::check_feasible(inst.m1, inst.partitions, c, "initial coloring", nullptr);
    } catch (const InvariantViolation& e) {
      throw ContractError(e.what());
    }
  }

  while (!c.is_total()) {
    const ExchangeDigraph g = build_digraph(inst.m1, c);
    const LayeredSubgraph h = build_layered_subgraph(g, c, result.surplus);
    assert_reaches_sink(h, c);
    const AugmentingPath p = find_path(h, c, inst.partitions);
    Coloring next = apply_path(c, p);
    if (next.colored_count() != c.colored_count() + 1) {
      throw InvariantViolation("iteration did not color exactly one element; " +
                               detail::dump_state(next, &p));
    }
    if (options.verify_each_iteration) {
      detail::check_feasible(inst.m1, inst.partitions, next, "after iteration", &p);
    }
    if (options.observer) {
      options.observer(IterationTrace{result.iterations, c, g, h, p, next});
    }
    c = std::move(next);
    ++result.iterations;
  }
  result.coloring = std::move(c);
  return result;
}

// First-fit over 1 + sum_i (chi(Mi) - 1) colors when every input matroid is
// a partition matroid. By pigeonhole a free color always exists.
inline Coloring greedy_baseline(const IntersectionInstance<Matroid>& inst) {
  const auto* first = inst.m1.get_if<PartitionStructure>();
  if (!first) {
    throw Unsupported(std::string("greedy baseline needs M1 to be a partition matroid, got ") +
                      matroid_kind_name(inst.m1.kind()));
  }
  std::vector<const PartitionStructure*> all{first};
  for (const auto& p : inst.partitions) all.push_back(&p);
  int palette = 1;
  for (const auto* p : all) palette += partition_chromatic(*p) - 1;

  const std::size_t n = inst.ground_size();
  Coloring c(n, palette);
  std::vector<std::vector<std::vector<int>>> counts(all.size());
  for (std::size_t i = 0; i < all.size(); ++i) {
    counts[i].assign(all[i]->num_parts(), std::vector<int>(static_cast<std::size_t>(palette) + 1, 0));
  }
  for (std::size_t xi = 0; xi < n; ++xi) {
    const auto x = static_cast<Element>(xi);
    int pick = 0;
    for (int col = 1; col <= palette && pick == 0; ++col) {
      bool fits = true;
      for (std::size_t i = 0; i < all.size() && fits; ++i) {
        const int part = all[i]->part_of(x);
        fits = counts[i][static_cast<std::size_t>(part)][static_cast<std::size_t>(col)] <
               all[i]->capacity(part);
      }
      if (fits) pick = col;
    }
    if (pick == 0) {
      throw InvariantViolation("greedy baseline found no free color for x" + std::to_string(x));
    }
    c.set(x, pick);
    for (std::size_t i = 0; i < all.size(); ++i) {
      ++counts[i][static_cast<std::size_t>(all[i]->part_of(x))][static_cast<std::size_t>(pick)];
    }
  }
  return c;
}

}  // namespace mchroma
