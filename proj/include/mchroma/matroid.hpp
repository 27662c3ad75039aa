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

// Matroid independence oracles.
//
// Every algorithm in this library talks to a matroid only through
// `is_independent(ElementSet)` over the dense ground set {0, ..., n-1}. The
// concrete families below (uniform, partition, laminar, graphic,
// transversal, explicit) each satisfy the IndependenceOracle concept on their
// own; `Matroid` wraps any of them behind one value type and counts calls.

#pragma once

#include <algorithm>
#include <atomic>
#include <concepts>
#include <cstdint>
#include <numeric>
#include <string>
#include <unordered_set>
#include <utility>
#include <variant>
#include <vector>

#include "mchroma/element_set.hpp"
#include "mchroma/errors.hpp"

namespace mchroma {

template <class M>
concept IndependenceOracle = requires(const M& m, const ElementSet& s) {
  { m.ground_size() } -> std::convertible_to<std::size_t>;
  { m.is_independent(s) } -> std::same_as<bool>;
};

namespace detail {

inline void require_universe(const ElementSet& s, std::size_t n) {
  if (s.universe() != n) {
    throw InputError("set over ground set of size " + std::to_string(s.universe()) +
                     " queried against matroid of size " + std::to_string(n));
  }
}

inline void require_index(Element e, std::size_t n, const std::string& where) {
  if (e < 0 || static_cast<std::size_t>(e) >= n) {
    throw ValidationError(where + ": element " + std::to_string(e) +
                          " outside ground set of size " + std::to_string(n));
  }
}

}  // namespace detail

struct GroundSet {
  std::size_t n = 0;
  std::vector<std::string> labels;  // empty, or exactly n names

  std::string label(Element e) const {
    if (!labels.empty()) return labels[static_cast<std::size_t>(e)];
    return std::to_string(e);
  }
};

// All sets of size at most `rank`.
class UniformStructure {
 public:
  UniformStructure(std::size_t n, int rank) : n_(n), rank_(rank) {
    if (rank < 0) throw ValidationError("uniform rank must be non-negative");
  }
  std::size_t ground_size() const { return n_; }
  int rank() const { return rank_; }
  bool is_independent(const ElementSet& s) const {
    detail::require_universe(s, n_);
    return s.size() <= static_cast<std::size_t>(rank_);
  }

 private:
  std::size_t n_;
  int rank_;
};

// Disjoint parts X_1..X_m covering the ground set; I is independent iff
// |I ∩ X_j| <= d_j for every part.
class PartitionStructure {
 public:
  PartitionStructure() = default;
  PartitionStructure(std::size_t n, std::vector<std::vector<Element>> parts,
                     std::vector<int> capacities = {})
      : n_(n), parts_(std::move(parts)), capacities_(std::move(capacities)),
        part_of_(n, -1) {
    if (capacities_.empty()) capacities_.assign(parts_.size(), 1);
    if (capacities_.size() != parts_.size()) {
      throw ValidationError("partition has " + std::to_string(parts_.size()) +
                            " parts but " + std::to_string(capacities_.size()) +
                            " capacities");
    }
    for (std::size_t j = 0; j < parts_.size(); ++j) {
      if (capacities_[j] < 1) {
        throw ValidationError("partition capacity of part " + std::to_string(j) +
                              " must be >= 1");
      }
      for (Element e : parts_[j]) {
        detail::require_index(e, n_, "partition part " + std::to_string(j));
        if (part_of_[e] != -1) {
          throw ValidationError("partition parts overlap: element " +
                                std::to_string(e) + " in parts " +
                                std::to_string(part_of_[e]) + " and " +
                                std::to_string(j));
        }
        part_of_[e] = static_cast<int>(j);
      }
    }
    for (std::size_t e = 0; e < n_; ++e) {
      if (part_of_[e] == -1) {
        throw ValidationError("partition parts do not cover element " +
                              std::to_string(e));
      }
    }
  }

  std::size_t ground_size() const { return n_; }
  std::size_t num_parts() const { return parts_.size(); }
  const std::vector<std::vector<Element>>& parts() const { return parts_; }
  const std::vector<int>& capacities() const { return capacities_; }
  int part_of(Element e) const { return part_of_[static_cast<std::size_t>(e)]; }
  int capacity(int part) const { return capacities_[static_cast<std::size_t>(part)]; }

  bool is_independent(const ElementSet& s) const {
    detail::require_universe(s, n_);
    std::vector<int> count(parts_.size(), 0);
    for (Element e : s) {
      const int j = part_of_[e];
      if (++count[j] > capacities_[j]) return false;
    }
    return true;
  }

 private:
  std::size_t n_ = 0;
  std::vector<std::vector<Element>> parts_;
  std::vector<int> capacities_;
  std::vector<int> part_of_;
};

// Capacities b(A) over a laminar family: any two member sets are disjoint or
// nested. Elements outside every set are unconstrained.
class LaminarStructure {
 public:
  LaminarStructure(std::size_t n, std::vector<std::vector<Element>> sets,
                   std::vector<int> capacities)
      : n_(n), sets_(std::move(sets)), capacities_(std::move(capacities)) {
    if (capacities_.size() != sets_.size()) {
      throw ValidationError("laminar family has " + std::to_string(sets_.size()) +
                            " sets but " + std::to_string(capacities_.size()) +
                            " capacities");
    }
    masks_.reserve(sets_.size());
    for (std::size_t i = 0; i < sets_.size(); ++i) {
      ElementSet m(n_);
      for (Element e : sets_[i]) {
        detail::require_index(e, n_, "laminar set " + std::to_string(i));
        m.insert(e);
      }
      if (capacities_[i] < 1) {
        throw ValidationError("laminar capacity of set " + std::to_string(i) +
                              " must be >= 1");
      }
      masks_.push_back(std::move(m));
    }
    for (std::size_t i = 0; i < masks_.size(); ++i) {
      for (std::size_t j = i + 1; j < masks_.size(); ++j) {
        const auto& a = masks_[i];
        const auto& b = masks_[j];
        if (a.intersects(b) && !a.is_subset_of(b) && !b.is_subset_of(a)) {
          throw ValidationError("laminar sets " + std::to_string(i) + " and " +
                                std::to_string(j) +
                                " cross (neither disjoint nor nested)");
        }
      }
    }
  }

  std::size_t ground_size() const { return n_; }
  const std::vector<std::vector<Element>>& sets() const { return sets_; }
  const std::vector<int>& capacities() const { return capacities_; }

  bool is_independent(const ElementSet& s) const {
    detail::require_universe(s, n_);
    for (std::size_t i = 0; i < masks_.size(); ++i) {
      if ((s & masks_[i]).size() > static_cast<std::size_t>(capacities_[i])) {
        return false;
      }
    }
    return true;
  }

 private:
  std::size_t n_;
  std::vector<std::vector<Element>> sets_;
  std::vector<int> capacities_;
  std::vector<ElementSet> masks_;
};

// Cycle matroid of a multigraph: element i is edge i, independent = forest.
class GraphicStructure {
 public:
  GraphicStructure(int num_vertices, std::vector<std::pair<int, int>> edges)
      : num_vertices_(num_vertices), edges_(std::move(edges)) {
    if (num_vertices_ < 0) throw ValidationError("vertex count must be non-negative");
    for (std::size_t i = 0; i < edges_.size(); ++i) {
      auto [u, v] = edges_[i];
      if (u < 0 || v < 0 || u >= num_vertices_ || v >= num_vertices_) {
        throw ValidationError("graphic edge " + std::to_string(i) +
                              " has endpoint outside [0," +
                              std::to_string(num_vertices_) + ")");
      }
    }
  }

  std::size_t ground_size() const { return edges_.size(); }
  int num_vertices() const { return num_vertices_; }
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }

  bool is_independent(const ElementSet& s) const {
    detail::require_universe(s, edges_.size());
    std::vector<int> parent(static_cast<std::size_t>(num_vertices_));
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
      while (parent[x] != x) {
        parent[x] = parent[parent[x]];
        x = parent[x];
      }
      return x;
    };
    for (Element e : s) {
      const int a = find(edges_[e].first);
      const int b = find(edges_[e].second);
      if (a == b) return false;
      parent[a] = b;
    }
    return true;
  }

 private:
  int num_vertices_;
  std::vector<std::pair<int, int>> edges_;
};

// Element i may be matched to any right-side node in adjacency[i];
// independent = the selected elements can be matched simultaneously.
class TransversalStructure {
 public:
  TransversalStructure(int num_right, std::vector<std::vector<int>> adjacency)
      : num_right_(num_right), adjacency_(std::move(adjacency)) {
    if (num_right_ < 0) throw ValidationError("right side size must be non-negative");
    for (std::size_t i = 0; i < adjacency_.size(); ++i) {
      for (int r : adjacency_[i]) {
        if (r < 0 || r >= num_right_) {
          throw ValidationError("transversal element " + std::to_string(i) +
                                " adjacent to right node " + std::to_string(r) +
                                " outside [0," + std::to_string(num_right_) + ")");
        }
      }
    }
  }

  std::size_t ground_size() const { return adjacency_.size(); }
  int num_right() const { return num_right_; }
  const std::vector<std::vector<int>>& adjacency() const { return adjacency_; }

  bool is_independent(const ElementSet& s) const {
    detail::require_universe(s, adjacency_.size());
    if (s.size() > static_cast<std::size_t>(num_right_)) return false;
    std::vector<int> match_of_right(static_cast<std::size_t>(num_right_), -1);
    std::vector<int> seen(static_cast<std::size_t>(num_right_), -1);
    int stamp = 0;
    // Kuhn's augmenting-path matcher; fresh state per query.
    auto augment = [&](auto&& self, int left) -> bool {
      for (int r : adjacency_[left]) {
        if (seen[r] == stamp) continue;
        seen[r] = stamp;
        if (match_of_right[r] == -1 || self(self, match_of_right[r])) {
          match_of_right[r] = left;
          return true;
        }
      }
      return false;
    };
    for (Element e : s) {
      if (!augment(augment, e)) return false;
      ++stamp;
    }
    return true;
  }

 private:
  int num_right_;
  std::vector<std::vector<int>> adjacency_;
};

// Literal list of independent sets, for tests and hand-built counterexamples.
// Requires n <= 64. Structural axioms are not enforced here; axiom_check is
// the tool that inspects them.
class ExplicitStructure {
 public:
  ExplicitStructure(std::size_t n, const std::vector<std::vector<Element>>& sets)
      : n_(n) {
    if (n_ > 64) throw ValidationError("explicit matroids support at most 64 elements");
    for (std::size_t i = 0; i < sets.size(); ++i) {
      std::uint64_t m = 0;
      for (Element e : sets[i]) {
        detail::require_index(e, n_, "explicit set " + std::to_string(i));
        m |= std::uint64_t{1} << e;
      }
      if (masks_.insert(m).second) order_.push_back(m);
    }
  }

  std::size_t ground_size() const { return n_; }
  const std::vector<std::uint64_t>& independent_masks() const { return order_; }

  bool is_independent(const ElementSet& s) const {
    detail::require_universe(s, n_);
    return masks_.count(s.mask()) != 0;
  }

 private:
  std::size_t n_;
  std::unordered_set<std::uint64_t> masks_;
  std::vector<std::uint64_t> order_;
};

enum class MatroidKind { kUniform, kPartition, kLaminar, kGraphic, kTransversal, kExplicit };

inline const char* matroid_kind_name(MatroidKind k) {
  switch (k) {
    case MatroidKind::kUniform: return "uniform";
    case MatroidKind::kPartition: return "partition";
    case MatroidKind::kLaminar: return "laminar";
    case MatroidKind::kGraphic: return "graphic";
    case MatroidKind::kTransversal: return "transversal";
    case MatroidKind::kExplicit: return "explicit";
  }
  return "unknown";
}

// Value type over any shipped family. Immutable after construction apart
// from the oracle-call counter, which is atomic so a Matroid can be shared
// between threads.
class Matroid {
 public:
  using Structure = std::variant<UniformStructure, PartitionStructure, LaminarStructure,
                                 GraphicStructure, TransversalStructure, ExplicitStructure>;

  template <class S>
    requires std::constructible_from<Structure, S>
  explicit Matroid(S structure, std::vector<std::string> labels = {})
      : structure_(std::move(structure)) {
    ground_.n = std::visit([](const auto& s) { return s.ground_size(); }, structure_);
    if (!labels.empty() && labels.size() != ground_.n) {
      throw ValidationError("labels has " + std::to_string(labels.size()) +
                            " entries for ground set of size " +
                            std::to_string(ground_.n));
    }
    ground_.labels = std::move(labels);
  }

  Matroid(const Matroid& o)
      : ground_(o.ground_), structure_(o.structure_), calls_(o.calls_.load()) {}
  Matroid& operator=(const Matroid& o) {
    ground_ = o.ground_;
    structure_ = o.structure_;
    calls_.store(o.calls_.load());
    return *this;
  }
  Matroid(Matroid&& o) noexcept
      : ground_(std::move(o.ground_)), structure_(std::move(o.structure_)),
        calls_(o.calls_.load()) {}
  Matroid& operator=(Matroid&& o) noexcept {
    ground_ = std::move(o.ground_);
    structure_ = std::move(o.structure_);
    calls_.store(o.calls_.load());
    return *this;
  }

  static Matroid uniform(std::size_t n, int rank) {
    return Matroid(UniformStructure(n, rank));
  }
  static Matroid partition(std::size_t n, std::vector<std::vector<Element>> parts,
                           std::vector<int> capacities = {}) {
    return Matroid(PartitionStructure(n, std::move(parts), std::move(capacities)));
  }
  static Matroid laminar(std::size_t n, std::vector<std::vector<Element>> sets,
                         std::vector<int> capacities) {
    return Matroid(LaminarStructure(n, std::move(sets), std::move(capacities)));
  }
  static Matroid graphic(int num_vertices, std::vector<std::pair<int, int>> edges) {
    return Matroid(GraphicStructure(num_vertices, std::move(edges)));
  }
  static Matroid transversal(int num_right, std::vector<std::vector<int>> adjacency) {
    return Matroid(TransversalStructure(num_right, std::move(adjacency)));
  }
  static Matroid explicit_sets(std::size_t n, const std::vector<std::vector<Element>>& sets) {
    return Matroid(ExplicitStructure(n, sets));
  }

  std::size_t ground_size() const { return ground_.n; }
  const GroundSet& ground() const { return ground_; }
  MatroidKind kind() const { return static_cast<MatroidKind>(structure_.index()); }
  const Structure& structure() const { return structure_; }

  template <class S>
  const S* get_if() const {
    return std::get_if<S>(&structure_);
  }

  bool is_independent(const ElementSet& s) const {
    calls_.fetch_add(1, std::memory_order_relaxed);
    return std::visit([&](const auto& st) { return st.is_independent(s); }, structure_);
  }

  std::uint64_t oracle_calls() const { return calls_.load(std::memory_order_relaxed); }
  void reset_oracle_calls() const { calls_.store(0, std::memory_order_relaxed); }

 private:
  GroundSet ground_;
  Structure structure_;
  mutable std::atomic<std::uint64_t> calls_{0};
};

static_assert(IndependenceOracle<Matroid>);
static_assert(IndependenceOracle<PartitionStructure>);

// View of an oracle restricted to a subset of its ground set, re-indexed
// densely: local element i is `elements[i]` of the underlying oracle.
template <IndependenceOracle M>
class Restriction {
 public:
  Restriction(const M& base, std::vector<Element> elements)
      : base_(&base), elements_(std::move(elements)) {
    for (Element e : elements_) {
      if (e < 0 || static_cast<std::size_t>(e) >= base.ground_size()) {
        throw InputError("restriction element " + std::to_string(e) + " out of range");
      }
    }
  }

  std::size_t ground_size() const { return elements_.size(); }
  const std::vector<Element>& elements() const { return elements_; }
  Element to_base(Element local) const { return elements_[static_cast<std::size_t>(local)]; }

  bool is_independent(const ElementSet& s) const {
    detail::require_universe(s, elements_.size());
    ElementSet lifted(base_->ground_size());
    for (Element e : s) lifted.insert(elements_[static_cast<std::size_t>(e)]);
    return base_->is_independent(lifted);
  }

 private:
  const M* base_;
  std::vector<Element> elements_;
};

}  // namespace mchroma
