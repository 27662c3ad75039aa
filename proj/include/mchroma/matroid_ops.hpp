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

#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "mchroma/element_set.hpp"
#include "mchroma/errors.hpp"
#include "mchroma/matroid.hpp"

namespace mchroma {

// Size of a maximum independent subset of `s`, by greedy augmentation.
template <IndependenceOracle M>
int rank(const M& m, const ElementSet& s) {
  ElementSet basis(m.ground_size());
  int r = 0;
  for (Element e : s) {
    ElementSet trial = basis.with(e);
    if (m.is_independent(trial)) {
      basis = std::move(trial);
      ++r;
    }
  }
  return r;
}

template <IndependenceOracle M>
int rank(const M& m) {
  return rank(m, ElementSet::full(m.ground_size()));
}

// The unique circuit of s + x when s is independent and s + x is not.
// Uses |s| + 1 independence queries and never a rank oracle.
template <IndependenceOracle M>
std::optional<ElementSet> find_circuit(const M& m, const ElementSet& s, Element x) {
  if (s.contains(x)) {
    throw ContractError("find_circuit: element " + std::to_string(x) +
                        " already in the independent set");
  }
  ElementSet joined = s.with(x);
  if (m.is_independent(joined)) return std::nullopt;
  ElementSet circuit(m.ground_size());
  circuit.insert(x);
  for (Element y : s) {
    if (m.is_independent(joined.without(y))) circuit.insert(y);
  }
  return circuit;
}

// Checked variant: also verifies that `s` is independent (one extra query).
template <IndependenceOracle M>
std::optional<ElementSet> find_circuit_checked(const M& m, const ElementSet& s, Element x) {
  if (!m.is_independent(s)) {
    throw ContractError("find_circuit: base set " + s.to_string() + " is dependent");
  }
  return find_circuit(m, s, x);
}

// Closed form max_j ceil(|X_j| / d_j); 1 on an empty ground set.
inline int partition_chromatic(const PartitionStructure& p) {
  int best = 1;
  for (std::size_t j = 0; j < p.num_parts(); ++j) {
    const int size = static_cast<int>(p.parts()[j].size());
    const int cap = p.capacities()[j];
    best = std::max(best, (size + cap - 1) / cap);
  }
  return best;
}

// Elements x with {x} dependent.
template <IndependenceOracle M>
std::vector<Element> find_loops(const M& m) {
  std::vector<Element> loops;
  const std::size_t n = m.ground_size();
  for (std::size_t x = 0; x < n; ++x) {
    if (!m.is_independent(ElementSet(n, {static_cast<Element>(x)}))) {
      loops.push_back(static_cast<Element>(x));
    }
  }
  return loops;
}

template <IndependenceOracle M>
void require_loop_free(const M& m, const std::string& what = "matroid") {
  auto loops = find_loops(m);
  if (!loops.empty()) {
    std::string list;
    for (Element e : loops) list += (list.empty() ? "" : ",") + std::to_string(e);
    throw InputError(what + " has loop element(s) {" + list +
                     "}; a loop can never be colored");
  }
}

struct AxiomReport {
  bool ok = true;
  std::string axiom;       // "empty-set", "subset", "exchange" or "circuit"
  std::string detail;      // human-readable counterexample
  std::vector<ElementSet> witness;
};

inline constexpr std::size_t kDefaultAxiomBound = 12;

// Exhaustive check of the independence and circuit axioms. Costs 2^n oracle
// calls plus table work, so the ground set size is capped.
template <IndependenceOracle M>
AxiomReport axiom_check(const M& m, std::size_t bound = kDefaultAxiomBound) {
  const std::size_t n = m.ground_size();
  if (n > bound || n > 24) {
    throw BoundExceeded("axiom_check: ground set of size " + std::to_string(n) +
                        " exceeds bound " + std::to_string(std::min<std::size_t>(bound, 24)));
  }
  const std::uint64_t total = std::uint64_t{1} << n;
  std::vector<char> indep(total);
  for (std::uint64_t s = 0; s < total; ++s) {
    indep[s] = m.is_independent(ElementSet::from_mask(n, s)) ? 1 : 0;
  }
  auto set_of = [n](std::uint64_t s) { return ElementSet::from_mask(n, s); };
  AxiomReport report;
  auto fail = [&](std::string axiom, std::string detail, std::vector<std::uint64_t> sets) {
    report.ok = false;
    report.axiom = std::move(axiom);
    report.detail = std::move(detail);
    for (auto s : sets) report.witness.push_back(set_of(s));
    return report;
  };

  if (!indep[0]) return fail("empty-set", "the empty set is dependent", {0});

  // Downward closure reduces to single-element steps: a dependent set must
  // not become independent by adding one element.
  for (std::uint64_t s = 0; s < total; ++s) {
    if (indep[s]) continue;
    for (std::size_t y = 0; y < n; ++y) {
      const std::uint64_t bit = std::uint64_t{1} << y;
      if (!(s & bit) && indep[s | bit]) {
        return fail("subset",
                    "dependent " + set_of(s).to_string() + " is a subset of independent " +
                        set_of(s | bit).to_string(),
                    {s, s | bit});
      }
    }
  }

  // With downward closure, exchange for |J| = |I| + 1 implies the general form.
  for (std::uint64_t i = 0; i < total; ++i) {
    if (!indep[i]) continue;
    const int isize = std::popcount(i);
    for (std::uint64_t j = 0; j < total; ++j) {
      if (!indep[j] || std::popcount(j) != isize + 1) continue;
      bool found = false;
      for (std::uint64_t rest = j & ~i; rest; rest &= rest - 1) {
        if (indep[i | (rest & -rest)]) {
          found = true;
          break;
        }
      }
      if (!found) {
        return fail("exchange",
                    "no element of " + set_of(j).to_string() + " extends " +
                        set_of(i).to_string(),
                    {i, j});
      }
    }
  }

  std::vector<std::uint64_t> circuits;
  for (std::uint64_t s = 1; s < total; ++s) {
    if (indep[s]) continue;
    bool minimal = true;
    for (std::uint64_t rest = s; rest; rest &= rest - 1) {
      if (!indep[s & ~(rest & -rest)]) {
        minimal = false;
        break;
      }
    }
    if (minimal) circuits.push_back(s);
  }
  for (std::size_t a = 0; a < circuits.size(); ++a) {
    for (std::size_t b = a + 1; b < circuits.size(); ++b) {
      const std::uint64_t common = circuits[a] & circuits[b];
      for (std::uint64_t rest = common; rest; rest &= rest - 1) {
        const std::uint64_t merged = (circuits[a] | circuits[b]) & ~(rest & -rest);
        if (indep[merged]) {
          return fail("circuit",
                      "circuits " + set_of(circuits[a]).to_string() + " and " +
                          set_of(circuits[b]).to_string() +
                          " admit no circuit in their union minus a shared element",
                      {circuits[a], circuits[b]});
        }
      }
    }
  }
  return report;
}

}  // namespace mchroma
