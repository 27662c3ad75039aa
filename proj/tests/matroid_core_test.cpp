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

#include <gtest/gtest.h>

#include <cstdint>
#include <vector>

#include "test_util.hpp"

namespace mchroma {
namespace {

using namespace mchroma::testing;

// Acyclicity by repeated leaf stripping; independent of union-find.
bool is_forest(int vertices, const std::vector<std::pair<int, int>>& edges, std::uint64_t mask) {
  std::vector<std::pair<int, int>> sel;
  for (std::size_t i = 0; i < edges.size(); ++i) {
    if (mask >> i & 1) sel.push_back(edges[i]);
  }
  bool changed = true;
  while (changed && !sel.empty()) {
    changed = false;
    std::vector<int> deg(static_cast<std::size_t>(vertices), 0);
    for (auto [u, v] : sel) {
      ++deg[u];
      ++deg[v];
    }
    for (std::size_t i = 0; i < sel.size(); ++i) {
      if (sel[i].first != sel[i].second && (deg[sel[i].first] == 1 || deg[sel[i].second] == 1)) {
        sel.erase(sel.begin() + static_cast<long>(i));
        changed = true;
        break;
      }
    }
  }
  return sel.empty();
}

// Hall's condition checked over every subset.
bool hall_matchable(const std::vector<std::vector<int>>& adj, std::uint64_t mask) {
  for (std::uint64_t t = mask;; t = (t - 1) & mask) {
    std::uint64_t nb = 0;
    for (std::size_t i = 0; i < adj.size(); ++i) {
      if (t >> i & 1) {
        for (int r : adj[i]) nb |= std::uint64_t{1} << r;
      }
    }
    if (std::popcount(nb) < std::popcount(t)) return false;
    if (t == 0) break;
  }
  return true;
}

Matroid explicit_from(const PartitionStructure& p) {
  const std::size_t n = p.ground_size();
  std::vector<std::vector<Element>> sets;
  for (std::uint64_t s = 0; s < (std::uint64_t{1} << n); ++s) {
    auto es = ElementSet::from_mask(n, s);
    if (p.is_independent(es)) sets.push_back(es.to_vector());
  }
  return Matroid::explicit_sets(n, sets);
}

TEST(IsIndependent, LaminarExample) {
  const Matroid m = laminar_example();
  EXPECT_TRUE(m.is_independent(ElementSet(6, {x3, x5})));
  EXPECT_FALSE(m.is_independent(ElementSet(6, {x5, x6})));
  EXPECT_TRUE(m.is_independent(ElementSet(6)));
}

TEST(IsIndependent, EmptySetIndependentInEveryFamily) {
  std::vector<Matroid> ms{
      Matroid::uniform(3, 1),
      Matroid::partition(3, {{0, 1}, {2}}),
      laminar_example(),
      Matroid::graphic(3, {{0, 1}, {1, 2}, {0, 2}}),
      Matroid::transversal(2, {{0}, {0, 1}, {1}}),
      Matroid::explicit_sets(2, {{}, {0}}),
  };
  for (const auto& m : ms) {
    EXPECT_TRUE(m.is_independent(ElementSet(m.ground_size()))) << matroid_kind_name(m.kind());
  }
}

TEST(IsIndependent, OutOfRangeIsInputError) {
  const Matroid m = laminar_example();
  EXPECT_THROW(ElementSet(6, {6}), InputError);
  EXPECT_THROW(m.is_independent(ElementSet(7, {0})), InputError);
}

TEST(IsIndependent, CountsOracleCalls) {
  const Matroid m = laminar_example();
  m.reset_oracle_calls();
  m.is_independent(ElementSet(6));
  m.is_independent(ElementSet(6, {x1}));
  EXPECT_EQ(m.oracle_calls(), 2u);
  Matroid copy = m;
  EXPECT_EQ(copy.oracle_calls(), 2u);
}

TEST(IsIndependent, GraphicMatchesLeafStripping) {
  Rng rng(7);
  for (int trial = 0; trial < 20; ++trial) {
    const int v = rng.range(2, 5);
    const int e = rng.range(0, 8);
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < e; ++i) edges.emplace_back(rng.range(0, v - 1), rng.range(0, v - 1));
    const Matroid m = Matroid::graphic(v, edges);
    for (std::uint64_t s = 0; s < (std::uint64_t{1} << e); ++s) {
      ASSERT_EQ(m.is_independent(ElementSet::from_mask(static_cast<std::size_t>(e), s)),
                is_forest(v, edges, s));
    }
  }
}

TEST(IsIndependent, TransversalMatchesHall) {
  Rng rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    const int n = rng.range(1, 8);
    const Matroid m = gen::random_transversal(rng, n);
    const auto& adj = m.get_if<TransversalStructure>()->adjacency();
    for (std::uint64_t s = 0; s < (std::uint64_t{1} << n); ++s) {
      ASSERT_EQ(m.is_independent(ElementSet::from_mask(static_cast<std::size_t>(n), s)),
                hall_matchable(adj, s));
    }
  }
}

TEST(Structures, ValidationErrors) {
  EXPECT_THROW(PartitionStructure(3, {{0, 1}, {1, 2}}), ValidationError);
  EXPECT_THROW(PartitionStructure(3, {{0, 1}}), ValidationError);
  EXPECT_THROW(PartitionStructure(2, {{0}, {1}}, {1, 0}), ValidationError);
  EXPECT_THROW(LaminarStructure(4, {{0, 1, 2}, {2, 3}}, {2, 1}), ValidationError);
  EXPECT_THROW(GraphicStructure(2, {{0, 2}}), ValidationError);
  EXPECT_THROW(TransversalStructure(1, {{1}}), ValidationError);
}

TEST(Structures, PartitionCapacitiesDefaultToOne) {
  PartitionStructure p(4, {{0, 1}, {2, 3}});
  EXPECT_EQ(p.capacities(), (std::vector<int>{1, 1}));
}

TEST(Rank, Examples) {
  const Matroid m = laminar_example();
  EXPECT_EQ(rank(m, ElementSet::full(6)), 3);
  EXPECT_EQ(rank(m, ElementSet(6)), 0);
}

TEST(Rank, FourCycleAgainstEnumeration) {
  const std::vector<std::pair<int, int>> cycle{{0, 1}, {1, 2}, {2, 3}, {3, 0}};
  int largest = 0;
  for (std::uint64_t s = 0; s < 16; ++s) {
    if (is_forest(4, cycle, s)) largest = std::max(largest, std::popcount(s));
  }
  EXPECT_EQ(largest, 3);
  EXPECT_EQ(rank(Matroid::graphic(4, cycle)), largest);
}

TEST(FindCircuit, LaminarExample) {
  const Matroid m = laminar_example();
  auto c = find_circuit_checked(m, ElementSet(6, {x1, x2, x4}), x3);
  ASSERT_TRUE(c.has_value());
  EXPECT_TRUE(c->contains(x4));

  // Oracle: the minimal dependent subsets of {x1,x2,x3,x4}.
  const ElementSet whole(6, {x1, x2, x3, x4});
  std::vector<ElementSet> minimal;
  for (std::uint64_t s = 1; s < 64; ++s) {
    auto sub = ElementSet::from_mask(6, s);
    if (!sub.is_subset_of(whole) || m.is_independent(sub)) continue;
    bool min = true;
    for (Element e : sub) min = min && m.is_independent(sub.without(e));
    if (min) minimal.push_back(sub);
  }
  ASSERT_EQ(minimal.size(), 1u);
  EXPECT_EQ(minimal.front(), whole);
  EXPECT_EQ(*c, whole);

  EXPECT_FALSE(find_circuit(m, ElementSet(6, {x3, x5}), x1).has_value());
}

TEST(FindCircuit, DependentBaseIsContractError) {
  const Matroid m = laminar_example();
  EXPECT_THROW(find_circuit_checked(m, ElementSet(6, {x5, x6}), x1), ContractError);
  EXPECT_THROW(find_circuit(m, ElementSet(6, {x1}), x1), ContractError);
}

TEST(FindCircuit, PropertiesOnRandomMatroids) {
  Rng rng(3);
  for (int trial = 0; trial < 80; ++trial) {
    const int n = rng.range(1, 9);
    const Matroid m = random_m1(rng, n, trial);
    const auto nn = static_cast<std::size_t>(n);
    for (int rep = 0; rep < 10; ++rep) {
      // random independent set by greedy over a shuffled order
      ElementSet s(nn);
      std::vector<Element> order(nn);
      for (int i = 0; i < n; ++i) order[static_cast<std::size_t>(i)] = i;
      rng.shuffle(order);
      for (Element e : order) {
        if (rng.chance(1, 2) && m.is_independent(s.with(e))) s.insert(e);
      }
      for (int x = 0; x < n; ++x) {
        if (s.contains(x)) continue;
        auto c = find_circuit(m, s, x);
        ASSERT_EQ(!c.has_value(), m.is_independent(s.with(x)));
        if (!c) continue;
        EXPECT_FALSE(m.is_independent(*c));
        for (Element y : *c) EXPECT_TRUE(m.is_independent(c->without(y)));
      }
    }
  }
}

TEST(Rank, MonotoneAndSubmodular) {
  Rng rng(5);
  for (int trial = 0; trial < 12; ++trial) {
    const int n = rng.range(1, 8);
    const Matroid m = random_m1(rng, n, trial);
    const std::uint64_t total = std::uint64_t{1} << n;
    std::vector<int> r(total);
    for (std::uint64_t s = 0; s < total; ++s) {
      r[s] = rank(m, ElementSet::from_mask(static_cast<std::size_t>(n), s));
    }
    for (std::uint64_t a = 0; a < total; ++a) {
      for (std::uint64_t b = 0; b < total; ++b) {
        if ((a & b) == a) {
          ASSERT_LE(r[a], r[b]);
        }
        ASSERT_GE(r[a] + r[b], r[a | b] + r[a & b]);
      }
    }
  }
}

TEST(PartitionChromatic, Examples) {
  EXPECT_EQ(partition_chromatic(partition_example()), 2);
  EXPECT_EQ(partition_chromatic(PartitionStructure(5, {{0, 1, 2, 3, 4}}, {5})), 1);
  EXPECT_EQ(partition_chromatic(PartitionStructure(0, {})), 1);

  PartitionStructure p(10, {{0, 1, 2, 3, 4, 5, 6}, {7, 8, 9}}, {2, 1});
  const Matroid ex = explicit_from(p);
  EXPECT_EQ(brute_chromatic(std::vector<Matroid>{ex}), 4);
  EXPECT_EQ(partition_chromatic(p), 4);
}

TEST(PartitionChromatic, MatchesBruteForce) {
  Rng rng(17);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = rng.range(1, 8);
    auto p = gen::random_partition(rng, n);
    const Matroid ex = explicit_from(p);
    ASSERT_EQ(partition_chromatic(p), brute_chromatic(std::vector<Matroid>{ex}));
  }
}

TEST(AxiomCheck, ShippedFamiliesPass) {
  Rng rng(23);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = rng.range(0, 10);
    std::vector<Matroid> ms{Matroid(gen::random_partition(rng, n)), random_m1(rng, n, trial)};
    for (const auto& m : ms) {
      auto rep = axiom_check(m);
      ASSERT_TRUE(rep.ok) << matroid_kind_name(m.kind()) << ": " << rep.detail;
    }
  }
}

TEST(AxiomCheck, ExplicitExamples) {
  // {∅,{a},{b}}: {a,b} missing, yet all axioms hold (it is U(1,2)).
  EXPECT_TRUE(axiom_check(Matroid::explicit_sets(2, {{}, {0}, {1}})).ok);

  auto rep = axiom_check(Matroid::explicit_sets(2, {{}, {0, 1}}));
  EXPECT_FALSE(rep.ok);
  EXPECT_EQ(rep.axiom, "subset");
  ASSERT_FALSE(rep.witness.empty());
  EXPECT_EQ(rep.witness.front(), ElementSet(2, {0}));

  auto no_empty = axiom_check(Matroid::explicit_sets(1, {{0}}));
  EXPECT_EQ(no_empty.axiom, "empty-set");

  // {∅,{0},{1},{2},{0,1}}: {2} cannot be extended from {0,1}.
  auto exch = axiom_check(Matroid::explicit_sets(3, {{}, {0}, {1}, {2}, {0, 1}}));
  EXPECT_FALSE(exch.ok);
  EXPECT_EQ(exch.axiom, "exchange");
}

TEST(AxiomCheck, RefusesAboveBound) {
  EXPECT_THROW(axiom_check(Matroid::uniform(13, 2)), BoundExceeded);
  EXPECT_TRUE(axiom_check(Matroid::uniform(13, 2), 13).ok);
}

TEST(Loops, RejectsLoops) {
  EXPECT_THROW(require_loop_free(Matroid::uniform(3, 0)), InputError);
  EXPECT_EQ(find_loops(Matroid::graphic(2, {{0, 1}, {1, 1}})), (std::vector<Element>{1}));
  EXPECT_NO_THROW(require_loop_free(laminar_example()));
}

TEST(Restriction, ReindexesElements) {
  const Matroid m = laminar_example();
  Restriction<Matroid> r(m, {x5, x6, x1});
  EXPECT_EQ(r.ground_size(), 3u);
  EXPECT_FALSE(r.is_independent(ElementSet(3, {0, 1})));
  EXPECT_TRUE(r.is_independent(ElementSet(3, {0, 2})));
}

}  // namespace
}  // namespace mchroma
