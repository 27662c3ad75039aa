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

#include <functional>
#include <string>
#include <vector>

#include "mchroma/element_set.hpp"
#include "mchroma/errors.hpp"
#include "mchroma/matroid.hpp"

namespace mchroma {

using IndependenceTest = std::function<bool(const ElementSet&)>;

inline constexpr std::size_t kDefaultBruteBound = 10;

namespace detail {

// Can elements 0..n-1 be split into at most k classes independent under
// every test? Classes are opened in order of their smallest element, so each
// set partition is visited once.
inline bool brute_colorable(std::size_t n, const std::vector<IndependenceTest>& tests,
                            int k, std::vector<ElementSet>& classes, std::size_t next) {
  if (next == n) return true;
  const auto x = static_cast<Element>(next);
  auto fits = [&](const ElementSet& s) {
    for (const auto& t : tests) {
      if (!t(s)) return false;
    }
    return true;
  };
  // Indexed: deeper calls push_back, which may reallocate.
  for (std::size_t i = 0; i < classes.size(); ++i) {
    ElementSet trial = classes[i].with(x);
    if (!fits(trial)) continue;
    std::swap(classes[i], trial);
    if (brute_colorable(n, tests, k, classes, next + 1)) return true;
    std::swap(classes[i], trial);
  }
  if (static_cast<int>(classes.size()) < k) {
    classes.push_back(ElementSet(n, {x}));
    if (brute_colorable(n, tests, k, classes, next + 1)) return true;
    classes.pop_back();
  }
  return false;
}

}  // namespace detail

// Exact minimum number of classes in a partition of {0..n-1} into sets that
// pass every test. Exponential; refuses n above `max_n`.
inline int brute_chromatic(std::size_t n, const std::vector<IndependenceTest>& tests,
                           std::size_t max_n = kDefaultBruteBound) {
  if (n > max_n) {
    throw BoundExceeded("brute_chromatic: ground set of size " + std::to_string(n) +
                        " exceeds bound " + std::to_string(max_n));
  }
  if (n == 0) return 0;
  for (std::size_t x = 0; x < n; ++x) {
    const ElementSet single(n, {static_cast<Element>(x)});
    for (const auto& t : tests) {
      if (!t(single)) {
        throw InputError("brute_chromatic: element " + std::to_string(x) +
                         " is a loop; no coloring exists");
      }
    }
  }
  for (int k = 1;; ++k) {
    std::vector<ElementSet> classes;
    classes.reserve(static_cast<std::size_t>(k));
    if (detail::brute_colorable(n, tests, k, classes, 0)) return k;
  }
}

template <IndependenceOracle M>
int brute_chromatic(const std::vector<M>& ms, std::size_t max_n = kDefaultBruteBound) {
  if (ms.empty()) throw InputError("brute_chromatic: need at least one matroid");
  std::vector<IndependenceTest> tests;
  for (const auto& m : ms) {
    if (m.ground_size() != ms.front().ground_size()) {
      throw InputError("brute_chromatic: matroids over different ground sets");
    }
    tests.push_back([&m](const ElementSet& s) { return m.is_independent(s); });
  }
  return brute_chromatic(ms.front().ground_size(), tests, max_n);
}

}  // namespace mchroma
