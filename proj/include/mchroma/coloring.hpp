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

#include <string>
#include <vector>

#include "mchroma/element_set.hpp"
#include "mchroma/errors.hpp"
#include "mchroma/matroid.hpp"

namespace mchroma {

// Total map from elements to {0, 1, ..., num_colors}; 0 means uncolored.
// Colors are 1-based to match the color nodes of the exchange digraph.
class Coloring {
 public:
  Coloring() = default;
  Coloring(std::size_t n, int num_colors)
      : assignment_(n, 0), num_colors_(num_colors) {
    if (num_colors < 0) throw InputError("palette size must be non-negative");
  }
  Coloring(std::vector<int> assignment, int num_colors)
      : assignment_(std::move(assignment)), num_colors_(num_colors) {
    for (std::size_t x = 0; x < assignment_.size(); ++x) {
      if (assignment_[x] < 0 || assignment_[x] > num_colors_) {
        throw InputError("element " + std::to_string(x) + " has color " +
                         std::to_string(assignment_[x]) + " outside palette 0.." +
                         std::to_string(num_colors_));
      }
    }
  }

  std::size_t size() const { return assignment_.size(); }
  int num_colors() const { return num_colors_; }
  const std::vector<int>& assignment() const { return assignment_; }

  int color_of(Element x) const { return assignment_.at(static_cast<std::size_t>(x)); }
  void set(Element x, int color) {
    if (color < 0 || color > num_colors_) {
      throw InputError("color " + std::to_string(color) + " outside palette 0.." +
                       std::to_string(num_colors_));
    }
    assignment_.at(static_cast<std::size_t>(x)) = color;
  }
  bool is_colored(Element x) const { return color_of(x) != 0; }

  ElementSet color_class(int color) const {
    ElementSet s(assignment_.size());
    for (std::size_t x = 0; x < assignment_.size(); ++x) {
      if (assignment_[x] == color) s.insert(static_cast<Element>(x));
    }
    return s;
  }
  ElementSet uncolored() const { return color_class(0); }

  std::size_t colored_count() const {
    std::size_t k = 0;
    for (int c : assignment_) k += c != 0;
    return k;
  }
  bool is_total() const { return colored_count() == assignment_.size(); }

  // Number of nonempty color classes.
  int colors_used() const {
    std::vector<char> seen(static_cast<std::size_t>(num_colors_) + 1, 0);
    int used = 0;
    for (int c : assignment_) {
      if (c != 0 && !seen[c]) {
        seen[c] = 1;
        ++used;
      }
    }
    return used;
  }

  bool operator==(const Coloring&) const = default;

 private:
  std::vector<int> assignment_;
  int num_colors_ = 0;
};

struct MatroidVerdict {
  bool feasible = true;
  std::vector<int> dependent_classes;  // colors whose class is dependent
};

struct VerifyReport {
  std::vector<MatroidVerdict> per_matroid;
  ElementSet uncolored;

  bool feasible() const {
    for (const auto& v : per_matroid) {
      if (!v.feasible) return false;
    }
    return true;
  }
};

template <IndependenceOracle M>
MatroidVerdict verify_against(const M& m, const Coloring& c) {
  if (m.ground_size() != c.size()) {
    throw InputError("coloring has " + std::to_string(c.size()) +
                     " elements, matroid has " + std::to_string(m.ground_size()));
  }
  MatroidVerdict verdict;
  for (int color = 1; color <= c.num_colors(); ++color) {
    ElementSet cls = c.color_class(color);
    if (cls.empty()) continue;
    if (!m.is_independent(cls)) {
      verdict.feasible = false;
      verdict.dependent_classes.push_back(color);
    }
  }
  return verdict;
}

template <IndependenceOracle M>
VerifyReport verify_coloring(const std::vector<M>& ms, const Coloring& c) {
  VerifyReport report;
  report.uncolored = c.uncolored();
  for (const auto& m : ms) report.per_matroid.push_back(verify_against(m, c));
  return report;
}

}  // namespace mchroma
