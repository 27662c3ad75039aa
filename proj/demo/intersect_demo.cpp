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

// Colors a laminar matroid intersected with a partition matroid and prints
// the color classes.

#include <iostream>

#include "mchroma/mchroma.hpp"

int main() {
  using namespace mchroma;
  // Elements 0..5. Nested capacities: {4,5} <= 1, {2,3,4,5} <= 2, all <= 3.
  Matroid m1 = Matroid::laminar(6, {{4, 5}, {2, 3, 4, 5}, {0, 1, 2, 3, 4, 5}}, {1, 2, 3});
  PartitionStructure m2(6, {{0, 5}, {1, 2}, {3, 4}});

  IntersectionInstance<Matroid> inst{m1, {m2}, std::nullopt};
  auto result = color_intersection(inst);

  std::cout << "alpha = " << result.alpha << ", B = " << result.surplus
            << ", palette = " << result.palette() << "\n";
  for (int color = 1; color <= result.coloring.num_colors(); ++color) {
    std::cout << "  class " << color << ": " << result.coloring.color_class(color) << "\n";
  }
  std::cout << "oracle calls on M1: " << inst.m1.oracle_calls() << "\n";
  return 0;
}
