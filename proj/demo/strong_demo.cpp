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

// Strong coloring of a 5-cycle against a partition matroid on its vertices.

#include <iostream>

#include "mchroma/mchroma.hpp"

int main() {
  using namespace mchroma;
  SimpleGraph cycle(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}});
  Matroid departments = Matroid::partition(5, {{0, 2}, {1, 3, 4}});

  auto res = strong_color(cycle, departments);
  std::cout << "max degree " << cycle.max_degree() << ", " << res.matchings.size()
            << " matchings, " << res.coloring.colors_used() << " colors\n";
  for (int v = 0; v < cycle.num_vertices(); ++v) {
    std::cout << "  vertex " << v << " -> " << res.coloring.color_of(v) << "\n";
  }
  return 0;
}
