// Copyright 2026 The palettekit Authors
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

#include <vector>

#include "palettekit/decomposition.hpp"
#include "palettekit/graph.hpp"

namespace palettekit::testing {

MultiGraph complete_graph(int n);
MultiGraph cycle_graph(int n);
MultiGraph path_graph(int n);
MultiGraph star_graph(int leaves);
MultiGraph complete_bipartite(int a, int b);
MultiGraph petersen_graph();

// Cubic, 16 vertices: a center joined to three K4s with one edge subdivided.
MultiGraph cubic_without_perfect_matching();

struct CertifiedGraph {
  MultiGraph graph;
  RegularDecomposition3 certificate;
};

// K7 as two K4s sharing vertex 0 plus a K3,3 on the remaining six vertices.
CertifiedGraph k7_three_cubic_parts();

// Quartic graph on 34 vertices with a perfect matching but no two disjoint
// ones, together with three 2-regular parts made of even cycles.
CertifiedGraph quartic_greedy_h0_witness();

// All simple graphs from a graph6 file under tests/data.
std::vector<MultiGraph> load_data(const char* name);

}  // namespace palettekit::testing
