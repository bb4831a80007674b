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

#include "palettekit/coloring.hpp"
#include "palettekit/graph.hpp"
#include "palettekit/limits.hpp"

namespace palettekit {

struct PaletteIndexResult {
  int s_check = 0;
  int k_min = 0;
  EdgeColoring coloring;
};

// Exact palette index with a minimal-color witness.
//
// For t = 1, 2, ... the search decides whether some proper coloring with at
// most t distinct palettes exists using at most min(t * max_degree, m)
// colors. Every color of such a coloring sits in one of the t palettes, each
// of size at most max_degree, so the budget loses nothing. For the first
// feasible t the color count is then minimized. The witness is the
// lexicographically smallest color vector (in edge id order) among the
// colorings with s_check palettes and k_min colors whose colors appear in
// first-use order. A single palette on a regular graph is refuted up front
// when two disjoint perfect matchings do not exist.
//
// Edgeless graphs have palette index 1 (every vertex has the empty palette).
// Throws kResourceLimit above limits.max_edges_palette edges.
PaletteIndexResult palette_index(const MultiGraph& g, const Limits& limits = {});

// Whether a proper coloring with at most max_palettes distinct palettes and
// at most max_colors colors exists; the lexicographically first one if so.
std::optional<EdgeColoring> find_palette_coloring(const MultiGraph& g,
                                                  int max_palettes,
                                                  int max_colors);

// Brute-force ground truth, written independently of palette_index: walks
// every proper coloring up to relabeling of colors. Throws kResourceLimit
// above limits.max_edges_oracle edges.
int palette_index_oracle(const MultiGraph& g, const Limits& limits = {});

// Merges color classes whose union is a matching (no palette holds both
// colors) until none is left: the lower color absorbs the higher one, lowest
// pair first. Never increases the number of distinct palettes.
EdgeColoring reduce_colors(const MultiGraph& g, const EdgeColoring& c);

struct LowerBoundCheck {
  bool applicable = false;
  bool satisfied = true;
  int s_check = 0;  // 0 when not applicable
  int min_degree = 0;
};

// If max degree >= 2 and g has no spanning even subgraph without isolated
// vertices, the palette index exceeds the minimum degree.
LowerBoundCheck check_lower_bound_theorem(const MultiGraph& g,
                                          const Limits& limits = {});

}  // namespace palettekit
