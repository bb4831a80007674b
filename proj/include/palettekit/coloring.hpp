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

#include <optional>
#include <vector>

#include "palettekit/graph.hpp"
#include "palettekit/limits.hpp"

namespace palettekit {

using Color = int;

// Sorted, duplicate-free set of colors.
using Palette = std::vector<Color>;

// colors[e] is the color of edge e. Colors are positive integers and need
// not be contiguous.
struct EdgeColoring {
  std::vector<Color> colors;

  // Distinct colors used, increasing.
  std::vector<Color> colorset() const;
  int color_count() const { return static_cast<int>(colorset().size()); }
};

bool is_proper(const MultiGraph& g, const EdgeColoring& c);

// Throws kImproperColoring if c is not a proper coloring of g.
void require_proper(const MultiGraph& g, const EdgeColoring& c);

Palette palette_at(const MultiGraph& g, const EdgeColoring& c, Vertex v);

struct PaletteSystem {
  std::vector<Palette> palettes;    // distinct, lexicographic order
  std::vector<int> vertex_class;    // vertex -> index into palettes

  int size() const { return static_cast<int>(palettes.size()); }
  std::vector<Vertex> class_members(int j) const;
};

PaletteSystem palettes_of(const MultiGraph& g, const EdgeColoring& c);

int distinct_palette_count(const MultiGraph& g, const EdgeColoring& c);

// Edges whose color lies in x (the subgraph G[X] as an edge set).
EdgeSubset edges_with_colors(const EdgeColoring& c, const std::vector<Color>& x);

enum class ClassLabel { kClass1, kClass2 };

const char* to_string(ClassLabel label);

struct ChromaticIndexResult {
  int chromatic_index = 0;
  EdgeColoring witness;  // colors 1..chromatic_index
  ClassLabel label = ClassLabel::kClass1;
};

// Exact chromatic index by backtracking. Throws kResourceLimit above
// limits.max_edges_chromatic edges.
ChromaticIndexResult chromatic_index(const MultiGraph& g,
                                     const Limits& limits = {});

// Proper coloring with at most k colors (1..k), if one exists.
std::optional<EdgeColoring> find_edge_coloring(const MultiGraph& g, int k,
                                               const Limits& limits = {});

// True when g is k-regular but lacks two disjoint perfect matchings (or any
// perfect matching), so no k-edge-coloring exists.
bool regular_class1_obstructed(const MultiGraph& g, int k);

// Regular and chromatic index equal to the degree. Edgeless graphs count.
bool is_class1_regular(const MultiGraph& g, const Limits& limits = {});

}  // namespace palettekit
