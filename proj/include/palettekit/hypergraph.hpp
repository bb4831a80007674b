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

#include <string>
#include <vector>

#include "palettekit/coloring.hpp"
#include "palettekit/graph.hpp"
#include "palettekit/limits.hpp"

namespace palettekit {

using HyperedgeId = int;

// Hypergraph with loops (size-1 hyperedges) and parallel hyperedges.
// Hyperedge ids are positions in hyperedges.
struct Hypergraph {
  std::vector<Palette> vertices;              // labels
  std::vector<std::vector<int>> hyperedges;   // sorted vertex indices

  int order() const { return static_cast<int>(vertices.size()); }

  // Hyperedges incident with vertex v, increasing. A loop counts once.
  std::vector<HyperedgeId> star(int v) const;

  // Nonempty hyperedges over declared vertices.
  bool well_formed() const;
};

// One vertex per distinct palette (lexicographic), one hyperedge per used
// color (increasing) holding the palettes that contain it.
Hypergraph associated_hypergraph(const MultiGraph& g, const EdgeColoring& c);

bool pairwise_intersecting(const Hypergraph& h);

// f[e] is the hyperedge assigned to edge e of G.
struct HColoring {
  std::vector<HyperedgeId> assignment;
};

// The canonical map e -> h_{c(e)} onto associated_hypergraph(g, c).
HColoring canonical_h_coloring(const MultiGraph& g, const EdgeColoring& c);

struct HColoringReport {
  bool valid = false;
  std::vector<Vertex> violations;  // vertices of G where the condition fails
  std::string reason;              // empty when valid
};

// Every vertex u of G must see pairwise distinct hyperedges and the set of
// them must equal the star of some vertex of H. Unused hyperedges of H are
// allowed.
HColoringReport verify_h_coloring(const MultiGraph& g, const Hypergraph& h,
                                  const HColoring& f);

// Coloring of G that uses hyperedge ids as colors (shifted by one).
EdgeColoring coloring_from_h_coloring(const HColoring& f);

struct HypergraphOrderCertificate {
  int order = 0;
  int s_check = 0;
  Hypergraph hypergraph;
  HColoring h_coloring;
  EdgeColoring coloring;
};

// Builds the associated hypergraph of a minimal-palette coloring together
// with its verified H-coloring; order equals the palette index.
HypergraphOrderCertificate hypergraph_order_bounds(const MultiGraph& g,
                                                   const Limits& limits = {});

// Plain-text adjacency listing: loops, edges and larger hyperedges.
std::string render_hypergraph(const Hypergraph& h);

}  // namespace palettekit
