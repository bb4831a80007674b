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
#include "palettekit/hypergraph.hpp"

#include <gtest/gtest.h>

#include <numeric>
#include <random>

#include "brute_force.hpp"
#include "fixtures.hpp"
#include "palettekit/palette_index.hpp"

namespace palettekit {
namespace {

using namespace palettekit::testing;

TEST(AssociatedHypergraph, PathWithTwoPalettes) {
  const MultiGraph g = path_graph(4);
  const Hypergraph h = associated_hypergraph(g, EdgeColoring{{1, 2, 1}});
  EXPECT_EQ(h.vertices, (std::vector<Palette>{{1}, {1, 2}}));
  // h1 joins both palettes, h2 is a loop at {1,2}.
  EXPECT_EQ(h.hyperedges, (std::vector<std::vector<int>>{{0, 1}, {1}}));
  EXPECT_TRUE(pairwise_intersecting(h));
  EXPECT_TRUE(h.well_formed());
}

TEST(AssociatedHypergraph, K4IsThreeLoops) {
  const Hypergraph h = associated_hypergraph(complete_graph(4), EdgeColoring{{1, 2, 3, 3, 2, 1}});
  EXPECT_EQ(h.order(), 1);
  EXPECT_EQ(h.hyperedges, (std::vector<std::vector<int>>{{0}, {0}, {0}}));
  EXPECT_EQ(h.star(0), (std::vector<HyperedgeId>{0, 1, 2}));
}

TEST(AssociatedHypergraph, FiveCycleIsTriangle) {
  const Hypergraph h = associated_hypergraph(cycle_graph(5), EdgeColoring{{1, 2, 1, 2, 3}});
  EXPECT_EQ(h.order(), 3);
  ASSERT_EQ(h.hyperedges.size(), 3u);
  for (const auto& e : h.hyperedges) EXPECT_EQ(e.size(), 2u);
  EXPECT_TRUE(pairwise_intersecting(h));
}

TEST(AssociatedHypergraph, IsolatedVertexIsEmptyPalette) {
  MultiGraph g(3);
  g.add_edge(0, 1);
  const Hypergraph h = associated_hypergraph(g, EdgeColoring{{5}});
  EXPECT_EQ(h.vertices, (std::vector<Palette>{{}, {5}}));
  EXPECT_EQ(h.hyperedges, (std::vector<std::vector<int>>{{1}}));
  EXPECT_TRUE(h.star(0).empty());
}

TEST(PairwiseIntersecting, Examples) {
  Hypergraph two_loops{{{1}, {2}}, {{0}, {1}}};
  EXPECT_FALSE(pairwise_intersecting(two_loops));
  Hypergraph loops{{{1, 2, 3}}, {{0}, {0}, {0}}};
  EXPECT_TRUE(pairwise_intersecting(loops));
}

TEST(HColoring, CanonicalMapIsValid) {
  const MultiGraph g = path_graph(4);
  const EdgeColoring c{{1, 2, 1}};
  const HColoringReport r =
      verify_h_coloring(g, associated_hypergraph(g, c), canonical_h_coloring(g, c));
  EXPECT_TRUE(r.valid) << r.reason;
  EXPECT_TRUE(r.violations.empty());
}

TEST(HColoring, ConstantMapOnFiveCycleFails) {
  const MultiGraph g = cycle_graph(5);
  const Hypergraph loop{{{1}}, {{0}}};
  const HColoringReport r = verify_h_coloring(g, loop, HColoring{{0, 0, 0, 0, 0}});
  EXPECT_FALSE(r.valid);
  EXPECT_EQ(r.violations.size(), 5u);
  EXPECT_FALSE(r.reason.empty());
}

TEST(HColoring, K4OntoThreeLoops) {
  const Hypergraph h{{{1, 2, 3}}, {{0}, {0}, {0}}};
  EXPECT_TRUE(verify_h_coloring(complete_graph(4), h, HColoring{{0, 1, 2, 2, 1, 0}}).valid);
  EXPECT_FALSE(verify_h_coloring(complete_graph(4), h, HColoring{{0, 1, 2, 2, 1, 1}}).valid);
}

TEST(HColoring, UnusedHyperedgesAllowed) {
  const MultiGraph g = path_graph(2);
  // Vertex 0 has star {h0}; vertex 1 has star {h1}, never used.
  const Hypergraph h{{{1}, {2}}, {{0}, {1}}};
  EXPECT_TRUE(verify_h_coloring(g, h, HColoring{{0}}).valid);
}

TEST(HColoring, RejectsWrongLengthAndBadIds) {
  const MultiGraph g = path_graph(3);
  const Hypergraph h{{{1, 2}, {1}}, {{0, 1}, {0}}};
  EXPECT_FALSE(verify_h_coloring(g, h, HColoring{{0}}).valid);
  EXPECT_FALSE(verify_h_coloring(g, h, HColoring{{0, 7}}).valid);
}

TEST(HColoring, InducedColoringRoundTrip) {
  const HColoring f{{0, 2, 1}};
  EXPECT_EQ(coloring_from_h_coloring(f).colors, (std::vector<Color>{1, 3, 2}));
}

TEST(OrderBounds, Examples) {
  EXPECT_EQ(hypergraph_order_bounds(complete_graph(4)).order, 1);
  EXPECT_EQ(hypergraph_order_bounds(path_graph(4)).order, 2);
  const auto k3 = hypergraph_order_bounds(complete_graph(3));
  EXPECT_EQ(k3.order, 3);
  EXPECT_EQ(k3.s_check, 3);
  EXPECT_TRUE(verify_h_coloring(complete_graph(3), k3.hypergraph, k3.h_coloring).valid);
}

TEST(OrderBounds, OrderEqualsPaletteCount) {
  std::mt19937 rng(47);
  for (int trial = 0; trial < 200; ++trial) {
    const MultiGraph g = random_graph(rng, 6, 1 + static_cast<int>(rng() % 10), false);
    std::vector<Color> colors(g.edge_count());
    std::iota(colors.begin(), colors.end(), 1);
    const EdgeColoring c = trial % 2 ? reduce_colors(g, EdgeColoring{colors}) : EdgeColoring{colors};
    EXPECT_EQ(associated_hypergraph(g, c).order(), distinct_palette_count(g, c));
  }
}

// Valid H-colorings built from arbitrary proper colorings, with hyperedge ids
// shuffled and unused hyperedges and vertices added, never induce more
// palettes than H has vertices.
TEST(OrderBounds, InducedPalettesNeverExceedOrder) {
  std::mt19937 rng(53);
  for (int trial = 0; trial < 100; ++trial) {
    const MultiGraph g = random_graph(rng, 6, 2 + static_cast<int>(rng() % 9), false);
    std::vector<Color> colors(g.edge_count());
    std::iota(colors.begin(), colors.end(), 1);
    const EdgeColoring c = reduce_colors(g, EdgeColoring{colors});
    Hypergraph h = associated_hypergraph(g, c);
    HColoring f = canonical_h_coloring(g, c);
    std::vector<int> perm(h.hyperedges.size());
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    std::vector<std::vector<int>> shuffled(h.hyperedges.size());
    for (std::size_t i = 0; i < perm.size(); ++i) shuffled[perm[i]] = h.hyperedges[i];
    h.hyperedges = shuffled;
    for (auto& x : f.assignment) x = perm[x];
    h.vertices.push_back({100 + trial});
    h.hyperedges.push_back({h.order() - 1});
    const HColoringReport r = verify_h_coloring(g, h, f);
    ASSERT_TRUE(r.valid) << r.reason;
    const EdgeColoring induced = coloring_from_h_coloring(f);
    EXPECT_TRUE(is_proper(g, induced));
    EXPECT_LE(distinct_palette_count(g, induced), h.order());
  }
}

TEST(Render, LoopsAndEdges) {
  const Hypergraph h = associated_hypergraph(path_graph(4), EdgeColoring{{1, 2, 1}});
  EXPECT_EQ(render_hypergraph(h),
            "vertices: P1{1} P2{1,2}\n"
            "h1 edge P1{1} - P2{1,2}\n"
            "h2 loop at P2{1,2}\n");
}

}  // namespace
}  // namespace palettekit
