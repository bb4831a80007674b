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
#include "palettekit/even_subgraph.hpp"

#include <gtest/gtest.h>

#include <random>

#include "brute_force.hpp"
#include "fixtures.hpp"
#include "palettekit/error.hpp"

namespace palettekit {
namespace {

using namespace palettekit::testing;

void expect_valid_witness(const MultiGraph& g, const EdgeSubset& s) {
  std::vector<int> deg(g.vertex_count(), 0);
  for (EdgeId e : s) {
    ++deg[g.edge(e).u];
    ++deg[g.edge(e).v];
  }
  for (int d : deg) {
    EXPECT_GE(d, 2);
    EXPECT_EQ(d % 2, 0);
  }
}

TEST(CycleSpace, Dimension) {
  EXPECT_EQ(cycle_space_dimension(petersen_graph()), 6);
  EXPECT_EQ(cycle_space_dimension(path_graph(5)), 0);
  EXPECT_EQ(cycle_space_dimension(complete_graph(5)), 6);
  MultiGraph two(4);
  two.add_edge(0, 1);
  two.add_edge(2, 3);
  two.add_edge(2, 3);
  EXPECT_EQ(cycle_space_dimension(two), 1);
  EXPECT_EQ(fundamental_cycle_basis(complete_graph(5)).size(), 6u);
}

TEST(CycleSpace, BasisElementsAreEven) {
  const MultiGraph g = complete_graph(6);
  for (const EdgeSubset& c : fundamental_cycle_basis(g)) {
    std::vector<int> deg(g.vertex_count(), 0);
    for (EdgeId e : c) {
      ++deg[g.edge(e).u];
      ++deg[g.edge(e).v];
    }
    for (int d : deg) EXPECT_EQ(d % 2, 0);
  }
}

TEST(EvenSubgraph, Examples) {
  const auto c5 = find_spanning_even_subgraph_no_isolated(cycle_graph(5));
  ASSERT_TRUE(c5);
  EXPECT_EQ(c5->size(), 5u);
  EXPECT_FALSE(has_spanning_even_subgraph_no_isolated(star_graph(3)));
  const auto p = find_spanning_even_subgraph_no_isolated(petersen_graph());
  ASSERT_TRUE(p);
  expect_valid_witness(petersen_graph(), *p);
}

TEST(EvenSubgraph, ResourceLimit) {
  Limits tight;
  tight.max_cycle_space_dim = 5;
  try {
    find_spanning_even_subgraph_no_isolated(petersen_graph(), tight);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kResourceLimit);
  }
}

TEST(EvenSubgraph, AgreesWithBruteForce) {
  std::mt19937 rng(9);
  for (int trial = 0; trial < 400; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 7);
    const int m = static_cast<int>(rng() % 13);
    const MultiGraph g = random_graph(rng, n, m, trial % 2 == 0);
    const auto w = find_spanning_even_subgraph_no_isolated(g);
    EXPECT_EQ(w.has_value(), brute_has_even_subgraph_no_isolated(g));
    if (w) expect_valid_witness(g, *w);
  }
}

TEST(EvenSubgraph, CensusAgreesWithBruteForce) {
  for (const MultiGraph& g : load_data("graphs_n1-6.g6")) {
    if (g.edge_count() > 12) continue;
    EXPECT_EQ(has_spanning_even_subgraph_no_isolated(g),
              brute_has_even_subgraph_no_isolated(g));
  }
}

}  // namespace
}  // namespace palettekit
