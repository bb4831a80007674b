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

// Fundamental cycle basis of the cycle space over GF(2), one edge set per
// non-tree edge of a spanning forest. Size is m - n + components.
std::vector<EdgeSubset> fundamental_cycle_basis(const MultiGraph& g);

int cycle_space_dimension(const MultiGraph& g);

// Searches the cycle space for an even subgraph in which every vertex has
// degree at least 2. Throws kResourceLimit if the cycle space dimension
// exceeds limits.max_cycle_space_dim.
std::optional<EdgeSubset> find_spanning_even_subgraph_no_isolated(
    const MultiGraph& g, const Limits& limits = {});

inline bool has_spanning_even_subgraph_no_isolated(const MultiGraph& g,
                                                   const Limits& limits = {}) {
  return find_spanning_even_subgraph_no_isolated(g, limits).has_value();
}

}  // namespace palettekit
