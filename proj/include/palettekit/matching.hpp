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

#include <functional>
#include <optional>

#include "palettekit/graph.hpp"

namespace palettekit {

// Exact perfect-matching search by backtracking on the lowest unmatched
// vertex. Exponential in the worst case; intended for small graphs.
// The returned witness has been revalidated.
std::optional<EdgeSubset> find_perfect_matching(const MultiGraph& g);

inline bool has_perfect_matching(const MultiGraph& g) {
  return find_perfect_matching(g).has_value();
}

// Calls visit on every perfect matching (edge ids, increasing) until it
// returns false. Parallel edges yield distinct matchings.
void for_each_perfect_matching(
    const MultiGraph& g, const std::function<bool(const EdgeSubset&)>& visit);

bool is_perfect_matching(const MultiGraph& g, const EdgeSubset& m);

// True iff g has two edge-disjoint perfect matchings.
bool has_two_disjoint_perfect_matchings(const MultiGraph& g);

}  // namespace palettekit
