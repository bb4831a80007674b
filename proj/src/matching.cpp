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
#include "palettekit/matching.hpp"

#include <algorithm>

namespace palettekit {
namespace {

class MatchingSearch {
 public:
  MatchingSearch(const MultiGraph& g,
                 const std::function<bool(const EdgeSubset&)>& visit)
      : g_(g), visit_(visit), matched_(g.vertex_count(), 0) {}

  void run() {
    if (g_.vertex_count() % 2 != 0) return;
    recurse(0);
  }

 private:
  // Returns false once the visitor asked to stop.
  bool recurse(Vertex from) {
    Vertex v = from;
    while (v < g_.vertex_count() && matched_[v]) ++v;
    if (v == g_.vertex_count()) {
      EdgeSubset m = chosen_;
      std::sort(m.begin(), m.end());
      return visit_(m);
    }
    matched_[v] = 1;
    for (EdgeId e : g_.incident(v)) {
      Vertex w = g_.edge(e).other(v);
      if (matched_[w]) continue;
      matched_[w] = 1;
      chosen_.push_back(e);
      const bool go_on = recurse(v + 1);
      chosen_.pop_back();
      matched_[w] = 0;
      if (!go_on) {
        matched_[v] = 0;
        return false;
      }
    }
    matched_[v] = 0;
    return true;
  }

  const MultiGraph& g_;
  const std::function<bool(const EdgeSubset&)>& visit_;
  std::vector<char> matched_;
  EdgeSubset chosen_;
};

MultiGraph without_edges(const MultiGraph& g, const EdgeSubset& removed) {
  std::vector<char> drop(g.edge_count(), 0);
  for (EdgeId e : removed) drop[e] = 1;
  MultiGraph out(g.vertex_count());
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    if (!drop[e]) out.add_edge(g.edge(e).u, g.edge(e).v);
  }
  return out;
}

}  // namespace

void for_each_perfect_matching(
    const MultiGraph& g, const std::function<bool(const EdgeSubset&)>& visit) {
  MatchingSearch(g, visit).run();
}

bool is_perfect_matching(const MultiGraph& g, const EdgeSubset& m) {
  if (!subset_valid_for(g, m)) return false;
  std::vector<int> hits(g.vertex_count(), 0);
  for (EdgeId e : m) {
    ++hits[g.edge(e).u];
    ++hits[g.edge(e).v];
  }
  return std::all_of(hits.begin(), hits.end(), [](int h) { return h == 1; });
}

std::optional<EdgeSubset> find_perfect_matching(const MultiGraph& g) {
  std::optional<EdgeSubset> found;
  for_each_perfect_matching(g, [&](const EdgeSubset& m) {
    found = m;
    return false;
  });
  if (found && !is_perfect_matching(g, *found)) return std::nullopt;
  return found;
}

bool has_two_disjoint_perfect_matchings(const MultiGraph& g) {
  bool found = false;
  for_each_perfect_matching(g, [&](const EdgeSubset& m) {
    found = has_perfect_matching(without_edges(g, m));
    return !found;
  });
  return found;
}

}  // namespace palettekit
