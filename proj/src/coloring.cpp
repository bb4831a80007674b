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
#include "palettekit/coloring.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <string>

#include "palettekit/error.hpp"
#include "palettekit/matching.hpp"

namespace palettekit {

std::vector<Color> EdgeColoring::colorset() const {
  std::vector<Color> out = colors;
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool is_proper(const MultiGraph& g, const EdgeColoring& c) {
  if (static_cast<int>(c.colors.size()) != g.edge_count()) return false;
  for (Color x : c.colors) {
    if (x <= 0) return false;
  }
  std::vector<Color> seen;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    seen.clear();
    for (EdgeId e : g.incident(v)) seen.push_back(c.colors[e]);
    std::sort(seen.begin(), seen.end());
    if (std::adjacent_find(seen.begin(), seen.end()) != seen.end()) return false;
  }
  return true;
}

void require_proper(const MultiGraph& g, const EdgeColoring& c) {
  if (static_cast<int>(c.colors.size()) != g.edge_count()) {
    throw Error(ErrorKind::kImproperColoring,
                "coloring has " + std::to_string(c.colors.size()) +
                    " entries for " + std::to_string(g.edge_count()) +
                    " edges");
  }
  if (!is_proper(g, c)) {
    throw Error(ErrorKind::kImproperColoring,
                "incident edges share a color or a color is not positive");
  }
}

Palette palette_at(const MultiGraph& g, const EdgeColoring& c, Vertex v) {
  Palette p;
  for (EdgeId e : g.incident(v)) p.push_back(c.colors[e]);
  std::sort(p.begin(), p.end());
  p.erase(std::unique(p.begin(), p.end()), p.end());
  return p;
}

std::vector<Vertex> PaletteSystem::class_members(int j) const {
  std::vector<Vertex> out;
  for (Vertex v = 0; v < static_cast<int>(vertex_class.size()); ++v) {
    if (vertex_class[v] == j) out.push_back(v);
  }
  return out;
}

PaletteSystem palettes_of(const MultiGraph& g, const EdgeColoring& c) {
  require_proper(g, c);
  std::map<Palette, int> index;  // lexicographic on sorted color lists
  std::vector<Palette> per_vertex(g.vertex_count());
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    per_vertex[v] = palette_at(g, c, v);
    index.emplace(per_vertex[v], 0);
  }
  PaletteSystem ps;
  for (auto& [palette, id] : index) {
    id = static_cast<int>(ps.palettes.size());
    ps.palettes.push_back(palette);
  }
  ps.vertex_class.resize(g.vertex_count());
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    ps.vertex_class[v] = index.at(per_vertex[v]);
  }
  return ps;
}

int distinct_palette_count(const MultiGraph& g, const EdgeColoring& c) {
  return palettes_of(g, c).size();
}

EdgeSubset edges_with_colors(const EdgeColoring& c,
                             const std::vector<Color>& x) {
  EdgeSubset out;
  for (EdgeId e = 0; e < static_cast<int>(c.colors.size()); ++e) {
    if (std::find(x.begin(), x.end(), c.colors[e]) != x.end()) out.push_back(e);
  }
  return out;
}

const char* to_string(ClassLabel label) {
  return label == ClassLabel::kClass1 ? "Class1" : "Class2";
}

namespace {

using Mask = std::uint64_t;

// Backtracking k-edge-coloring. Picks the uncolored edge with the fewest
// admissible colors; only one unused color is ever tried at a node, since
// unused colors are interchangeable.
class EdgeColoringSearch {
 public:
  EdgeColoringSearch(const MultiGraph& g, int k)
      : g_(g), k_(k), color_(g.edge_count(), 0), used_(g.vertex_count(), 0),
        left_(g.vertex_count(), 0) {
    for (Vertex v = 0; v < g.vertex_count(); ++v) left_[v] = g.degree(v);
  }

  bool run() { return recurse(g_.edge_count(), 0); }
  const std::vector<int>& colors() const { return color_; }

 private:
  Mask all() const { return k_ == 64 ? ~Mask{0} : (Mask{1} << k_) - 1; }

  bool recurse(int remaining, int max_used) {
    if (remaining == 0) return true;
    EdgeId pick = -1;
    int best = k_ + 1;
    for (EdgeId e = 0; e < g_.edge_count(); ++e) {
      if (color_[e]) continue;
      const Edge& ed = g_.edge(e);
      const int avail =
          std::popcount(all() & ~(used_[ed.u] | used_[ed.v]));
      if (avail < best) {
        best = avail;
        pick = e;
        if (avail == 0) return false;
      }
    }
    const Edge& ed = g_.edge(pick);
    Mask avail = all() & ~(used_[ed.u] | used_[ed.v]);
    for (int col = 1; col <= std::min(k_, max_used + 1); ++col) {
      const Mask bit = Mask{1} << (col - 1);
      if (!(avail & bit)) continue;
      assign(pick, col, bit);
      const bool ok = fits(ed.u) && fits(ed.v) &&
                      recurse(remaining - 1, std::max(max_used, col));
      if (ok) return true;
      unassign(pick, bit);
    }
    return false;
  }

  bool fits(Vertex v) const {
    return left_[v] <= k_ - std::popcount(used_[v]);
  }

  void assign(EdgeId e, int col, Mask bit) {
    color_[e] = col;
    const Edge& ed = g_.edge(e);
    used_[ed.u] |= bit;
    used_[ed.v] |= bit;
    --left_[ed.u];
    --left_[ed.v];
  }

  void unassign(EdgeId e, Mask bit) {
    color_[e] = 0;
    const Edge& ed = g_.edge(e);
    used_[ed.u] &= ~bit;
    used_[ed.v] &= ~bit;
    ++left_[ed.u];
    ++left_[ed.v];
  }

  const MultiGraph& g_;
  int k_;
  std::vector<int> color_;
  std::vector<Mask> used_;
  std::vector<int> left_;
};

void require_chromatic_cap(const MultiGraph& g, const Limits& limits) {
  if (g.edge_count() > limits.max_edges_chromatic) {
    throw Error(ErrorKind::kResourceLimit,
                "chromatic index search capped at " +
                    std::to_string(limits.max_edges_chromatic) + " edges, got " +
                    std::to_string(g.edge_count()));
  }
}

}  // namespace

bool regular_class1_obstructed(const MultiGraph& g, int k) {
  if (k <= 0 || is_regular(g) != k) return false;
  // Each of the k color classes would be a perfect matching.
  if (!has_perfect_matching(g)) return true;
  return k >= 2 && !has_two_disjoint_perfect_matchings(g);
}

std::optional<EdgeColoring> find_edge_coloring(const MultiGraph& g, int k,
                                               const Limits& limits) {
  require_chromatic_cap(g, limits);
  if (g.edge_count() == 0) return EdgeColoring{};
  if (k <= 0 || k < degree_profile(g).max_degree) return std::nullopt;
  k = std::min(k, g.edge_count());
  if (k > 64) {
    throw Error(ErrorKind::kResourceLimit, "more than 64 colors requested");
  }
  if (regular_class1_obstructed(g, k)) return std::nullopt;
  EdgeColoringSearch search(g, k);
  if (!search.run()) return std::nullopt;
  return EdgeColoring{search.colors()};
}

ChromaticIndexResult chromatic_index(const MultiGraph& g, const Limits& limits) {
  require_chromatic_cap(g, limits);
  ChromaticIndexResult r;
  if (g.edge_count() == 0) return r;
  const int max_degree = degree_profile(g).max_degree;
  const int upper = max_degree + g.max_multiplicity();
  for (int k = max_degree; k <= upper; ++k) {
    if (auto c = find_edge_coloring(g, k, limits)) {
      r.chromatic_index = k;
      r.witness = std::move(*c);
      r.label = k == max_degree ? ClassLabel::kClass1 : ClassLabel::kClass2;
      return r;
    }
  }
  throw Error(ErrorKind::kInvalidArgument,
              "no coloring within the Vizing bound; search is broken");
}

bool is_class1_regular(const MultiGraph& g, const Limits& limits) {
  const auto r = is_regular(g);
  if (!r) return false;
  if (*r == 0) return true;
  return find_edge_coloring(g, *r, limits).has_value();
}

}  // namespace palettekit
