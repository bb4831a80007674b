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
#include "palettekit/palette_index.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <set>
#include <string>
#include <utility>

#include "palettekit/error.hpp"
#include "palettekit/even_subgraph.hpp"

namespace palettekit {
namespace {

using Mask = std::uint64_t;

// Depth-first search over colorings in edge id order, colors tried in
// increasing order and introduced in first-use order. Pruning only removes
// subtrees without a solution, so the first leaf reached is the
// lexicographically smallest feasible coloring.
class PaletteSearch {
 public:
  PaletteSearch(const MultiGraph& g, int max_palettes, int max_colors)
      : g_(g),
        max_palettes_(max_palettes),
        max_colors_(max_colors),
        color_(g.edge_count(), 0),
        mask_(g.vertex_count(), 0),
        left_(g.vertex_count(), 0),
        degree_(g.vertex_count(), 0) {
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
      degree_[v] = left_[v] = g.degree(v);
      if (degree_[v] == 0) add_palette(0);
    }
  }

  bool run() {
    if (distinct() > max_palettes_) return false;
    return recurse(0, 0);
  }

  EdgeColoring coloring() const { return EdgeColoring{color_}; }

 private:
  bool recurse(EdgeId e, int max_used) {
    if (e == g_.edge_count()) return true;
    const Edge& ed = g_.edge(e);
    const Mask blocked = mask_[ed.u] | mask_[ed.v];
    const int top = std::min(max_colors_, max_used + 1);
    for (int col = 1; col <= top; ++col) {
      const Mask bit = Mask{1} << (col - 1);
      if (blocked & bit) continue;
      place(e, col, bit);
      if (consistent() && recurse(e + 1, std::max(max_used, col))) return true;
      unplace(e, bit);
    }
    return false;
  }

  void place(EdgeId e, int col, Mask bit) {
    color_[e] = col;
    for (Vertex w : {g_.edge(e).u, g_.edge(e).v}) {
      mask_[w] |= bit;
      if (--left_[w] == 0) add_palette(mask_[w]);
    }
  }

  void unplace(EdgeId e, Mask bit) {
    color_[e] = 0;
    for (Vertex w : {g_.edge(e).v, g_.edge(e).u}) {
      if (left_[w]++ == 0) remove_palette(mask_[w]);
      mask_[w] &= ~bit;
    }
  }

  void add_palette(Mask p) {
    for (auto& [mask, count] : complete_) {
      if (mask == p) {
        ++count;
        return;
      }
    }
    complete_.emplace_back(p, 1);
  }

  void remove_palette(Mask p) {
    for (std::size_t i = 0; i < complete_.size(); ++i) {
      if (complete_[i].first == p) {
        if (--complete_[i].second == 0) {
          complete_[i] = complete_.back();
          complete_.pop_back();
        }
        return;
      }
    }
  }

  int distinct() const { return static_cast<int>(complete_.size()); }

  bool fits_existing(Vertex w) const {
    for (const auto& [p, count] : complete_) {
      if (std::popcount(p) == degree_[w] && (mask_[w] & ~p) == 0) return true;
    }
    return false;
  }

  static bool can_share(Mask a, int da, Mask b, int db) {
    return da == db && std::popcount(a | b) <= da;
  }

  // Partially colored vertices that fit no finished palette need new ones.
  // Pairwise incompatible ones need distinct new palettes, which gives a
  // lower bound on the palettes still to appear.
  bool consistent() {
    const int room = max_palettes_ - distinct();
    if (room < 0) return false;
    reps_.clear();
    for (Vertex w = 0; w < g_.vertex_count(); ++w) {
      if (left_[w] == 0 || fits_existing(w)) continue;
      if (room == 0) return false;
      bool shares = false;
      for (Vertex r : reps_) {
        if (can_share(mask_[w], degree_[w], mask_[r], degree_[r])) {
          shares = true;
          break;
        }
      }
      if (!shares) {
        reps_.push_back(w);
        if (static_cast<int>(reps_.size()) > room) return false;
      }
    }
    return true;
  }

  const MultiGraph& g_;
  int max_palettes_;
  int max_colors_;
  std::vector<int> color_;
  std::vector<Mask> mask_;
  std::vector<int> left_;
  std::vector<int> degree_;
  std::vector<std::pair<Mask, int>> complete_;
  std::vector<Vertex> reps_;
};

void require_palette_cap(const MultiGraph& g, const Limits& limits) {
  if (g.edge_count() > limits.max_edges_palette) {
    throw Error(ErrorKind::kResourceLimit,
                "palette index search capped at " +
                    std::to_string(limits.max_edges_palette) + " edges, got " +
                    std::to_string(g.edge_count()));
  }
}

}  // namespace

std::optional<EdgeColoring> find_palette_coloring(const MultiGraph& g,
                                                  int max_palettes,
                                                  int max_colors) {
  if (max_colors > 64) {
    throw Error(ErrorKind::kResourceLimit, "more than 64 colors requested");
  }
  PaletteSearch search(g, max_palettes, max_colors);
  if (!search.run()) return std::nullopt;
  return search.coloring();
}

PaletteIndexResult palette_index(const MultiGraph& g, const Limits& limits) {
  require_palette_cap(g, limits);
  PaletteIndexResult r;
  if (g.edge_count() == 0) {
    r.s_check = g.vertex_count() > 0 ? 1 : 0;
    return r;
  }
  const DegreeProfile profile = degree_profile(g);
  const int m = g.edge_count();
  // Vertices of different degree never share a palette.
  const int distinct_degrees = static_cast<int>(
      std::set<int>(profile.degrees.begin(), profile.degrees.end()).size());
  for (int t = std::max(1, distinct_degrees); t <= g.vertex_count(); ++t) {
    const int budget = std::min(t * profile.max_degree, m);
    if (t == 1 && regular_class1_obstructed(g, profile.max_degree)) continue;
    if (!find_palette_coloring(g, t, budget)) continue;
    for (int k = profile.max_degree; k <= budget; ++k) {
      // Regular with max-degree colors forces a single palette.
      if (t > 1 && k == profile.max_degree &&
          profile.min_degree == profile.max_degree) {
        continue;
      }
      if (auto c = find_palette_coloring(g, t, k)) {
        r.s_check = t;
        r.k_min = k;
        r.coloring = std::move(*c);
        return r;
      }
    }
  }
  throw Error(ErrorKind::kInvalidArgument,
              "no coloring with n palettes found; search is broken");
}

namespace {

// Plain enumeration of proper colorings in restricted-growth form (each
// edge takes an old color or the next new one). Keeps the best palette
// count seen and abandons a branch once its finished vertices alone already
// show that many distinct palettes.
class OracleEnumerator {
 public:
  OracleEnumerator(const MultiGraph& g, int color_cap)
      : g_(g), cap_(color_cap), col_(g.edge_count(), 0),
        last_edge_(g.vertex_count(), -1) {
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
      for (EdgeId e : g.incident(v)) last_edge_[v] = std::max(last_edge_[v], e);
    }
    best_ = g.vertex_count();
  }

  int run() {
    walk(0, 0);
    return best_;
  }

 private:
  std::vector<int> palette_of(Vertex v) const {
    std::vector<int> p;
    for (EdgeId e : g_.incident(v)) p.push_back(col_[e]);
    std::sort(p.begin(), p.end());
    return p;
  }

  // Distinct palettes among vertices whose edges all precede 'upto'.
  int finished_palettes(EdgeId upto) const {
    std::set<std::vector<int>> seen;
    for (Vertex v = 0; v < g_.vertex_count(); ++v) {
      if (last_edge_[v] < upto) seen.insert(palette_of(v));
    }
    return static_cast<int>(seen.size());
  }

  void walk(EdgeId e, int used) {
    if (e == g_.edge_count()) {
      best_ = std::min(best_, finished_palettes(e));
      return;
    }
    const Vertex a = g_.edge(e).u;
    const Vertex b = g_.edge(e).v;
    for (int x = 1; x <= std::min(used + 1, cap_); ++x) {
      bool clash = false;
      for (EdgeId f : g_.incident(a)) clash |= (f < e && col_[f] == x);
      for (EdgeId f : g_.incident(b)) clash |= (f < e && col_[f] == x);
      if (clash) continue;
      col_[e] = x;
      const bool closes = last_edge_[a] == e || last_edge_[b] == e;
      if (!closes || finished_palettes(e + 1) < best_) {
        walk(e + 1, std::max(used, x));
      }
      col_[e] = 0;
    }
  }

  const MultiGraph& g_;
  int cap_;
  std::vector<int> col_;
  std::vector<EdgeId> last_edge_;
  int best_;
};

}  // namespace

int palette_index_oracle(const MultiGraph& g, const Limits& limits) {
  if (g.edge_count() > limits.max_edges_oracle) {
    throw Error(ErrorKind::kResourceLimit,
                "oracle capped at " + std::to_string(limits.max_edges_oracle) +
                    " edges, got " + std::to_string(g.edge_count()));
  }
  if (g.vertex_count() == 0) return 0;
  if (g.edge_count() == 0) return 1;
  const int cap = g.vertex_count() * degree_profile(g).max_degree;
  return OracleEnumerator(g, cap).run();
}

EdgeColoring reduce_colors(const MultiGraph& g, const EdgeColoring& c) {
  require_proper(g, c);
  EdgeColoring out = c;
  while (true) {
    const PaletteSystem ps = palettes_of(g, out);
    const std::vector<Color> colors = out.colorset();
    std::set<std::pair<Color, Color>> together;
    for (const Palette& p : ps.palettes) {
      for (std::size_t i = 0; i < p.size(); ++i) {
        for (std::size_t j = i + 1; j < p.size(); ++j) together.insert({p[i], p[j]});
      }
    }
    std::optional<std::pair<Color, Color>> merge;
    for (std::size_t i = 0; i < colors.size() && !merge; ++i) {
      for (std::size_t j = i + 1; j < colors.size() && !merge; ++j) {
        if (!together.contains({colors[i], colors[j]})) {
          merge = std::make_pair(colors[i], colors[j]);
        }
      }
    }
    if (!merge) return out;
    for (Color& x : out.colors) {
      if (x == merge->second) x = merge->first;
    }
  }
}

LowerBoundCheck check_lower_bound_theorem(const MultiGraph& g,
                                          const Limits& limits) {
  LowerBoundCheck r;
  const DegreeProfile p = degree_profile(g);
  r.min_degree = p.min_degree;
  r.applicable =
      p.max_degree >= 2 && !has_spanning_even_subgraph_no_isolated(g, limits);
  if (r.applicable) {
    r.s_check = palette_index(g, limits).s_check;
    r.satisfied = r.s_check > p.min_degree;
  }
  return r;
}

}  // namespace palettekit
