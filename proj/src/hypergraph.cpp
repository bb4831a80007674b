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

#include <algorithm>
#include <sstream>

#include "palettekit/error.hpp"
#include "palettekit/palette_index.hpp"

namespace palettekit {

std::vector<HyperedgeId> Hypergraph::star(int v) const {
  std::vector<HyperedgeId> out;
  for (HyperedgeId h = 0; h < static_cast<int>(hyperedges.size()); ++h) {
    const auto& members = hyperedges[h];
    if (std::find(members.begin(), members.end(), v) != members.end()) {
      out.push_back(h);
    }
  }
  return out;
}

bool Hypergraph::well_formed() const {
  for (const auto& members : hyperedges) {
    if (members.empty()) return false;
    for (int v : members) {
      if (v < 0 || v >= order()) return false;
    }
  }
  return true;
}

Hypergraph associated_hypergraph(const MultiGraph& g, const EdgeColoring& c) {
  const PaletteSystem ps = palettes_of(g, c);
  Hypergraph h;
  h.vertices = ps.palettes;
  for (Color color : c.colorset()) {
    std::vector<int> members;
    for (int j = 0; j < ps.size(); ++j) {
      const Palette& p = ps.palettes[j];
      if (std::binary_search(p.begin(), p.end(), color)) members.push_back(j);
    }
    h.hyperedges.push_back(std::move(members));
  }
  return h;
}

bool pairwise_intersecting(const Hypergraph& h) {
  for (std::size_t i = 0; i < h.hyperedges.size(); ++i) {
    for (std::size_t j = i + 1; j < h.hyperedges.size(); ++j) {
      const auto& a = h.hyperedges[i];
      const auto& b = h.hyperedges[j];
      const bool meet = std::any_of(a.begin(), a.end(), [&](int v) {
        return std::find(b.begin(), b.end(), v) != b.end();
      });
      if (!meet) return false;
    }
  }
  return true;
}

HColoring canonical_h_coloring(const MultiGraph& g, const EdgeColoring& c) {
  require_proper(g, c);
  const std::vector<Color> colors = c.colorset();
  HColoring f;
  f.assignment.reserve(c.colors.size());
  for (Color x : c.colors) {
    f.assignment.push_back(static_cast<HyperedgeId>(
        std::lower_bound(colors.begin(), colors.end(), x) - colors.begin()));
  }
  return f;
}

HColoringReport verify_h_coloring(const MultiGraph& g, const Hypergraph& h,
                                  const HColoring& f) {
  HColoringReport report;
  if (!h.well_formed()) {
    report.reason = "hypergraph has an empty hyperedge or an undeclared vertex";
    return report;
  }
  if (static_cast<int>(f.assignment.size()) != g.edge_count()) {
    report.reason = "H-coloring is not total on E(G)";
    return report;
  }
  const int hyperedge_count = static_cast<int>(h.hyperedges.size());
  for (HyperedgeId x : f.assignment) {
    if (x < 0 || x >= hyperedge_count) {
      report.reason = "H-coloring maps an edge outside E(H)";
      return report;
    }
  }
  std::vector<std::vector<HyperedgeId>> stars;
  for (int v = 0; v < h.order(); ++v) stars.push_back(h.star(v));

  for (Vertex u = 0; u < g.vertex_count(); ++u) {
    std::vector<HyperedgeId> image;
    for (EdgeId e : g.incident(u)) image.push_back(f.assignment[e]);
    std::sort(image.begin(), image.end());
    const bool injective =
        std::adjacent_find(image.begin(), image.end()) == image.end();
    const bool matches =
        std::find(stars.begin(), stars.end(), image) != stars.end();
    if (!injective || !matches) report.violations.push_back(u);
  }
  report.valid = report.violations.empty();
  if (!report.valid) {
    report.reason = "some vertex image is not the star of a vertex of H";
  }
  return report;
}

EdgeColoring coloring_from_h_coloring(const HColoring& f) {
  EdgeColoring c;
  c.colors.reserve(f.assignment.size());
  for (HyperedgeId x : f.assignment) c.colors.push_back(x + 1);
  return c;
}

HypergraphOrderCertificate hypergraph_order_bounds(const MultiGraph& g,
                                                   const Limits& limits) {
  const PaletteIndexResult r = palette_index(g, limits);
  HypergraphOrderCertificate cert;
  cert.s_check = r.s_check;
  cert.coloring = r.coloring;
  cert.hypergraph = associated_hypergraph(g, r.coloring);
  cert.h_coloring = canonical_h_coloring(g, r.coloring);
  cert.order = cert.hypergraph.order();
  const HColoringReport check = verify_h_coloring(g, cert.hypergraph, cert.h_coloring);
  if (!check.valid) {
    throw Error(ErrorKind::kInvalidArgument, "canonical H-coloring failed: " + check.reason);
  }
  return cert;
}

std::string render_hypergraph(const Hypergraph& h) {
  auto label = [&](int v) {
    std::ostringstream s;
    s << "P" << (v + 1) << "{";
    for (std::size_t i = 0; i < h.vertices[v].size(); ++i) {
      s << (i ? "," : "") << h.vertices[v][i];
    }
    s << "}";
    return s.str();
  };
  std::ostringstream out;
  out << "vertices:";
  for (int v = 0; v < h.order(); ++v) out << " " << label(v);
  out << "\n";
  for (std::size_t i = 0; i < h.hyperedges.size(); ++i) {
    const auto& members = h.hyperedges[i];
    out << "h" << (i + 1) << " ";
    if (members.size() == 1) {
      out << "loop at " << label(members[0]);
    } else {
      out << (members.size() == 2 ? "edge " : "hyperedge ");
      for (std::size_t k = 0; k < members.size(); ++k) {
        out << (k ? " - " : "") << label(members[k]);
      }
    }
    out << "\n";
  }
  return out.str();
}

}  // namespace palettekit
