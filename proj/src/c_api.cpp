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
#include "palettekit/palettekit.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "palettekit/coloring.hpp"
#include "palettekit/corpus.hpp"
#include "palettekit/decomposition.hpp"
#include "palettekit/error.hpp"
#include "palettekit/graph.hpp"
#include "palettekit/graph_io.hpp"
#include "palettekit/hypergraph.hpp"
#include "palettekit/palette_index.hpp"
#include "palettekit/serialization.hpp"

struct pk_graph {
  palettekit::MultiGraph graph;
};

struct pk_graph_list {
  std::vector<palettekit::MultiGraph> graphs;
};

struct pk_corpus_report {
  palettekit::CorpusReport report;
};

namespace {

using nlohmann::json;
using palettekit::Error;
using palettekit::ErrorKind;
using palettekit::Limits;
using palettekit::MultiGraph;

thread_local std::string last_error;

pk_status status_of(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kMalformedInput: return PK_ERR_MALFORMED_INPUT;
    case ErrorKind::kLoopRejected: return PK_ERR_LOOP_REJECTED;
    case ErrorKind::kResourceLimit: return PK_ERR_RESOURCE_LIMIT;
    case ErrorKind::kImproperColoring: return PK_ERR_IMPROPER_COLORING;
    case ErrorKind::kNotTwoPalettes: return PK_ERR_NOT_TWO_PALETTES;
    case ErrorKind::kNonMinimalColoring: return PK_ERR_NON_MINIMAL_COLORING;
    case ErrorKind::kTooManyPalettes: return PK_ERR_TOO_MANY_PALETTES;
    case ErrorKind::kInvalidCertificate: return PK_ERR_INVALID_CERTIFICATE;
    case ErrorKind::kNotRegular: return PK_ERR_NOT_REGULAR;
    case ErrorKind::kNotCubic: return PK_ERR_NOT_CUBIC;
    case ErrorKind::kNotConnected: return PK_ERR_NOT_CONNECTED;
    case ErrorKind::kInvalidArgument: return PK_ERR_INVALID_ARGUMENT;
  }
  return PK_ERR_INTERNAL;
}

pk_status fail(pk_status status, std::string message) {
  last_error = std::move(message);
  return status;
}

template <typename F>
pk_status guarded(F&& body) {
  try {
    last_error.clear();
    body();
    return PK_OK;
  } catch (const Error& e) {
    return fail(status_of(e.kind()), e.what());
  } catch (const json::exception& e) {
    return fail(PK_ERR_MALFORMED_INPUT, e.what());
  } catch (const std::bad_alloc&) {
    return fail(PK_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(PK_ERR_INTERNAL, e.what());
  }
}

Limits to_limits(const pk_limits* limits) {
  Limits out;
  if (limits != nullptr) {
    out.max_edges_chromatic = limits->max_edges_chromatic;
    out.max_edges_palette = limits->max_edges_palette;
    out.max_edges_oracle = limits->max_edges_oracle;
    out.max_cycle_space_dim = limits->max_cycle_space_dim;
  }
  return out;
}

char* copy_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void require(bool condition, const char* what) {
  if (!condition) throw Error(ErrorKind::kInvalidArgument, what);
}

MultiGraph parse_any(std::string_view text, pk_format format) {
  switch (format) {
    case PK_FORMAT_GRAPH6: return palettekit::parse_graph6(text);
    case PK_FORMAT_SPARSE6: return palettekit::parse_sparse6(text);
    case PK_FORMAT_EDGE_LIST_JSON: return palettekit::parse_edge_list_json(text);
    case PK_FORMAT_AUTO: break;
  }
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string_view::npos && text[first] == '{') {
    return palettekit::parse_edge_list_json(text);
  }
  const auto graphs = palettekit::parse_graph_collection(text);
  if (graphs.size() != 1) {
    throw Error(ErrorKind::kMalformedInput,
                "expected one graph, found " + std::to_string(graphs.size()));
  }
  return graphs.front();
}

json decompose_json(const MultiGraph& g, int target, const Limits& limits) {
  using namespace palettekit;
  const PaletteIndexResult solved = palette_index(g, limits);
  json out = {{"s_check", solved.s_check},
              {"k_min", solved.k_min},
              {"colors", solved.coloring.colors}};
  if (target == 2) {
    if (solved.s_check != 2) {
      throw Error(ErrorKind::kNotTwoPalettes,
                  "palette index is " + std::to_string(solved.s_check) + ", not 2");
    }
    const Decomposition2 d = extract_decomposition_2(g, solved.coloring, limits);
    const EdgeColoring back = synthesize_coloring_2(g, d, limits);
    out["decomposition"] = to_json(d);
    out["verification"] = to_json(verify_decomposition_2(g, d, limits));
    out["synthesized"] = {{"colors", back.colors},
                          {"palettes", distinct_palette_count(g, back)}};
    return out;
  }
  const Decomposition3 d = extract_decomposition_3(g, solved.coloring, limits);
  const EdgeColoring back = synthesize_coloring_3(g, d, limits);
  out["decomposition"] = to_json(d);
  out["verification"] = to_json(verify_decomposition_3(g, d, limits));
  out["synthesized"] = {{"colors", back.colors},
                        {"palettes", distinct_palette_count(g, back)}};
  const auto k = is_regular(g);
  if (k && *k > 0 && solved.s_check == 3) {
    const RegularCorollaryResult cor = regular_corollary_check(g, limits);
    if (cor.certificate) out["regular"] = to_json(*cor.certificate);
  }
  return out;
}

json verify_json(const MultiGraph& g, const json& cert, const Limits& limits) {
  using namespace palettekit;
  if (!cert.is_object()) {
    throw Error(ErrorKind::kInvalidCertificate, "certificate must be a JSON object");
  }
  if (cert.contains("hypergraph") || cert.contains("h_coloring")) {
    if (!cert.contains("hypergraph") || !cert.contains("h_coloring") ||
        !cert["h_coloring"].is_array()) {
      throw Error(ErrorKind::kInvalidCertificate,
                  "need both hypergraph and h_coloring");
    }
    const Hypergraph h = hypergraph_from_json(cert["hypergraph"]);
    HColoring f;
    f.assignment = cert["h_coloring"].get<std::vector<HyperedgeId>>();
    const HColoringReport r = verify_h_coloring(g, h, f);
    json clauses = json::array();
    clauses.push_back({{"clause", "h_coloring"}, {"passed", r.valid}, {"detail", r.reason}});
    json out = {{"kind", "h_coloring"}, {"valid", r.valid}, {"clauses", clauses},
                {"violations", r.violations}, {"order", h.order()}};
    if (r.valid) {
      const EdgeColoring c = coloring_from_h_coloring(f);
      out["induced_palettes"] = distinct_palette_count(g, c);
    }
    return out;
  }
  json out;
  if (cert.contains("parts")) {
    const RegularDecomposition3 d = regular_decomposition_from_json(cert);
    out = to_json(verify_regular_decomposition_3(g, d, limits));
    out["kind"] = "regular";
    if (out["valid"].get<bool>()) {
      const EdgeColoring c = synthesize_coloring_3(g, as_decomposition_3(g, d), limits);
      out["synthesized"] = {{"colors", c.colors},
                            {"palettes", distinct_palette_count(g, c)}};
    }
  } else if (cert.contains("A") || cert.contains("H2") || cert.contains("H3")) {
    const Decomposition3 d = decomposition_from_json(cert);
    out = to_json(verify_decomposition_3(g, d, limits));
    out["kind"] = "decomposition3";
    if (out["valid"].get<bool>()) {
      const EdgeColoring c = synthesize_coloring_3(g, d, limits);
      out["synthesized"] = {{"colors", c.colors},
                            {"palettes", distinct_palette_count(g, c)}};
    }
  } else {
    const Decomposition2 d = decomposition2_from_json(cert);
    out = to_json(verify_decomposition_2(g, d, limits));
    out["kind"] = "decomposition2";
    if (out["valid"].get<bool>()) {
      const EdgeColoring c = synthesize_coloring_2(g, d, limits);
      out["synthesized"] = {{"colors", c.colors},
                            {"palettes", distinct_palette_count(g, c)}};
    }
  }
  return out;
}

}  // namespace

extern "C" {

const char* pk_version(void) { return "0.1.0"; }

const char* pk_status_name(pk_status status) {
  switch (status) {
    case PK_OK: return "ok";
    case PK_ERR_MALFORMED_INPUT: return "malformed-input";
    case PK_ERR_LOOP_REJECTED: return "loop-rejected";
    case PK_ERR_RESOURCE_LIMIT: return "resource-limit";
    case PK_ERR_IMPROPER_COLORING: return "improper-coloring";
    case PK_ERR_NOT_TWO_PALETTES: return "not-two-palettes";
    case PK_ERR_NON_MINIMAL_COLORING: return "non-minimal-coloring";
    case PK_ERR_TOO_MANY_PALETTES: return "too-many-palettes";
    case PK_ERR_INVALID_CERTIFICATE: return "invalid-certificate";
    case PK_ERR_NOT_REGULAR: return "not-regular";
    case PK_ERR_NOT_CUBIC: return "not-cubic";
    case PK_ERR_NOT_CONNECTED: return "not-connected";
    case PK_ERR_INVALID_ARGUMENT: return "invalid-argument";
    case PK_ERR_INTERNAL: return "internal";
  }
  return "unknown";
}

const char* pk_last_error(void) { return last_error.c_str(); }

void pk_limits_default(pk_limits* limits) {
  if (limits == nullptr) return;
  const Limits d;
  limits->max_edges_chromatic = d.max_edges_chromatic;
  limits->max_edges_palette = d.max_edges_palette;
  limits->max_edges_oracle = d.max_edges_oracle;
  limits->max_cycle_space_dim = d.max_cycle_space_dim;
}

void pk_string_free(char* s) { std::free(s); }

pk_status pk_graph_new(int vertex_count, pk_graph** out) {
  return guarded([&] {
    require(out != nullptr, "null output handle");
    require(vertex_count >= 0, "negative vertex count");
    *out = new pk_graph{MultiGraph(vertex_count)};
  });
}

pk_status pk_graph_add_edge(pk_graph* g, int u, int v, int* edge_id) {
  return guarded([&] {
    require(g != nullptr, "null graph");
    const int id = g->graph.add_edge(u, v);
    if (edge_id != nullptr) *edge_id = id;
  });
}

pk_status pk_graph_parse(const char* text, pk_format format, pk_graph** out) {
  return guarded([&] {
    require(text != nullptr && out != nullptr, "null argument");
    *out = new pk_graph{parse_any(text, format)};
  });
}

pk_status pk_graph_encode(const pk_graph* g, pk_format format, char** out) {
  return guarded([&] {
    require(g != nullptr && out != nullptr, "null argument");
    std::string s;
    switch (format) {
      case PK_FORMAT_GRAPH6: s = palettekit::encode_graph6(g->graph); break;
      case PK_FORMAT_SPARSE6: s = palettekit::encode_sparse6(g->graph); break;
      case PK_FORMAT_EDGE_LIST_JSON:
        s = palettekit::encode_edge_list_json(g->graph);
        break;
      case PK_FORMAT_AUTO:
        s = g->graph.is_simple() ? palettekit::encode_graph6(g->graph)
                                 : palettekit::encode_sparse6(g->graph);
        break;
    }
    *out = copy_string(s);
  });
}

int pk_graph_vertex_count(const pk_graph* g) {
  return g == nullptr ? -1 : g->graph.vertex_count();
}

int pk_graph_edge_count(const pk_graph* g) {
  return g == nullptr ? -1 : g->graph.edge_count();
}

void pk_graph_free(pk_graph* g) { delete g; }

pk_status pk_graph_list_parse(const char* text, pk_graph_list** out) {
  return guarded([&] {
    require(text != nullptr && out != nullptr, "null argument");
    *out = new pk_graph_list{palettekit::parse_graph_collection(text)};
  });
}

size_t pk_graph_list_size(const pk_graph_list* list) {
  return list == nullptr ? 0 : list->graphs.size();
}

pk_status pk_graph_list_get(const pk_graph_list* list, size_t index,
                            pk_graph** out) {
  return guarded([&] {
    require(list != nullptr && out != nullptr, "null argument");
    require(index < list->graphs.size(), "index out of range");
    *out = new pk_graph{list->graphs[index]};
  });
}

void pk_graph_list_free(pk_graph_list* list) { delete list; }

pk_status pk_chromatic_index(const pk_graph* g, const pk_limits* limits,
                             char** json_out) {
  return guarded([&] {
    require(g != nullptr && json_out != nullptr, "null argument");
    const auto r = palettekit::chromatic_index(g->graph, to_limits(limits));
    const json out = {{"chromatic_index", r.chromatic_index},
                      {"class", palettekit::to_string(r.label)},
                      {"colors", r.witness.colors}};
    *json_out = copy_string(out.dump());
  });
}

pk_status pk_palette_index(const pk_graph* g, const pk_limits* limits,
                           char** json_out) {
  return guarded([&] {
    require(g != nullptr && json_out != nullptr, "null argument");
    const auto r = palettekit::palette_index(g->graph, to_limits(limits));
    json out = palettekit::to_json(r);
    out["palettes"] = palettekit::palettes_of(g->graph, r.coloring).palettes;
    *json_out = copy_string(out.dump());
  });
}

pk_status pk_palette_index_value(const pk_graph* g, const pk_limits* limits,
                                 int* s_check, int* k_min) {
  return guarded([&] {
    require(g != nullptr && s_check != nullptr, "null argument");
    const auto r = palettekit::palette_index(g->graph, to_limits(limits));
    *s_check = r.s_check;
    if (k_min != nullptr) *k_min = r.k_min;
  });
}

pk_status pk_palette_index_oracle(const pk_graph* g, const pk_limits* limits,
                                  int* s_check) {
  return guarded([&] {
    require(g != nullptr && s_check != nullptr, "null argument");
    *s_check = palettekit::palette_index_oracle(g->graph, to_limits(limits));
  });
}

pk_status pk_hypergraph(const pk_graph* g, const pk_limits* limits,
                        char** json_out) {
  return guarded([&] {
    require(g != nullptr && json_out != nullptr, "null argument");
    const auto cert = palettekit::hypergraph_order_bounds(g->graph, to_limits(limits));
    const json out = {
        {"order", cert.order},
        {"s_check", cert.s_check},
        {"colors", cert.coloring.colors},
        {"hypergraph", palettekit::to_json(cert.hypergraph)},
        {"h_coloring", cert.h_coloring.assignment},
        {"pairwise_intersecting", palettekit::pairwise_intersecting(cert.hypergraph)},
        {"text", palettekit::render_hypergraph(cert.hypergraph)}};
    *json_out = copy_string(out.dump());
  });
}

pk_status pk_decompose(const pk_graph* g, int target, const pk_limits* limits,
                       char** json_out) {
  return guarded([&] {
    require(g != nullptr && json_out != nullptr, "null argument");
    require(target == 2 || target == 3, "target must be 2 or 3");
    *json_out = copy_string(decompose_json(g->graph, target, to_limits(limits)).dump());
  });
}

pk_status pk_verify_certificate(const pk_graph* g, const char* certificate_json,
                                const pk_limits* limits, int* valid,
                                char** report_out) {
  return guarded([&] {
    require(g != nullptr && certificate_json != nullptr && valid != nullptr,
            "null argument");
    json cert;
    try {
      cert = json::parse(certificate_json);
    } catch (const json::exception& e) {
      throw Error(ErrorKind::kInvalidCertificate,
                  std::string("certificate is not JSON: ") + e.what());
    }
    const json report = verify_json(g->graph, cert, to_limits(limits));
    *valid = report["valid"].get<bool>() ? 1 : 0;
    if (report_out != nullptr) *report_out = copy_string(report.dump());
  });
}

pk_status pk_classify_cubic(const pk_graph* g, const pk_limits* limits,
                            int* palette_index) {
  return guarded([&] {
    require(g != nullptr && palette_index != nullptr, "null argument");
    *palette_index = palettekit::classify_cubic(g->graph, to_limits(limits));
  });
}

pk_status pk_corpus_run(const pk_graph_list* graphs, const char* checks,
                        int jobs, const pk_limits* limits,
                        pk_corpus_report** out) {
  return guarded([&] {
    require(graphs != nullptr && checks != nullptr && out != nullptr,
            "null argument");
    require(jobs >= 1, "jobs must be at least 1");
    palettekit::CorpusOptions options;
    options.checks = palettekit::parse_check_list(checks);
    options.jobs = jobs;
    options.limits = to_limits(limits);
    *out = new pk_corpus_report{palettekit::run_corpus(graphs->graphs, options)};
  });
}

int pk_corpus_report_any_failure(const pk_corpus_report* report) {
  return report != nullptr && report->report.any_failure() ? 1 : 0;
}

int pk_corpus_report_graphs_skipped(const pk_corpus_report* report) {
  return report == nullptr ? 0 : report->report.graphs_skipped;
}

pk_status pk_corpus_report_render(const pk_corpus_report* report,
                                  pk_report_format format, char** out) {
  return guarded([&] {
    require(report != nullptr && out != nullptr, "null argument");
    *out = copy_string(format == PK_REPORT_CSV
                           ? palettekit::report_to_csv(report->report)
                           : palettekit::report_to_json(report->report));
  });
}

pk_status pk_corpus_report_failures(const pk_corpus_report* report,
                                    char** out) {
  return guarded([&] {
    require(report != nullptr && out != nullptr, "null argument");
    *out = copy_string(palettekit::describe_failures(report->report));
  });
}

void pk_corpus_report_free(pk_corpus_report* report) { delete report; }

}  // extern "C"
