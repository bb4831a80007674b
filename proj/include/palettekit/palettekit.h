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

/* C interface to palettekit. All results that carry structure are returned
 * as JSON strings owned by the caller and released with pk_string_free. */
#ifndef PALETTEKIT_PALETTEKIT_H_
#define PALETTEKIT_PALETTEKIT_H_

#include <stddef.h>

#if defined(PALETTEKIT_BUILDING)
#define PK_API __attribute__((visibility("default")))
#else
#define PK_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum pk_status {
  PK_OK = 0,
  PK_ERR_MALFORMED_INPUT = 1,
  PK_ERR_LOOP_REJECTED = 2,
  PK_ERR_RESOURCE_LIMIT = 3,
  PK_ERR_IMPROPER_COLORING = 4,
  PK_ERR_NOT_TWO_PALETTES = 5,
  PK_ERR_NON_MINIMAL_COLORING = 6,
  PK_ERR_TOO_MANY_PALETTES = 7,
  PK_ERR_INVALID_CERTIFICATE = 8,
  PK_ERR_NOT_REGULAR = 9,
  PK_ERR_NOT_CUBIC = 10,
  PK_ERR_NOT_CONNECTED = 11,
  PK_ERR_INVALID_ARGUMENT = 12,
  PK_ERR_INTERNAL = 13
} pk_status;

typedef enum pk_format {
  PK_FORMAT_AUTO = 0,
  PK_FORMAT_GRAPH6 = 1,
  PK_FORMAT_SPARSE6 = 2,
  PK_FORMAT_EDGE_LIST_JSON = 3
} pk_format;

typedef enum pk_report_format {
  PK_REPORT_JSON = 0,
  PK_REPORT_CSV = 1
} pk_report_format;

typedef struct pk_limits {
  int max_edges_chromatic;
  int max_edges_palette;
  int max_edges_oracle;
  int max_cycle_space_dim;
} pk_limits;

typedef struct pk_graph pk_graph;
typedef struct pk_graph_list pk_graph_list;
typedef struct pk_corpus_report pk_corpus_report;

PK_API const char* pk_version(void);
PK_API const char* pk_status_name(pk_status status);

/* Message of the last failure on the calling thread; empty after success. */
PK_API const char* pk_last_error(void);

PK_API void pk_limits_default(pk_limits* limits);
PK_API void pk_string_free(char* s);

/* Graphs. */
PK_API pk_status pk_graph_new(int vertex_count, pk_graph** out);
PK_API pk_status pk_graph_add_edge(pk_graph* g, int u, int v, int* edge_id);
PK_API pk_status pk_graph_parse(const char* text, pk_format format,
                                pk_graph** out);
PK_API pk_status pk_graph_encode(const pk_graph* g, pk_format format,
                                 char** out);
PK_API int pk_graph_vertex_count(const pk_graph* g);
PK_API int pk_graph_edge_count(const pk_graph* g);
PK_API void pk_graph_free(pk_graph* g);

/* One graph per line (graph6/sparse6) or a JSON object/array. */
PK_API pk_status pk_graph_list_parse(const char* text, pk_graph_list** out);
PK_API size_t pk_graph_list_size(const pk_graph_list* list);
PK_API pk_status pk_graph_list_get(const pk_graph_list* list, size_t index,
                                   pk_graph** out);
PK_API void pk_graph_list_free(pk_graph_list* list);

/* Solvers. limits may be NULL for the defaults. */
PK_API pk_status pk_chromatic_index(const pk_graph* g, const pk_limits* limits,
                                    char** json_out);
PK_API pk_status pk_palette_index(const pk_graph* g, const pk_limits* limits,
                                  char** json_out);
PK_API pk_status pk_palette_index_value(const pk_graph* g,
                                        const pk_limits* limits, int* s_check,
                                        int* k_min);
PK_API pk_status pk_palette_index_oracle(const pk_graph* g,
                                         const pk_limits* limits,
                                         int* s_check);
PK_API pk_status pk_hypergraph(const pk_graph* g, const pk_limits* limits,
                               char** json_out);

/* target is 2 or 3. */
PK_API pk_status pk_decompose(const pk_graph* g, int target,
                              const pk_limits* limits, char** json_out);

/* Accepts a four-part decomposition, a two-part decomposition, a regular
 * three-part certificate or {"hypergraph", "h_coloring"}. *valid is 1 when
 * every clause holds; the clause report is written to report_out. */
PK_API pk_status pk_verify_certificate(const pk_graph* g,
                                       const char* certificate_json,
                                       const pk_limits* limits, int* valid,
                                       char** report_out);

PK_API pk_status pk_classify_cubic(const pk_graph* g, const pk_limits* limits,
                                   int* palette_index);

/* Corpus harness. checks is a comma-separated list of check names. */
PK_API pk_status pk_corpus_run(const pk_graph_list* graphs, const char* checks,
                               int jobs, const pk_limits* limits,
                               pk_corpus_report** out);
PK_API int pk_corpus_report_any_failure(const pk_corpus_report* report);
PK_API int pk_corpus_report_graphs_skipped(const pk_corpus_report* report);
PK_API pk_status pk_corpus_report_render(const pk_corpus_report* report,
                                         pk_report_format format, char** out);
PK_API pk_status pk_corpus_report_failures(const pk_corpus_report* report,
                                           char** out);
PK_API void pk_corpus_report_free(pk_corpus_report* report);

#ifdef __cplusplus
}
#endif

#endif /* PALETTEKIT_PALETTEKIT_H_ */
