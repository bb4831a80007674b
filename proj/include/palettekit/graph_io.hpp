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

#include <string>
#include <string_view>
#include <vector>

#include "palettekit/graph.hpp"

namespace palettekit {

enum class GraphFormat { kGraph6, kSparse6, kEdgeListJson };

// graph6 and sparse6 follow the nauty text formats (a leading >>graph6<< or
// >>sparse6<< header is accepted). graph6 edges come out sorted by (u, v);
// sparse6 edges keep their encoded order. Loops are rejected everywhere.
MultiGraph parse_graph(std::string_view input, GraphFormat format);
MultiGraph parse_graph6(std::string_view line);
MultiGraph parse_sparse6(std::string_view line);
MultiGraph parse_edge_list_json(std::string_view text);

// graph6 requires a simple graph.
std::string encode_graph6(const MultiGraph& g);
std::string encode_sparse6(const MultiGraph& g);
std::string encode_edge_list_json(const MultiGraph& g);

// Picks graph6 or sparse6 from the leading character.
MultiGraph parse_nauty_line(std::string_view line);

// One graph per non-empty line (graph6/sparse6), or a JSON object / array of
// objects when the text starts with '{' or '['.
std::vector<MultiGraph> parse_graph_collection(std::string_view text);

}  // namespace palettekit
