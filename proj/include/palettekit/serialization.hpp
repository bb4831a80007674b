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

#include "json.hpp"

#include "palettekit/coloring.hpp"
#include "palettekit/decomposition.hpp"
#include "palettekit/hypergraph.hpp"
#include "palettekit/palette_index.hpp"

namespace palettekit {

// {"colors": [c_0, ..., c_{m-1}]}
nlohmann::json to_json(const EdgeColoring& c);
EdgeColoring coloring_from_json(const nlohmann::json& j);

// {"s_check": t, "k_min": k, "colors": [...]}
nlohmann::json to_json(const PaletteIndexResult& r);

// {"vertices": [[colors...], ...], "hyperedges": [[v, ...], ...]}
nlohmann::json to_json(const Hypergraph& h);
Hypergraph hypergraph_from_json(const nlohmann::json& j);

// {"H0": [ids]|null, "H1": ..., "H2": ..., "H3": ...,
//  "A": [[...],[...],[...]], "shape": "A3"|"A1A2"|null}
nlohmann::json to_json(const Decomposition3& d);
Decomposition3 decomposition_from_json(const nlohmann::json& j);

// {"H0": [ids]|null, "H1": [ids]|null}
nlohmann::json to_json(const Decomposition2& d);
Decomposition2 decomposition2_from_json(const nlohmann::json& j);

// {"k": k, "r": r, "spanning": [ids]|null, "parts": [[...],[...],[...]]}
nlohmann::json to_json(const RegularDecomposition3& d);
RegularDecomposition3 regular_decomposition_from_json(const nlohmann::json& j);

nlohmann::json to_json(const VerificationReport& r);

}  // namespace palettekit
