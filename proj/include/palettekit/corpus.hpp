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

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "palettekit/coloring.hpp"
#include "palettekit/decomposition.hpp"
#include "palettekit/graph.hpp"
#include "palettekit/limits.hpp"

namespace palettekit {

enum class Check {
  kLemmaNot2,      // regular graphs never have palette index 2
  kThmCubic,       // cubic trichotomy agrees with the exact solver
  kThmLower,       // no spanning even subgraph => palette index > min degree
  kThmS2,          // palette index 2 <=> two-part decomposition
  kThmS3,          // palette index <= 3 <=> four-part decomposition
  kCorRegular3,    // regular palette index 3 <=> three equal-degree parts
  kGreedyH0,       // quartic witness where no perfect matching can be H0
};

inline constexpr int kCheckCount = 7;

const char* check_name(Check check);
std::optional<Check> parse_check(const std::string& name);

// Comma-separated names; throws kInvalidArgument naming the bad entry.
std::vector<Check> parse_check_list(const std::string& list);

// kNegative: an existence search (greedy-h0) did not match this graph.
enum class Outcome { kNotApplicable, kPass, kFail, kSkipped, kNegative };

const char* to_string(Outcome outcome);

struct CheckRecord {
  Check check;
  Outcome outcome = Outcome::kNotApplicable;
  std::string detail;
};

struct GraphRecord {
  int index = 0;
  std::string input;  // graph6 (simple) or sparse6 re-encoding
  int n = 0;
  int m = 0;
  int max_degree = 0;
  int min_degree = 0;
  std::optional<int> chromatic_index;
  std::optional<ClassLabel> label;
  std::optional<int> s_check;
  std::optional<int> k_min;
  bool resource_limit = false;
  std::string resource_message;
  std::vector<CheckRecord> checks;
  std::string counterexample;  // filled when some check failed
};

struct CheckTally {
  int applicable = 0;
  int passed = 0;
  int failed = 0;
  int skipped = 0;
};

struct CorpusOptions {
  std::vector<Check> checks;
  int jobs = 1;
  Limits limits;
};

struct CorpusReport {
  std::vector<Check> checks;
  std::vector<GraphRecord> records;  // input order
  std::array<CheckTally, kCheckCount> tallies{};
  int graphs_skipped = 0;

  bool any_failure() const;
  const CheckTally& tally(Check c) const {
    return tallies[static_cast<int>(c)];
  }
};

GraphRecord analyze_graph(const MultiGraph& g, int index,
                          const std::vector<Check>& checks,
                          const Limits& limits);

// Runs each graph as an independent work item on up to options.jobs threads
// and restores input order before tallying.
CorpusReport run_corpus(const std::vector<MultiGraph>& graphs,
                        const CorpusOptions& options);

std::string report_to_json(const CorpusReport& report);
std::string report_to_csv(const CorpusReport& report);

// Full dump of every failed record: graph6/sparse6 plus the offending
// coloring or certificate.
std::string describe_failures(const CorpusReport& report);

// Quartic witness search: g is 4-regular with palette index 3, has a perfect
// matching, and removing any perfect matching leaves a cubic graph without
// one. Each claim is re-verified before returning true; detail explains a
// negative answer. Above the palette cap a certificate is required; the
// lower bound then comes from exhaustive refutation of 1 and 2 palettes.
struct GreedyH0Result {
  bool witness = false;
  std::string detail;
  int perfect_matchings = 0;
  std::string palette_index_source;
  std::optional<RegularDecomposition3> certificate;
  EdgeColoring coloring;  // three palettes
};

GreedyH0Result check_greedy_h0_witness(
    const MultiGraph& g, const Limits& limits = {},
    const RegularDecomposition3* certificate = nullptr);

}  // namespace palettekit
