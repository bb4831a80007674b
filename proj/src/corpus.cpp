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
#include "palettekit/corpus.hpp"

#include <algorithm>
#include <atomic>
#include <sstream>
#include <thread>

#include "json.hpp"
#include "palettekit/decomposition.hpp"
#include "palettekit/error.hpp"
#include "palettekit/graph_io.hpp"
#include "palettekit/matching.hpp"
#include "palettekit/palette_index.hpp"
#include "palettekit/serialization.hpp"

namespace palettekit {

namespace {

constexpr std::array<const char*, kCheckCount> kCheckNames = {
    "lemma-not2", "thm-cubic", "thm-lower", "thm-s2",
    "thm-s3",     "cor-regular3", "greedy-h0"};

}  // namespace

const char* check_name(Check check) {
  return kCheckNames[static_cast<int>(check)];
}

std::optional<Check> parse_check(const std::string& name) {
  for (int i = 0; i < kCheckCount; ++i) {
    if (name == kCheckNames[i]) return static_cast<Check>(i);
  }
  return std::nullopt;
}

std::vector<Check> parse_check_list(const std::string& list) {
  std::vector<Check> out;
  std::stringstream in(list);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (item.empty()) continue;
    const auto c = parse_check(item);
    if (!c) throw Error(ErrorKind::kInvalidArgument, "unknown check '" + item + "'");
    if (std::find(out.begin(), out.end(), *c) == out.end()) out.push_back(*c);
  }
  if (out.empty()) throw Error(ErrorKind::kInvalidArgument, "no checks given");
  return out;
}

const char* to_string(Outcome outcome) {
  switch (outcome) {
    case Outcome::kNotApplicable: return "n/a";
    case Outcome::kPass: return "pass";
    case Outcome::kFail: return "FAIL";
    case Outcome::kSkipped: return "skipped";
    case Outcome::kNegative: return "negative";
  }
  return "n/a";
}

bool CorpusReport::any_failure() const {
  return std::any_of(tallies.begin(), tallies.end(),
                     [](const CheckTally& t) { return t.failed > 0; });
}

namespace {

std::string encode_input(const MultiGraph& g) {
  return g.is_simple() ? encode_graph6(g) : encode_sparse6(g);
}

struct CheckContext {
  const MultiGraph& g;
  const Limits& limits;
  const PaletteIndexResult& solved;
  std::string& evidence;  // extra counterexample material
};

CheckRecord pass(Check c, std::string detail = {}) {
  return {c, Outcome::kPass, std::move(detail)};
}
CheckRecord fail(Check c, std::string detail) {
  return {c, Outcome::kFail, std::move(detail)};
}
CheckRecord not_applicable(Check c, std::string detail = {}) {
  return {c, Outcome::kNotApplicable, std::move(detail)};
}

CheckRecord run_lemma_not2(const CheckContext& ctx) {
  const Check c = Check::kLemmaNot2;
  if (!is_regular(ctx.g)) return not_applicable(c);
  if (ctx.solved.s_check == 2) return fail(c, "regular graph with palette index 2");
  return pass(c, "s=" + std::to_string(ctx.solved.s_check));
}

CheckRecord run_thm_cubic(const CheckContext& ctx) {
  const Check c = Check::kThmCubic;
  const auto k = is_regular(ctx.g);
  if (!k || *k != 3 || !is_connected(ctx.g)) return not_applicable(c);
  const int cls = classify_cubic(ctx.g, ctx.limits);
  const std::string detail = "classifier " + std::to_string(cls) + ", solver " +
                             std::to_string(ctx.solved.s_check);
  return cls == ctx.solved.s_check ? pass(c, detail) : fail(c, detail);
}

CheckRecord run_thm_lower(const CheckContext& ctx) {
  const Check c = Check::kThmLower;
  const LowerBoundCheck r = check_lower_bound_theorem(ctx.g, ctx.limits);
  if (!r.applicable) return not_applicable(c);
  const std::string detail = "s=" + std::to_string(r.s_check) +
                             ", min degree " + std::to_string(r.min_degree);
  return r.satisfied ? pass(c, detail) : fail(c, detail);
}

CheckRecord run_thm_s2(const CheckContext& ctx) {
  const Check c = Check::kThmS2;
  const int s = ctx.solved.s_check;
  try {
    const Decomposition2 d = extract_decomposition_2(ctx.g, ctx.solved.coloring, ctx.limits);
    ctx.evidence = "certificate: " + to_json(d).dump();
    if (s != 2) return fail(c, "decomposition extracted although s=" + std::to_string(s));
    const VerificationReport report = verify_decomposition_2(ctx.g, d, ctx.limits);
    if (!report.passed()) return fail(c, "clause " + report.first_failure());
    const EdgeColoring back = synthesize_coloring_2(ctx.g, d, ctx.limits);
    const int palettes = distinct_palette_count(ctx.g, back);
    if (palettes != 2) {
      ctx.evidence += " synthesized: " + to_json(back).dump();
      return fail(c, "synthesis gave " + std::to_string(palettes) + " palettes");
    }
    return pass(c, "decomposition verified, synthesis has 2 palettes");
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::kResourceLimit) throw;
    if (s == 2) return fail(c, std::string("extraction failed: ") + e.what());
    if (e.kind() != ErrorKind::kNotTwoPalettes) {
      return fail(c, std::string("unexpected error: ") + e.what());
    }
    return pass(c, "s=" + std::to_string(s) + ", no two-part decomposition");
  }
}

CheckRecord run_thm_s3(const CheckContext& ctx) {
  const Check c = Check::kThmS3;
  const int s = ctx.solved.s_check;
  try {
    const Decomposition3 d = extract_decomposition_3(ctx.g, ctx.solved.coloring, ctx.limits);
    ctx.evidence = "certificate: " + to_json(d).dump();
    if (s > 3) return fail(c, "decomposition extracted although s=" + std::to_string(s));
    const VerificationReport report = verify_decomposition_3(ctx.g, d, ctx.limits);
    if (!report.passed()) return fail(c, "clause " + report.first_failure());
    const EdgeColoring back = synthesize_coloring_3(ctx.g, d, ctx.limits);
    const int palettes = distinct_palette_count(ctx.g, back);
    if (palettes > 3) {
      ctx.evidence += " synthesized: " + to_json(back).dump();
      return fail(c, "synthesis gave " + std::to_string(palettes) + " palettes");
    }
    return pass(c, "decomposition verified, synthesis has " +
                       std::to_string(palettes) + " palettes");
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::kResourceLimit) throw;
    if (s <= 3) return fail(c, std::string("extraction failed: ") + e.what());
    if (e.kind() != ErrorKind::kTooManyPalettes) {
      return fail(c, std::string("unexpected error: ") + e.what());
    }
    return pass(c, "s=" + std::to_string(s) + ", no decomposition");
  }
}

CheckRecord run_cor_regular3(const CheckContext& ctx) {
  const Check c = Check::kCorRegular3;
  const auto k = is_regular(ctx.g);
  if (!k || *k == 0) return not_applicable(c);
  const RegularCorollaryResult r = regular_corollary_check(ctx.g, ctx.limits);
  if (!r.s3) return pass(c, "s=" + std::to_string(r.s_check));
  if (r.decomposition) ctx.evidence = "certificate: " + to_json(*r.decomposition).dump();
  if (chromatic_index(ctx.g, ctx.limits).label != ClassLabel::kClass2) {
    return fail(c, "s=3 but the graph is Class 1");
  }
  if (!r.certificate) {
    return fail(c, "extracted decomposition does not have shape A1A2 with three parts");
  }
  const VerificationReport report =
      verify_regular_decomposition_3(ctx.g, *r.certificate, ctx.limits);
  if (!report.passed()) return fail(c, "clause " + report.first_failure());
  const EdgeColoring back =
      synthesize_coloring_3(ctx.g, as_decomposition_3(ctx.g, *r.certificate), ctx.limits);
  const int palettes = distinct_palette_count(ctx.g, back);
  if (palettes != 3) {
    return fail(c, "synthesis gave " + std::to_string(palettes) + " palettes");
  }
  return pass(c, "r=" + std::to_string(r.certificate->r) + ", parts " +
                     std::to_string((*k - r.certificate->r) / 2) + "-regular");
}

CheckRecord run_greedy_h0(const CheckContext& ctx) {
  const Check c = Check::kGreedyH0;
  const auto k = is_regular(ctx.g);
  if (!k || *k != 4) return not_applicable(c);
  const GreedyH0Result r = check_greedy_h0_witness(ctx.g, ctx.limits);
  return {c, r.witness ? Outcome::kPass : Outcome::kNegative, r.detail};
}

CheckRecord run_check(Check check, const CheckContext& ctx) {
  switch (check) {
    case Check::kLemmaNot2: return run_lemma_not2(ctx);
    case Check::kThmCubic: return run_thm_cubic(ctx);
    case Check::kThmLower: return run_thm_lower(ctx);
    case Check::kThmS2: return run_thm_s2(ctx);
    case Check::kThmS3: return run_thm_s3(ctx);
    case Check::kCorRegular3: return run_cor_regular3(ctx);
    case Check::kGreedyH0: return run_greedy_h0(ctx);
  }
  return not_applicable(check);
}

MultiGraph without(const MultiGraph& g, const EdgeSubset& removed) {
  MultiGraph out(g.vertex_count());
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    if (!std::binary_search(removed.begin(), removed.end(), e)) {
      out.add_edge(g.edge(e).u, g.edge(e).v);
    }
  }
  return out;
}

}  // namespace

GraphRecord analyze_graph(const MultiGraph& g, int index,
                          const std::vector<Check>& checks,
                          const Limits& limits) {
  GraphRecord rec;
  rec.index = index;
  rec.input = encode_input(g);
  rec.n = g.vertex_count();
  rec.m = g.edge_count();
  const DegreeProfile p = degree_profile(g);
  rec.max_degree = p.max_degree;
  rec.min_degree = p.min_degree;

  PaletteIndexResult solved;
  try {
    const ChromaticIndexResult chi = chromatic_index(g, limits);
    rec.chromatic_index = chi.chromatic_index;
    rec.label = chi.label;
    solved = palette_index(g, limits);
    rec.s_check = solved.s_check;
    rec.k_min = solved.k_min;
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::kResourceLimit) throw;
    rec.resource_limit = true;
    rec.resource_message = e.what();
    for (Check c : checks) rec.checks.push_back({c, Outcome::kSkipped, e.what()});
    return rec;
  }

  for (Check c : checks) {
    std::string evidence;
    CheckRecord result;
    try {
      result = run_check(c, {g, limits, solved, evidence});
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::kResourceLimit) {
        result = fail(c, std::string("error: ") + e.what());
      } else {
        result = {c, Outcome::kSkipped, e.what()};
      }
    }
    if (result.outcome == Outcome::kFail) {
      rec.counterexample += std::string(check_name(c)) + " on " + rec.input +
                            ": " + result.detail + "\n  coloring: " +
                            to_json(solved.coloring).dump() + "\n";
      if (!evidence.empty()) rec.counterexample += "  " + evidence + "\n";
    }
    rec.checks.push_back(std::move(result));
  }
  return rec;
}

CorpusReport run_corpus(const std::vector<MultiGraph>& graphs,
                        const CorpusOptions& options) {
  CorpusReport report;
  report.checks = options.checks;
  report.records.resize(graphs.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&]() {
    for (std::size_t i = next++; i < graphs.size(); i = next++) {
      report.records[i] = analyze_graph(graphs[i], static_cast<int>(i),
                                        options.checks, options.limits);
    }
  };
  const int jobs = std::max(1, std::min<int>(options.jobs, std::max<std::size_t>(graphs.size(), 1)));
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (int j = 0; j < jobs; ++j) pool.emplace_back(worker);
  }
  for (const GraphRecord& rec : report.records) {
    if (rec.resource_limit) ++report.graphs_skipped;
    for (const CheckRecord& c : rec.checks) {
      CheckTally& t = report.tallies[static_cast<int>(c.check)];
      switch (c.outcome) {
        case Outcome::kPass: ++t.applicable; ++t.passed; break;
        case Outcome::kFail: ++t.applicable; ++t.failed; break;
        case Outcome::kNegative: ++t.applicable; break;
        case Outcome::kSkipped: ++t.skipped; break;
        case Outcome::kNotApplicable: break;
      }
    }
  }
  return report;
}

std::string report_to_json(const CorpusReport& report) {
  using nlohmann::ordered_json;
  ordered_json j;
  ordered_json names = ordered_json::array();
  for (Check c : report.checks) names.push_back(check_name(c));
  j["checks"] = names;
  j["graphs"] = report.records.size();
  j["graphs_skipped"] = report.graphs_skipped;
  ordered_json tallies = ordered_json::object();
  for (Check c : report.checks) {
    const CheckTally& t = report.tally(c);
    tallies[check_name(c)] = {{"applicable", t.applicable},
                              {"passed", t.passed},
                              {"failed", t.failed},
                              {"skipped", t.skipped}};
  }
  j["tallies"] = tallies;
  ordered_json records = ordered_json::array();
  for (const GraphRecord& r : report.records) {
    ordered_json rec;
    rec["index"] = r.index;
    rec["input"] = r.input;
    rec["n"] = r.n;
    rec["m"] = r.m;
    rec["max_degree"] = r.max_degree;
    rec["min_degree"] = r.min_degree;
    auto opt = [](const std::optional<int>& v) {
      return v ? ordered_json(*v) : ordered_json(nullptr);
    };
    rec["chromatic_index"] = opt(r.chromatic_index);
    rec["class"] = r.label ? ordered_json(to_string(*r.label)) : ordered_json(nullptr);
    rec["s_check"] = opt(r.s_check);
    rec["k_min"] = opt(r.k_min);
    rec["resource_limit"] = r.resource_limit;
    if (r.resource_limit) rec["resource_message"] = r.resource_message;
    ordered_json checks = ordered_json::object();
    for (const CheckRecord& c : r.checks) {
      checks[check_name(c.check)] = {{"outcome", to_string(c.outcome)},
                                     {"detail", c.detail}};
    }
    rec["checks"] = checks;
    records.push_back(rec);
  }
  j["records"] = records;
  return j.dump(2) + "\n";
}

std::string report_to_csv(const CorpusReport& report) {
  std::ostringstream out;
  out << "index,input,n,m,max_degree,min_degree,chromatic_index,class,s_check,"
         "k_min,status";
  for (const char* name : kCheckNames) out << "," << name;
  out << "\n";
  auto opt = [](const std::optional<int>& v) {
    return v ? std::to_string(*v) : std::string();
  };
  for (const GraphRecord& r : report.records) {
    out << r.index << "," << r.input << "," << r.n << "," << r.m << ","
        << r.max_degree << "," << r.min_degree << "," << opt(r.chromatic_index)
        << "," << (r.label ? to_string(*r.label) : "") << "," << opt(r.s_check)
        << "," << opt(r.k_min) << ","
        << (r.resource_limit ? "resource-limit" : "ok");
    for (int i = 0; i < kCheckCount; ++i) {
      out << ",";
      for (const CheckRecord& c : r.checks) {
        if (static_cast<int>(c.check) == i) out << to_string(c.outcome);
      }
    }
    out << "\n";
  }
  return out.str();
}

std::string describe_failures(const CorpusReport& report) {
  std::string out;
  for (const GraphRecord& r : report.records) {
    if (!r.counterexample.empty()) {
      out += "graph #" + std::to_string(r.index) + "\n" + r.counterexample;
    }
  }
  return out;
}

GreedyH0Result check_greedy_h0_witness(const MultiGraph& g,
                                       const Limits& limits,
                                       const RegularDecomposition3* certificate) {
  GreedyH0Result r;
  const auto k = is_regular(g);
  if (!k || *k != 4) {
    r.detail = "not 4-regular";
    return r;
  }
  if (!has_perfect_matching(g)) {
    r.detail = "no perfect matching";
    return r;
  }
  std::vector<EdgeSubset> matchings;
  bool disjoint_pair = false;
  for_each_perfect_matching(g, [&](const EdgeSubset& m) {
    matchings.push_back(m);
    disjoint_pair = has_perfect_matching(without(g, m));
    return !disjoint_pair;
  });
  r.perfect_matchings = static_cast<int>(matchings.size());
  if (disjoint_pair) {
    r.detail = "has two disjoint perfect matchings";
    return r;
  }

  // Palette index 3: exact solver within the cap, otherwise an upper bound
  // from the certificate and exact refutation of one and two palettes.
  std::optional<RegularDecomposition3> cert;
  if (g.edge_count() <= limits.max_edges_palette) {
    const RegularCorollaryResult cor = regular_corollary_check(g, limits);
    if (!cor.s3) {
      r.detail = "palette index " + std::to_string(cor.s_check);
      return r;
    }
    cert = cor.certificate;
    r.palette_index_source = "exact solver";
  } else {
    if (certificate == nullptr) {
      r.detail = "beyond palette cap and no certificate given";
      return r;
    }
    if (!regular_class1_obstructed(g, *k)) {
      r.detail = "one palette not refuted";
      return r;
    }
    if (find_palette_coloring(g, 2, 2 * *k)) {
      r.detail = "a two-palette coloring exists";
      return r;
    }
    cert = *certificate;
    r.palette_index_source = "certificate upper bound, exhaustive refutation of 1 and 2 palettes";
  }
  if (!cert || !verify_regular_decomposition_3(g, *cert, limits).passed()) {
    r.detail = "certificate for palette index 3 failed verification";
    return r;
  }
  r.certificate = cert;
  const EdgeColoring back =
      synthesize_coloring_3(g, as_decomposition_3(g, *cert), limits);
  if (!is_proper(g, back) || distinct_palette_count(g, back) != 3) {
    r.detail = "synthesis did not give 3 palettes";
    return r;
  }
  r.coloring = back;

  for (const EdgeSubset& m : matchings) {
    const MultiGraph rest = without(g, m);
    if (is_regular(rest) != 3 || has_perfect_matching(rest)) {
      r.detail = "complement of a perfect matching is not a cubic graph without one";
      return r;
    }
    if (is_connected(rest) && classify_cubic(rest, limits) != 4) {
      r.detail = "cubic complement does not classify as 4";
      return r;
    }
    if (rest.edge_count() <= limits.max_edges_palette &&
        palette_index(rest, limits).s_check != 4) {
      r.detail = "cubic complement does not have palette index 4";
      return r;
    }
  }
  r.witness = true;
  r.detail = "r=" + std::to_string(cert->r) + ", " +
             std::to_string(r.perfect_matchings) +
             " perfect matchings, each leaving a cubic graph without one";
  return r;
}

}  // namespace palettekit
