#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include <json.hpp>

#include "infogreedy/bounds.hpp"
#include "infogreedy/design.hpp"
#include "infogreedy/greedy.hpp"
#include "infogreedy/info_graph.hpp"
#include "infogreedy/submodular.hpp"

namespace infogreedy {

using Json = nlohmann::ordered_json;

// Schema violations throw InputError prefixed with a JSON pointer.
Rational rational_from_json(const Json& j, const std::string& pointer = "");
Json rational_to_json(const Rational& r);

// {"n": int, "edges": [[i, j], ...]} with 1-based labels.
InfoGraph graph_from_json(const Json& j);
Json graph_to_json(const InfoGraph& g);

// {"kind": "wsc"|"vta"|"capped_sum"|"capped_coverage", ..., "actions": [...]}.
Instance instance_from_json(const Json& j);
Json instance_to_json(const Instance& inst);

Json to_json(const BoundsReport& b);
Json to_json(const GraphAnalysis& a, const BoundsReport& b);
Json to_json(const GreedyOutcome& o, const Instance& inst, bool with_trace);
Json to_json(const EfficiencyReport& r, const Instance& inst, bool with_trace);
Json to_json(const WorstCaseInstance& w);
Json to_json(const SearchResult& s);
Json to_json(const DesignResult& d);
Json to_json(const AuditReport& a);

// Rank follows agent order; each cluster becomes a subgraph.
std::string graph_to_dot(const InfoGraph& g, const std::vector<VertexSet>& clusters = {});

// Columns m, gamma_num, gamma_den, r, case_tag.
std::string curve_to_csv(const std::vector<CurvePoint>& curve);
std::vector<CurvePoint> curve_from_csv(const std::string& text);

Json read_json_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, const std::string& text);

}  // namespace infogreedy
