#pragma once

#include <json.hpp>

#include "setgraph/graph.hpp"
#include "setgraph/harness.hpp"
#include "setgraph/labeling.hpp"
#include "setgraph/search.hpp"

namespace setgraph {

using json = nlohmann::json;

// Graphs: {"n": <int>, "edges": [[u,v], ...]}. Reading accepts unordered
// pairs; writing emits the canonical form.
json graph_to_json(const Graph& g);
Graph graph_from_json(const json& j);

// Ground sets: {"elements": ["a1", ...]}. Subsets are arrays of element
// names in ground-set order.
json ground_to_json(const GroundSet& ground);
GroundSet ground_from_json(const json& j);

json subset_to_json(const Subset& s, const GroundSet& ground);
Subset subset_from_json(const json& j, const GroundSet& ground);

// Labelings: {"ground": {...}, "op": "union"|"intersection",
// "labels": [[name, ...], ...]} indexed by vertex.
json labeling_to_json(const Labeling& lab);
Labeling labeling_from_json(const json& j, const Graph& graph);

// Raw pieces of a labeling file, for verification that must not reject
// non-injective inputs outright.
struct LabelingFile {
    GroundSet ground;
    OperatorKind op;
    std::vector<Subset> labels;
};
LabelingFile labeling_file_from_json(const json& j);

json report_to_json(const VerificationReport& rep);
json search_result_to_json(const SearchResult& res, const Graph& graph);
json claim_report_to_json(const ClaimReport& rep);

}  // namespace setgraph
