#include "setgraph/json_io.hpp"

#include <stdexcept>

namespace setgraph {

json graph_to_json(const Graph& g) {
    json edges = json::array();
    for (auto [u, v] : g.edges()) edges.push_back(json::array({u, v}));
    return json{{"n", g.vertex_count()}, {"edges", edges}};
}

Graph graph_from_json(const json& j) {
    if (!j.is_object() || !j.contains("n") || !j.contains("edges"))
        throw std::invalid_argument("graph JSON needs \"n\" and \"edges\"");
    std::vector<Edge> edges;
    for (const auto& e : j.at("edges")) {
        if (!e.is_array() || e.size() != 2) throw std::invalid_argument("edge must be a pair [u,v]");
        edges.emplace_back(e.at(0).get<int>(), e.at(1).get<int>());
    }
    return Graph(j.at("n").get<int>(), edges);
}

json ground_to_json(const GroundSet& ground) { return json{{"elements", ground.names()}}; }

GroundSet ground_from_json(const json& j) {
    if (!j.is_object() || !j.contains("elements"))
        throw std::invalid_argument("ground set JSON needs \"elements\"");
    return GroundSet(j.at("elements").get<std::vector<std::string>>());
}

json subset_to_json(const Subset& s, const GroundSet& ground) {
    json names = json::array();
    for (int i = 0; i < ground.size(); ++i)
        if (s.contains(i)) names.push_back(ground.name(i));
    return names;
}

Subset subset_from_json(const json& j, const GroundSet& ground) {
    Subset s = ground.empty_set();
    for (const auto& name : j) {
        const auto idx = ground.index_of(name.get<std::string>());
        if (!idx) throw std::invalid_argument("unknown ground element: " + name.get<std::string>());
        s = s | Subset::single(*idx, ground.size());
    }
    return s;
}

json labeling_to_json(const Labeling& lab) {
    json labels = json::array();
    for (const auto& s : lab.vertex_labels()) labels.push_back(subset_to_json(s, lab.ground()));
    return json{{"ground", ground_to_json(lab.ground())}, {"op", op_name(lab.op())}, {"labels", labels}};
}

LabelingFile labeling_file_from_json(const json& j) {
    if (!j.is_object() || !j.contains("ground") || !j.contains("op") || !j.contains("labels"))
        throw std::invalid_argument("labeling JSON needs \"ground\", \"op\" and \"labels\"");
    GroundSet ground = ground_from_json(j.at("ground"));
    const auto op = op_from_name(j.at("op").get<std::string>());
    if (!op) throw std::invalid_argument("op must be \"union\" or \"intersection\"");
    std::vector<Subset> labels;
    for (const auto& entry : j.at("labels")) labels.push_back(subset_from_json(entry, ground));
    return LabelingFile{std::move(ground), *op, std::move(labels)};
}

Labeling labeling_from_json(const json& j, const Graph& graph) {
    LabelingFile file = labeling_file_from_json(j);
    return Labeling(graph, std::move(file.ground), file.op, std::move(file.labels));
}

json report_to_json(const VerificationReport& rep) {
    json witnesses = json::array();
    for (const auto& w : rep.witnesses) witnesses.push_back({{"property", w.property}, {"details", w.details}});
    json out{{"is_set_labeling", rep.is_set_labeling},
             {"is_set_indexer", rep.is_set_indexer},
             {"edge_exclusions_hold", rep.edge_exclusions_hold},
             {"vertex_family_is_topology", rep.vertex_family_is_topology},
             {"is_graceful", rep.is_graceful},
             {"is_sequential", rep.is_sequential},
             {"is_topogenic", rep.is_topogenic},
             {"witnesses", witnesses}};
    if (rep.literal_csi_graceful) out["literal_csi_graceful"] = *rep.literal_csi_graceful;
    return out;
}

namespace {

json stats_to_json(const SearchStats& stats) {
    return json{{"nodes", stats.nodes}, {"prunes", stats.prunes}, {"elapsed_seconds", stats.elapsed_seconds}};
}

}  // namespace

json search_result_to_json(const SearchResult& res, const Graph& graph) {
    json out{{"op", op_name(res.op)},      {"found", res.found},
             {"lower_bound", res.lower_bound}, {"cap", res.cap},
             {"stats", stats_to_json(res.stats)}, {"graph", graph_to_json(graph)}};
    if (res.found) {
        out["min_size"] = res.min_size;
        out["witness"] = labeling_to_json(*res.witness);
    } else {
        out["min_size"] = nullptr;
        out["witness"] = nullptr;
    }
    return out;
}

json claim_report_to_json(const ClaimReport& rep) {
    json instances = json::array();
    for (const auto& ins : rep.instances) {
        json row{{"instance", ins.instance},
                 {"verdict", verdict_name(ins.verdict)},
                 {"checked", ins.checked},
                 {"note", ins.note}};
        if (ins.witness) {
            row["witness"] = json{{"graph", graph_to_json(ins.witness->graph)},
                                  {"details", ins.witness->details}};
            if (ins.witness->labeling) row["witness"]["labeling"] = labeling_to_json(*ins.witness->labeling);
        }
        instances.push_back(std::move(row));
    }
    json counterexamples = json::array();
    for (const auto& cex : rep.counterexamples) {
        json row{{"graph", graph_to_json(cex.graph)}, {"details", cex.details}};
        if (cex.labeling) row["labeling"] = labeling_to_json(*cex.labeling);
        counterexamples.push_back(std::move(row));
    }
    return json{{"claim", rep.claim},
                {"instance_set", rep.instance_set},
                {"refuted", rep.refuted()},
                {"verified", rep.verified},
                {"instances", instances},
                {"counterexamples", counterexamples}};
}

}  // namespace setgraph
