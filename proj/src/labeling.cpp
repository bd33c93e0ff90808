#include "setgraph/labeling.hpp"

#include <limits>
#include <map>
#include <stdexcept>
#include <unordered_set>

namespace setgraph {

const char* op_name(OperatorKind op) {
    return op == OperatorKind::Union ? "union" : "intersection";
}

std::optional<OperatorKind> op_from_name(std::string_view name) {
    if (name == "union") return OperatorKind::Union;
    if (name == "intersection") return OperatorKind::Intersection;
    return std::nullopt;
}

Subset apply_op(OperatorKind op, const Subset& a, const Subset& b) {
    return op == OperatorKind::Union ? (a | b) : (a & b);
}

Labeling::Labeling(Graph graph, GroundSet ground, OperatorKind op, std::vector<Subset> vertex_labels)
    : graph_(std::move(graph)), ground_(std::move(ground)), op_(op), vertex_labels_(std::move(vertex_labels)) {
    const int n = graph_.vertex_count();
    if (static_cast<int>(vertex_labels_.size()) != n)
        throw std::invalid_argument("labeling must assign a subset to every vertex (got " +
                                    std::to_string(vertex_labels_.size()) + " labels for " + std::to_string(n) +
                                    " vertices)");
    std::map<Subset, int> seen;
    for (int v = 0; v < n; ++v) {
        if (vertex_labels_[v].width() != ground_.size())
            throw std::invalid_argument("label of vertex " + std::to_string(v) +
                                        " does not match the ground set width");
        auto [it, inserted] = seen.emplace(vertex_labels_[v], v);
        if (!inserted)
            throw std::invalid_argument("vertex labeling is not injective: vertices " + std::to_string(it->second) +
                                        " and " + std::to_string(v) + " share " +
                                        format_subset(vertex_labels_[v], ground_));
    }
}

const Subset& Labeling::vertex_label(int v) const {
    if (v < 0 || v >= graph_.vertex_count())
        throw std::out_of_range("vertex out of range: " + std::to_string(v));
    return vertex_labels_[v];
}

Subset Labeling::induced_edge_label(int u, int v) const {
    if (!graph_.has_edge(u, v))
        throw std::invalid_argument("not an edge: (" + std::to_string(u) + "," + std::to_string(v) + ")");
    return apply_op(op_, vertex_labels_[u], vertex_labels_[v]);
}

std::vector<Subset> Labeling::edge_labels() const {
    std::vector<Subset> out;
    out.reserve(graph_.edge_count());
    for (auto [u, v] : graph_.edges()) out.push_back(apply_op(op_, vertex_labels_[u], vertex_labels_[v]));
    return out;
}

SetFamily Labeling::vertex_family() const { return SetFamily(ground_, vertex_labels_); }

SetFamily Labeling::edge_family() const { return SetFamily(ground_, edge_labels()); }

IndexerResult verify_set_indexer(const Labeling& lab) {
    IndexerResult res;
    const auto labels = lab.edge_labels();
    std::unordered_set<Subset> seen;
    seen.reserve(labels.size() * 2);
    bool dup = false;
    for (const auto& s : labels) {
        if (!seen.insert(s).second) {
            dup = true;
            break;
        }
    }
    if (!dup) {
        res.ok = true;
        return res;
    }
    // Rescan for the first colliding pair in edge-list order.
    const auto& edges = lab.graph().edges();
    for (std::size_t i = 0; i < labels.size(); ++i) {
        for (std::size_t j = i + 1; j < labels.size(); ++j) {
            if (labels[i] == labels[j]) {
                res.collision = {edges[i], edges[j]};
                res.repeated_label = labels[i];
                return res;
            }
        }
    }
    return res;
}

ExclusionResult verify_edge_label_exclusions(const Labeling& lab) {
    ExclusionResult res;
    const Subset forbidden =
        lab.op() == OperatorKind::Union ? lab.ground().empty_set() : lab.ground().full_set();
    const auto labels = lab.edge_labels();
    const auto& edges = lab.graph().edges();
    for (std::size_t i = 0; i < labels.size(); ++i) {
        if (labels[i] == forbidden) {
            res.offending_edge = edges[i];
            return res;
        }
    }
    res.ok = true;
    return res;
}

namespace {

// Compares a family against the power set, optionally minus one excluded
// subset. Families only ever contain subsets of the ground set, so the only
// possible "extra" member is the excluded one.
CoverageResult coverage_against_power_set(const GroundSet& ground, const SetFamily& family,
                                          const std::optional<Subset>& excluded) {
    CoverageResult res;
    const int m = ground.size();
    std::uint64_t inside = family.size();
    if (excluded && family.contains(*excluded)) {
        res.extra.push_back(*excluded);
        res.extra_count = 1;
        --inside;
    }
    if (m > 62) {
        // 2^m is not representable; no finite graph reaches it anyway.
        res.missing_count = std::numeric_limits<std::uint64_t>::max();
        res.reason = "power set far exceeds any finite labeling at this ground size";
        return res;
    }
    const std::uint64_t target = (std::uint64_t{1} << m) - (excluded ? 1 : 0);
    res.missing_count = target - inside;
    res.ok = res.missing_count == 0 && res.extra_count == 0;
    if (!res.ok && m <= kMaxMaterializedPowerSet) {
        for (const Subset& s : power_set(ground)) {
            if (excluded && s == *excluded) continue;
            if (!family.contains(s)) {
                res.missing.push_back(s);
                if (res.missing.size() >= kWitnessListCap) break;
            }
        }
    } else if (!res.ok) {
        res.reason = "missing subsets not listed: ground set too large to enumerate";
    }
    return res;
}

CoverageResult not_an_indexer() {
    CoverageResult res;
    res.reason = "not a set-indexer";
    return res;
}

}  // namespace

CoverageResult verify_graceful(const Labeling& lab) {
    if (!verify_set_indexer(lab).ok) return not_an_indexer();
    const Subset excluded =
        lab.op() == OperatorKind::Union ? lab.ground().empty_set() : lab.ground().full_set();
    return coverage_against_power_set(lab.ground(), lab.edge_family(), excluded);
}

CoverageResult verify_sequential(const Labeling& lab) {
    if (!verify_set_indexer(lab).ok) return not_an_indexer();
    SetFamily combined = lab.vertex_family();
    for (const auto& s : lab.edge_labels()) combined.insert(s);
    return coverage_against_power_set(lab.ground(), combined, std::nullopt);
}

TopogenicResult verify_topogenic(const Labeling& lab) {
    TopogenicResult res;
    if (!verify_set_indexer(lab).ok) {
        res.reason = "not a set-indexer";
        return res;
    }
    SetFamily combined = lab.vertex_family();
    for (const auto& s : lab.edge_labels()) combined.insert(s);
    res.topology = is_topology(combined);
    res.ok = res.topology.ok;
    return res;
}

TopologyResult verify_vertex_topology(const Labeling& lab) { return is_topology(lab.vertex_family()); }

namespace {

std::string coverage_details(const CoverageResult& cov, const GroundSet& ground) {
    if (!cov.reason.empty()) return cov.reason;
    std::string out = std::to_string(cov.missing_count) + " missing";
    if (!cov.missing.empty()) {
        out += " (";
        for (std::size_t i = 0; i < cov.missing.size(); ++i) {
            if (i) out += ",";
            out += format_subset(cov.missing[i], ground);
        }
        out += ")";
    }
    if (cov.extra_count > 0) {
        out += ", extra";
        for (const auto& s : cov.extra) out += " " + format_subset(s, ground);
    }
    return out;
}

}  // namespace

VerificationReport full_report(const Labeling& lab) {
    VerificationReport rep;
    rep.is_set_labeling = true;

    const auto idx = verify_set_indexer(lab);
    rep.is_set_indexer = idx.ok;
    if (!idx.ok && idx.collision) {
        rep.witnesses.push_back({"set-indexer", "edges " + format_edge(idx.collision->first) + " and " +
                                                    format_edge(idx.collision->second) + " share label " +
                                                    format_subset(*idx.repeated_label, lab.ground())});
    }

    const auto excl = verify_edge_label_exclusions(lab);
    rep.edge_exclusions_hold = excl.ok;
    if (!excl.ok)
        rep.witnesses.push_back({"edge-label-exclusions",
                                 "edge " + format_edge(*excl.offending_edge) + " carries the forbidden label"});

    const auto vtop = verify_vertex_topology(lab);
    rep.vertex_family_is_topology = vtop.ok;
    if (!vtop.ok) rep.witnesses.push_back({"vertex-family-topology", vtop.describe(lab.ground())});

    const auto graceful = verify_graceful(lab);
    rep.is_graceful = graceful.ok;
    if (!graceful.ok) rep.witnesses.push_back({"graceful", coverage_details(graceful, lab.ground())});

    const auto sequential = verify_sequential(lab);
    rep.is_sequential = sequential.ok;
    if (!sequential.ok) rep.witnesses.push_back({"sequential", coverage_details(sequential, lab.ground())});

    const auto topogenic = verify_topogenic(lab);
    rep.is_topogenic = topogenic.ok;
    if (!topogenic.ok)
        rep.witnesses.push_back({"topogenic", topogenic.reason.empty() ? topogenic.topology.describe(lab.ground())
                                                                       : topogenic.reason});

    if (lab.op() == OperatorKind::Intersection) {
        const auto literal =
            coverage_against_power_set(lab.ground(), lab.edge_family(), lab.ground().empty_set());
        rep.literal_csi_graceful = literal.ok;
        if (!literal.ok)
            rep.witnesses.push_back({"literal-csi-graceful", coverage_details(literal, lab.ground())});
    }
    return rep;
}

VerificationReport full_report_checked(const Graph& graph, const GroundSet& ground, OperatorKind op,
                                       const std::vector<Subset>& vertex_labels) {
    VerificationReport rep;
    if (static_cast<int>(vertex_labels.size()) != graph.vertex_count()) {
        rep.witnesses.push_back({"set-labeling", "expected " + std::to_string(graph.vertex_count()) +
                                                     " vertex labels, got " +
                                                     std::to_string(vertex_labels.size())});
        return rep;
    }
    std::map<Subset, int> seen;
    for (int v = 0; v < graph.vertex_count(); ++v) {
        if (vertex_labels[v].width() != ground.size()) {
            rep.witnesses.push_back(
                {"set-labeling", "label of vertex " + std::to_string(v) + " does not match the ground set"});
            return rep;
        }
        auto [it, inserted] = seen.emplace(vertex_labels[v], v);
        if (!inserted) {
            rep.witnesses.push_back({"set-labeling", "vertices " + std::to_string(it->second) + " and " +
                                                         std::to_string(v) + " share label " +
                                                         format_subset(vertex_labels[v], ground)});
            return rep;
        }
    }
    return full_report(Labeling(graph, ground, op, vertex_labels));
}

}  // namespace setgraph
