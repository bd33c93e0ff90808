#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "setgraph/graph.hpp"
#include "setgraph/subsets.hpp"

namespace setgraph {

/// The binary operation inducing edge labels: union (disjunctive) or
/// intersection (conjunctive).
enum class OperatorKind { Union, Intersection };

const char* op_name(OperatorKind op);
std::optional<OperatorKind> op_from_name(std::string_view name);

Subset apply_op(OperatorKind op, const Subset& a, const Subset& b);

/// An injective assignment of subsets to the vertices of a graph, together
/// with the operator that induces edge labels. Edge labels are always
/// computed on demand, never stored. Construction rejects non-injective or
/// incomplete assignments; immutable afterwards.
class Labeling {
public:
    Labeling(Graph graph, GroundSet ground, OperatorKind op, std::vector<Subset> vertex_labels);

    const Graph& graph() const noexcept { return graph_; }
    const GroundSet& ground() const noexcept { return ground_; }
    OperatorKind op() const noexcept { return op_; }
    const Subset& vertex_label(int v) const;
    const std::vector<Subset>& vertex_labels() const noexcept { return vertex_labels_; }

    /// Label induced on edge (u,v); the pair must be an edge of the graph.
    Subset induced_edge_label(int u, int v) const;

    /// Induced labels aligned with graph().edges().
    std::vector<Subset> edge_labels() const;

    SetFamily vertex_family() const;
    SetFamily edge_family() const;

private:
    Graph graph_;
    GroundSet ground_;
    OperatorKind op_;
    std::vector<Subset> vertex_labels_;
};

struct IndexerResult {
    bool ok = false;
    // First pair of distinct edges sharing an induced label, in edge-list order.
    std::optional<std::pair<Edge, Edge>> collision;
    std::optional<Subset> repeated_label;
};

/// True iff all induced edge labels are pairwise distinct.
IndexerResult verify_set_indexer(const Labeling& lab);

struct ExclusionResult {
    bool ok = false;
    std::optional<Edge> offending_edge;
};

/// Union labelings never induce the empty set on an edge; intersection
/// labelings never induce the full ground set. Injectivity forces both, so
/// this is an executable invariant check.
ExclusionResult verify_edge_label_exclusions(const Labeling& lab);

inline constexpr std::size_t kWitnessListCap = 64;

struct CoverageResult {
    bool ok = false;
    std::string reason;  // set when a precondition failed or listing was skipped
    std::vector<Subset> missing;  // listed up to kWitnessListCap
    std::vector<Subset> extra;
    std::uint64_t missing_count = 0;
    std::uint64_t extra_count = 0;
};

/// Graceful check: the edge-label family equals the power set minus the
/// empty set (union) or minus the ground set (intersection). Requires a
/// set-indexer; anything else is reported not graceful with a reason.
CoverageResult verify_graceful(const Labeling& lab);

/// Sequential check: vertex labels and edge labels together cover the
/// entire power set. Requires a set-indexer.
CoverageResult verify_sequential(const Labeling& lab);

struct TopogenicResult {
    bool ok = false;
    std::string reason;
    TopologyResult topology;
};

/// Topogenic check: vertex labels and edge labels together form a topology
/// on the ground set. Requires a set-indexer.
TopogenicResult verify_topogenic(const Labeling& lab);

/// Topology test on the vertex-label family alone.
TopologyResult verify_vertex_topology(const Labeling& lab);

struct ReportWitness {
    std::string property;
    std::string details;
};

struct VerificationReport {
    bool is_set_labeling = false;
    bool is_set_indexer = false;
    bool edge_exclusions_hold = false;
    bool vertex_family_is_topology = false;
    bool is_graceful = false;
    bool is_sequential = false;
    bool is_topogenic = false;
    // For intersection labelings only: whether the edge-label family equals
    // the power set minus the empty set, i.e. the non-dual reading of the
    // graceful condition. Recorded, not required.
    std::optional<bool> literal_csi_graceful;
    std::vector<ReportWitness> witnesses;
};

/// Runs every verifier and aggregates flags plus witnesses for each false flag.
VerificationReport full_report(const Labeling& lab);

/// I/O-boundary variant: instead of throwing on an incomplete or
/// non-injective assignment, reports it as not a set-labeling.
VerificationReport full_report_checked(const Graph& graph, const GroundSet& ground, OperatorKind op,
                                       const std::vector<Subset>& vertex_labels);

}  // namespace setgraph
