#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "setgraph/graph.hpp"
#include "setgraph/labeling.hpp"

namespace setgraph {

enum class Verdict { consistent, refuted, out_of_domain };

const char* verdict_name(Verdict v);

/// Replayable evidence: a graph, optionally with a labeling, that the
/// verifiers confirm.
struct WitnessRecord {
    Graph graph;
    std::optional<Labeling> labeling;
    std::string details;
};

struct InstanceResult {
    std::string instance;
    Verdict verdict = Verdict::consistent;
    std::uint64_t checked = 0;
    std::string note;
    std::optional<WitnessRecord> witness;
};

/// Outcome of one claim-checking suite. Refutations are first-class
/// results: the report is about what enumeration found, not about whether
/// the claim deserved to hold.
struct ClaimReport {
    std::string claim;
    std::string instance_set;
    std::uint64_t verified = 0;
    std::vector<InstanceResult> instances;
    std::vector<WitnessRecord> counterexamples;

    bool refuted() const;
};

/// Tree/topology equivalence. Constructive direction: chain labelings of
/// every labeled tree up to max_n produce set-indexers whose vertex family
/// is a topology (both operators). Converse direction: no disjunctive
/// set-indexer over ground sizes up to max_m on a connected non-tree graph
/// has a topology vertex family. Bounds: max_n <= 6, max_m <= 3.
ClaimReport check_thm_2_8(int max_n, int max_m);

/// Exact set-indexing numbers versus the ceil(log2 n) claim, over the
/// generated families and every connected graph up to min(max_n, 5).
/// Instances whose number exceeds the claim are reported refuted with a
/// replayable witness at the true minimum. Bound: max_n <= 6.
ClaimReport check_indexing_number(int max_n);

/// For every connected graph up to max_n and every set-indexer over ground
/// sizes up to max_m whose vertex family is a topology: disjunctive vertex
/// families must equal the edge family plus the empty set, conjunctive
/// ones the edge family plus the ground set. Non-topology indexers are out
/// of domain. Bounds: max_n <= 5, max_m <= 3.
ClaimReport check_lemma_2_7(int max_n, int max_m);

/// Graceful labelings searched on every labeled tree with 2^m vertices for
/// m = 1..max_m. Every labeling found must have a discrete vertex family
/// and the even/odd vertex/edge counts; the star on four vertices must be
/// found at m = 2 and the four-cycle must be definitively absent there.
/// Bound: max_m <= 3.
ClaimReport check_graceful_corollary(int max_m);

}  // namespace setgraph
