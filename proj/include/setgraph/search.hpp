#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "setgraph/graph.hpp"
#include "setgraph/labeling.hpp"

namespace setgraph {

// Practical cap on the ground size the exact search will try.
inline constexpr int kMaxSearchGroundSize = 20;
// Brute-force oracle domain.
inline constexpr int kMaxOracleVertices = 6;
inline constexpr int kMaxOracleGroundSize = 4;

struct SearchStats {
    std::uint64_t nodes = 0;   // assignments applied
    std::uint64_t prunes = 0;  // candidate labels rejected
    double elapsed_seconds = 0;
};

struct SearchResult {
    OperatorKind op = OperatorKind::Union;
    bool found = false;
    int min_size = 0;  // meaningful only when found
    std::optional<Labeling> witness;
    SearchStats stats;
    int lower_bound = 1;  // ceil(log2 n), raised to 1 for the trivial graph
    int cap = 0;          // largest ground size tried
};

/// Smallest non-empty ground set m with ceil(log2 n) <= m <= cap.
int indexing_lower_bound(int n);

/// Exact set-indexing number by iterative deepening on the ground size.
/// Within each level, backtracking assigns subsets to vertices in
/// descending-degree order (ties by index), pruning duplicated vertex
/// labels and incremental edge-label collisions; ground elements may only
/// be introduced in canonical order. Deterministic: same input, same
/// witness. If no set-indexer exists up to the cap the result reports
/// found=false rather than a number.
SearchResult min_index_number(const Graph& g, OperatorKind op, std::optional<int> max_size = std::nullopt);

/// Independent oracle: enumerates every injective vertex labeling (no
/// pruning beyond vertex injectivity) and tests edge-label distinctness on
/// complete maps only. Refuses graphs with more than 6 vertices or caps
/// above 4.
SearchResult brute_force_min(const Graph& g, OperatorKind op, int max_size);

struct GracefulSearch {
    std::optional<Labeling> labeling;
    std::string reason;  // explains a definitive absence
    SearchStats stats;
    bool found() const { return labeling.has_value(); }
};

/// Searches for a graceful labeling over a ground set of exactly m
/// elements: a set-indexer whose edge-label family is the power set minus
/// the empty set (union) or minus the ground set (intersection). The edge
/// count makes the cover condition equivalent to plain edge-injectivity,
/// so absence of a set-indexer at size m is definitive absence. The
/// counting precondition |E| = 2^m - 1 is checked first.
GracefulSearch find_graceful(const Graph& g, OperatorKind op, int ground_size);

}  // namespace setgraph
