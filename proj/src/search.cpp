#include "setgraph/search.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <numeric>
#include <stdexcept>

namespace setgraph {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

std::uint32_t op_mask(OperatorKind op, std::uint32_t a, std::uint32_t b) {
    return op == OperatorKind::Union ? (a | b) : (a & b);
}

// Backtracking search for a set-indexer over a fixed ground size m <= 20.
// Candidate labels are tried in ascending bit order, so the first solution
// found is the lexicographically smallest along the vertex order.
struct LevelSearch {
    const Graph& graph;
    OperatorKind op;
    int m;
    std::uint32_t subset_limit;
    std::vector<int> order;
    std::vector<std::uint32_t> label;
    std::vector<char> assigned;
    std::vector<char> vertex_used;
    std::vector<char> edge_used;
    // Undo log for edge-label marks; frames unwind to their own base.
    std::vector<std::uint32_t> mark_stack;
    int mark_top = 0;
    int introduced = 0;  // ground elements already appearing in some label
    SearchStats& stats;

    LevelSearch(const Graph& g, OperatorKind o, int ground, SearchStats& st)
        : graph(g),
          op(o),
          m(ground),
          subset_limit(std::uint32_t{1} << ground),
          order(g.vertex_count()),
          label(g.vertex_count(), 0),
          assigned(g.vertex_count(), 0),
          vertex_used(subset_limit, 0),
          edge_used(subset_limit, 0),
          mark_stack(g.edge_count()),
          stats(st) {
        std::iota(order.begin(), order.end(), 0);
        std::stable_sort(order.begin(), order.end(),
                         [&g](int a, int b) { return g.degree(a) > g.degree(b); });
    }

    bool run() { return extend(0); }

    bool extend(int depth) {
        if (depth == graph.vertex_count()) return true;
        const int v = order[depth];
        const std::uint32_t prefix = (std::uint32_t{1} << introduced) - 1;
        for (std::uint32_t s = 0; s < subset_limit; ++s) {
            if (vertex_used[s]) {
                ++stats.prunes;
                continue;
            }
            // New ground elements must extend the used prefix contiguously;
            // any solution can be element-renamed into this form.
            const std::uint32_t fresh = s & ~prefix;
            int fresh_count = 0;
            if (fresh != 0) {
                fresh_count = std::popcount(fresh);
                if ((fresh >> introduced) != (std::uint32_t{1} << fresh_count) - 1) {
                    ++stats.prunes;
                    continue;
                }
            }
            const int mark_base = mark_top;
            bool feasible = true;
            for (int u : graph.neighbors(v)) {
                if (!assigned[u]) continue;
                const std::uint32_t el = op_mask(op, s, label[u]);
                if (edge_used[el]) {
                    feasible = false;
                    break;
                }
                edge_used[el] = 1;
                mark_stack[mark_top++] = el;
            }
            if (!feasible) {
                while (mark_top > mark_base) edge_used[mark_stack[--mark_top]] = 0;
                ++stats.prunes;
                continue;
            }
            ++stats.nodes;
            label[v] = s;
            assigned[v] = 1;
            vertex_used[s] = 1;
            introduced += fresh_count;
            if (extend(depth + 1)) return true;
            introduced -= fresh_count;
            vertex_used[s] = 0;
            assigned[v] = 0;
            while (mark_top > mark_base) edge_used[mark_stack[--mark_top]] = 0;
        }
        return false;
    }
};

Labeling build_witness(const Graph& g, OperatorKind op, int m, const std::vector<std::uint32_t>& masks) {
    GroundSet ground(m);
    std::vector<Subset> labels;
    labels.reserve(masks.size());
    for (std::uint32_t mask : masks) labels.push_back(Subset::from_low_bits(mask, m));
    Labeling lab(g, std::move(ground), op, std::move(labels));
    // Witnesses are re-verified, never trusted from search state.
    if (!verify_set_indexer(lab).ok)
        throw std::logic_error("search produced a labeling that fails verification");
    return lab;
}

}  // namespace

int indexing_lower_bound(int n) {
    if (n <= 2) return 1;  // the ground set is non-empty
    return std::bit_width(static_cast<unsigned>(n - 1));
}

SearchResult min_index_number(const Graph& g, OperatorKind op, std::optional<int> max_size) {
    const int cap = max_size.value_or(kMaxSearchGroundSize);
    if (cap < 1 || cap > kMaxSearchGroundSize)
        throw std::invalid_argument("ground size cap out of range [1, " +
                                    std::to_string(kMaxSearchGroundSize) + "]");
    SearchResult res;
    res.op = op;
    res.lower_bound = indexing_lower_bound(g.vertex_count());
    res.cap = cap;
    const auto start = Clock::now();
    for (int m = res.lower_bound; m <= cap; ++m) {
        LevelSearch level(g, op, m, res.stats);
        if (level.run()) {
            res.found = true;
            res.min_size = m;
            res.witness = build_witness(g, op, m, level.label);
            break;
        }
    }
    res.stats.elapsed_seconds = seconds_since(start);
    return res;
}

namespace {

// Plain enumeration of injective maps; edge labels are only examined on
// complete maps, keeping the oracle independent of the pruned search.
struct OracleLevel {
    const Graph& graph;
    OperatorKind op;
    std::uint32_t subset_limit;
    std::vector<std::uint32_t> label;
    std::vector<char> used;
    SearchStats& stats;

    OracleLevel(const Graph& g, OperatorKind o, int m, SearchStats& st)
        : graph(g), op(o), subset_limit(std::uint32_t{1} << m), label(g.vertex_count(), 0),
          used(subset_limit, 0), stats(st) {}

    bool complete_map_is_indexer() const {
        const auto& edges = graph.edges();
        for (std::size_t i = 0; i < edges.size(); ++i) {
            const std::uint32_t li = op_mask(op, label[edges[i].first], label[edges[i].second]);
            for (std::size_t j = i + 1; j < edges.size(); ++j) {
                if (li == op_mask(op, label[edges[j].first], label[edges[j].second])) return false;
            }
        }
        return true;
    }

    bool enumerate(int v) {
        if (v == graph.vertex_count()) {
            ++stats.nodes;
            return complete_map_is_indexer();
        }
        for (std::uint32_t s = 0; s < subset_limit; ++s) {
            if (used[s]) continue;
            used[s] = 1;
            label[v] = s;
            if (enumerate(v + 1)) return true;
            used[s] = 0;
        }
        return false;
    }
};

}  // namespace

SearchResult brute_force_min(const Graph& g, OperatorKind op, int max_size) {
    if (g.vertex_count() > kMaxOracleVertices)
        throw std::invalid_argument("brute-force oracle limited to graphs with at most " +
                                    std::to_string(kMaxOracleVertices) + " vertices");
    if (max_size < 1 || max_size > kMaxOracleGroundSize)
        throw std::invalid_argument("brute-force oracle limited to ground sizes in [1, " +
                                    std::to_string(kMaxOracleGroundSize) + "]");
    SearchResult res;
    res.op = op;
    res.lower_bound = indexing_lower_bound(g.vertex_count());
    res.cap = max_size;
    const auto start = Clock::now();
    for (int m = 1; m <= max_size; ++m) {
        OracleLevel level(g, op, m, res.stats);
        if (level.enumerate(0)) {
            res.found = true;
            res.min_size = m;
            res.witness = build_witness(g, op, m, level.label);
            break;
        }
    }
    res.stats.elapsed_seconds = seconds_since(start);
    return res;
}

GracefulSearch find_graceful(const Graph& g, OperatorKind op, int ground_size) {
    if (ground_size < 1 || ground_size > kMaxSearchGroundSize)
        throw std::invalid_argument("ground size out of range [1, " +
                                    std::to_string(kMaxSearchGroundSize) + "]");
    GracefulSearch res;
    const auto start = Clock::now();
    const std::uint64_t needed = (std::uint64_t{1} << ground_size) - 1;
    if (g.edge_count() != needed) {
        res.reason = "edge count " + std::to_string(g.edge_count()) + " != 2^" +
                     std::to_string(ground_size) + " - 1 = " + std::to_string(needed);
        res.stats.elapsed_seconds = seconds_since(start);
        return res;
    }
    if (static_cast<std::uint64_t>(g.vertex_count()) > needed + 1) {
        res.reason = "more vertices than subsets; no injective labeling exists";
        res.stats.elapsed_seconds = seconds_since(start);
        return res;
    }
    // With exactly 2^m - 1 edges, any set-indexer at size m has 2^m - 1
    // pairwise distinct edge labels avoiding the excluded subset, which is
    // the whole target family; a plain indexer search is exhaustive here.
    LevelSearch level(g, op, ground_size, res.stats);
    if (level.run()) {
        Labeling lab = build_witness(g, op, ground_size, level.label);
        if (!verify_graceful(lab).ok)
            throw std::logic_error("graceful search produced a non-graceful labeling");
        res.labeling = std::move(lab);
    } else {
        res.reason = "search exhausted: no set-indexer over a ground set of size " +
                     std::to_string(ground_size);
    }
    res.stats.elapsed_seconds = seconds_since(start);
    return res;
}

}  // namespace setgraph
