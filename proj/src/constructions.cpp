#include "setgraph/constructions.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

namespace setgraph {

namespace {

// First `count` ground elements as a subset of width m.
Subset prefix_subset(int count, int m) {
    Subset s = Subset::empty_of(m);
    for (int i = 0; i < count; ++i) s = s | Subset::single(i, m);
    return s;
}

}  // namespace

std::vector<int> bfs_order(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<int> order;
    order.reserve(n);
    std::vector<char> seen(n, 0);
    std::deque<int> queue{0};
    seen[0] = 1;
    while (!queue.empty()) {
        int v = queue.front();
        queue.pop_front();
        order.push_back(v);
        for (int u : g.neighbors(v)) {
            if (!seen[u]) {
                seen[u] = 1;
                queue.push_back(u);
            }
        }
    }
    // Unreached vertices (disconnected inputs) follow in index order.
    for (int v = 0; v < n; ++v)
        if (!seen[v]) order.push_back(v);
    return order;
}

Labeling singleton_dsi(const Graph& g) {
    const int n = g.vertex_count();
    GroundSet ground(n);
    std::vector<Subset> labels;
    labels.reserve(n);
    for (int i = 0; i < n; ++i) labels.push_back(Subset::single(i, n));
    return Labeling(g, std::move(ground), OperatorKind::Union, std::move(labels));
}

Labeling complement_csi(const Graph& g) {
    const int n = g.vertex_count();
    GroundSet ground(n);
    std::vector<Subset> labels;
    labels.reserve(n);
    for (int i = 0; i < n; ++i) labels.push_back(Subset::single(i, n).complement());
    return Labeling(g, std::move(ground), OperatorKind::Intersection, std::move(labels));
}

namespace {

Labeling chain_tree(const Graph& tree, OperatorKind op) {
    if (!is_tree(tree)) throw std::invalid_argument("chain constructions require a tree");
    const int n = tree.vertex_count();
    const int m = std::max(n - 1, 1);
    GroundSet ground(m);
    const auto order = bfs_order(tree);
    std::vector<Subset> labels(n, Subset::empty_of(m));
    for (int k = 0; k < n; ++k) {
        Subset chain = prefix_subset(k, m);
        labels[order[k]] = op == OperatorKind::Union ? chain : chain.complement();
    }
    return Labeling(tree, std::move(ground), op, std::move(labels));
}

}  // namespace

Labeling chain_dsi_tree(const Graph& tree) { return chain_tree(tree, OperatorKind::Union); }

Labeling chain_csi_tree(const Graph& tree) { return chain_tree(tree, OperatorKind::Intersection); }

}  // namespace setgraph
