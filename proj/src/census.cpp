#include "setgraph/census.hpp"

#include <bit>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace setgraph {

namespace {

std::vector<Edge> all_pairs(int n) {
    std::vector<Edge> pairs;
    pairs.reserve(static_cast<std::size_t>(n) * (n - 1) / 2);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
    return pairs;
}

std::vector<Edge> edges_of_mask(const std::vector<Edge>& pairs, std::uint32_t mask) {
    std::vector<Edge> edges;
    edges.reserve(std::popcount(mask));
    for (std::size_t i = 0; i < pairs.size(); ++i)
        if (mask >> i & 1) edges.push_back(pairs[i]);
    return edges;
}

struct Dsu {
    std::vector<int> parent;
    explicit Dsu(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    // Returns false if x and y were already connected.
    bool unite(int x, int y) {
        x = find(x);
        y = find(y);
        if (x == y) return false;
        parent[x] = y;
        return true;
    }
};

}  // namespace

void for_each_graph(int n, const std::function<void(const Graph&)>& fn) {
    if (n < 1 || n > kMaxCensusVertices)
        throw std::invalid_argument("graph census limited to 1..6 vertices");
    const auto pairs = all_pairs(n);
    const std::uint32_t limit = std::uint32_t{1} << pairs.size();
    for (std::uint32_t mask = 0; mask < limit; ++mask) fn(Graph(n, edges_of_mask(pairs, mask)));
}

void for_each_connected_graph(int n, const std::function<void(const Graph&)>& fn) {
    for_each_graph(n, [&fn](const Graph& g) {
        if (is_connected(g)) fn(g);
    });
}

void for_each_connected_non_tree(int n, const std::function<void(const Graph&)>& fn) {
    for_each_graph(n, [&fn](const Graph& g) {
        if (is_connected(g) && !is_tree(g)) fn(g);
    });
}

void for_each_labeled_tree(int n, const std::function<void(const Graph&)>& fn) {
    if (n < 1 || n > kMaxTreeCensusVertices)
        throw std::invalid_argument("tree census limited to 1..8 vertices");
    if (n == 1) {
        fn(Graph(1, {}));
        return;
    }
    const auto pairs = all_pairs(n);
    const int k = n - 1;
    // Walk all k-element edge subsets (Gosper's hack) and keep the spanning ones.
    const std::uint32_t limit = std::uint32_t{1} << pairs.size();
    std::uint32_t mask = (std::uint32_t{1} << k) - 1;
    while (mask < limit) {
        Dsu dsu(n);
        bool acyclic = true;
        for (std::size_t i = 0; i < pairs.size() && acyclic; ++i)
            if (mask >> i & 1) acyclic = dsu.unite(pairs[i].first, pairs[i].second);
        if (acyclic) fn(Graph(n, edges_of_mask(pairs, mask)));  // n-1 acyclic edges span
        const std::uint32_t c = mask & -mask;
        const std::uint32_t r = mask + c;
        mask = (((r ^ mask) >> 2) / c) | r;
    }
}

}  // namespace setgraph
