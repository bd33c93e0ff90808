#include "setgraph/graph.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>
#include <string>

namespace setgraph {

Graph::Graph(int n, const std::vector<Edge>& raw_edges) : n_(n) {
    if (n < 1) throw std::invalid_argument("graph needs at least one vertex");
    edges_.reserve(raw_edges.size());
    for (auto [u, v] : raw_edges) {
        if (u == v)
            throw std::invalid_argument("self-loop rejected: (" + std::to_string(u) + "," + std::to_string(v) + ")");
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw std::invalid_argument("edge endpoint out of range: (" + std::to_string(u) + "," +
                                        std::to_string(v) + ") with n=" + std::to_string(n));
        edges_.emplace_back(std::min(u, v), std::max(u, v));
    }
    std::sort(edges_.begin(), edges_.end());
    edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
    adj_.resize(n);
    for (auto [u, v] : edges_) {
        adj_[u].push_back(v);
        adj_[v].push_back(u);
    }
    for (auto& list : adj_) std::sort(list.begin(), list.end());
}

const std::vector<int>& Graph::neighbors(int v) const {
    if (v < 0 || v >= n_) throw std::out_of_range("vertex out of range: " + std::to_string(v));
    return adj_[v];
}

int Graph::degree(int v) const { return static_cast<int>(neighbors(v).size()); }

bool Graph::has_edge(int u, int v) const {
    if (u < 0 || v < 0 || u >= n_ || v >= n_ || u == v) return false;
    Edge e{std::min(u, v), std::max(u, v)};
    return std::binary_search(edges_.begin(), edges_.end(), e);
}

Graph make_graph(int n, const std::vector<Edge>& raw_edges) { return Graph(n, raw_edges); }

Graph generate(GraphFamily family, int n, std::uint64_t seed) {
    if (n < 1) throw std::invalid_argument("graph needs at least one vertex");
    std::vector<Edge> edges;
    switch (family) {
        case GraphFamily::path:
            for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
            break;
        case GraphFamily::cycle:
            if (n < 3) throw std::invalid_argument("cycle needs at least three vertices");
            for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
            edges.emplace_back(0, n - 1);
            break;
        case GraphFamily::star:
            for (int i = 1; i < n; ++i) edges.emplace_back(0, i);
            break;
        case GraphFamily::complete:
            for (int u = 0; u < n; ++u)
                for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
            break;
        case GraphFamily::random_tree: {
            // rng()%i instead of a distribution so results match across
            // standard library implementations.
            std::mt19937_64 rng(seed);
            for (int i = 1; i < n; ++i) edges.emplace_back(static_cast<int>(rng() % i), i);
            break;
        }
    }
    return Graph(n, edges);
}

bool is_connected(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<char> seen(n, 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int reached = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int u : g.neighbors(v)) {
            if (!seen[u]) {
                seen[u] = 1;
                ++reached;
                stack.push_back(u);
            }
        }
    }
    return reached == n;
}

bool is_tree(const Graph& g) {
    return g.edge_count() == static_cast<std::size_t>(g.vertex_count() - 1) && is_connected(g);
}

std::string_view family_name(GraphFamily family) {
    switch (family) {
        case GraphFamily::path: return "path";
        case GraphFamily::cycle: return "cycle";
        case GraphFamily::star: return "star";
        case GraphFamily::complete: return "complete";
        case GraphFamily::random_tree: return "random-tree";
    }
    return "";
}

std::optional<GraphFamily> family_from_name(std::string_view name) {
    if (name == "path") return GraphFamily::path;
    if (name == "cycle") return GraphFamily::cycle;
    if (name == "star") return GraphFamily::star;
    if (name == "complete") return GraphFamily::complete;
    if (name == "random-tree" || name == "random_tree") return GraphFamily::random_tree;
    return std::nullopt;
}

std::string format_edge(const Edge& e) {
    return "(" + std::to_string(e.first) + "," + std::to_string(e.second) + ")";
}

}  // namespace setgraph
