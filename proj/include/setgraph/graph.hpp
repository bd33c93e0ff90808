#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace setgraph {

using Edge = std::pair<int, int>;

/// Finite simple undirected graph over vertices 0..n-1. Edges are stored
/// canonically: endpoints ordered, list sorted, duplicates removed.
/// Immutable after construction.
class Graph {
public:
    Graph(int n, const std::vector<Edge>& raw_edges);

    int vertex_count() const noexcept { return n_; }
    std::size_t edge_count() const noexcept { return edges_.size(); }
    const std::vector<Edge>& edges() const noexcept { return edges_; }
    const std::vector<int>& neighbors(int v) const;
    int degree(int v) const;
    bool has_edge(int u, int v) const;

private:
    int n_;
    std::vector<Edge> edges_;
    std::vector<std::vector<int>> adj_;
};

/// Canonicalizing constructor wrapper. Rejects n = 0, self-loops and
/// endpoints outside 0..n-1.
Graph make_graph(int n, const std::vector<Edge>& raw_edges);

enum class GraphFamily { path, cycle, star, complete, random_tree };

/// Standard instance families. Stars center vertex 0; random trees draw a
/// uniform parent in 0..i-1 for each vertex i >= 1, deterministic per seed.
Graph generate(GraphFamily family, int n, std::uint64_t seed = 0);

bool is_connected(const Graph& g);
bool is_tree(const Graph& g);

std::string_view family_name(GraphFamily family);
std::optional<GraphFamily> family_from_name(std::string_view name);

std::string format_edge(const Edge& e);

}  // namespace setgraph
