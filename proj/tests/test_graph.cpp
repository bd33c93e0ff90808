#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <stdexcept>

#include "setgraph/graph.hpp"

using namespace setgraph;

TEST_CASE("make_graph canonicalizes edges") {
    const Graph g = make_graph(2, {{1, 0}});
    CHECK(g.vertex_count() == 2);
    CHECK(g.edges() == std::vector<Edge>{{0, 1}});
}

TEST_CASE("make_graph deduplicates reversed duplicates") {
    const Graph g = make_graph(4, {{0, 1}, {1, 0}, {2, 3}});
    CHECK(g.edges() == std::vector<Edge>{{0, 1}, {2, 3}});
}

TEST_CASE("make_graph rejects bad input") {
    CHECK_THROWS_AS(make_graph(3, {{0, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(make_graph(3, {{0, 3}}), std::invalid_argument);
    CHECK_THROWS_AS(make_graph(0, {}), std::invalid_argument);
    CHECK_THROWS_AS(make_graph(2, {{-1, 0}}), std::invalid_argument);
}

TEST_CASE("canonicalization is idempotent") {
    std::mt19937_64 rng(42);
    for (int round = 0; round < 50; ++round) {
        const int n = 2 + static_cast<int>(rng() % 9);
        std::vector<Edge> raw;
        for (int i = 0; i < 12; ++i) {
            const int u = static_cast<int>(rng() % n);
            const int v = static_cast<int>(rng() % n);
            if (u != v) raw.emplace_back(u, v);
        }
        const Graph g = make_graph(n, raw);
        const Graph g2 = make_graph(n, g.edges());
        CHECK(g2.edges() == g.edges());
    }
}

TEST_CASE("generated family shapes") {
    CHECK(generate(GraphFamily::complete, 4).edge_count() == 6);
    CHECK(generate(GraphFamily::path, 1).edge_count() == 0);
    CHECK(generate(GraphFamily::path, 5).edge_count() == 4);
    CHECK(generate(GraphFamily::cycle, 5).edge_count() == 5);
    CHECK(generate(GraphFamily::star, 6).degree(0) == 5);
    CHECK_THROWS_AS(generate(GraphFamily::cycle, 2), std::invalid_argument);
}

TEST_CASE("random trees are trees, reproducibly") {
    const Graph t = generate(GraphFamily::random_tree, 10, 7);
    CHECK(t.edge_count() == 9);
    CHECK(is_connected(t));
    CHECK(is_tree(t));
    const Graph t2 = generate(GraphFamily::random_tree, 10, 7);
    CHECK(t2.edges() == t.edges());
    const Graph t3 = generate(GraphFamily::random_tree, 10, 8);
    CHECK(is_tree(t3));

    for (std::uint64_t seed = 0; seed < 25; ++seed) {
        const int n = 2 + static_cast<int>(seed % 40);
        const Graph t4 = generate(GraphFamily::random_tree, n, seed);
        CHECK(is_tree(t4));
    }
}

TEST_CASE("connectivity and tree predicates") {
    CHECK(is_connected(generate(GraphFamily::path, 4)));
    CHECK(is_tree(generate(GraphFamily::path, 4)));
    CHECK(is_connected(generate(GraphFamily::cycle, 4)));
    CHECK_FALSE(is_tree(generate(GraphFamily::cycle, 4)));
    CHECK_FALSE(is_connected(make_graph(2, {})));
    CHECK(is_connected(make_graph(1, {})));
    CHECK(is_tree(make_graph(1, {})));
    // Right edge count but disconnected: not a tree.
    CHECK_FALSE(is_tree(make_graph(4, {{0, 1}, {1, 2}, {0, 2}})));
}

TEST_CASE("adjacency queries") {
    const Graph g = generate(GraphFamily::path, 4);
    CHECK(g.has_edge(1, 2));
    CHECK(g.has_edge(2, 1));
    CHECK_FALSE(g.has_edge(0, 3));
    CHECK_FALSE(g.has_edge(0, 0));
    CHECK(g.neighbors(1) == std::vector<int>{0, 2});
    CHECK_THROWS_AS(g.neighbors(5), std::out_of_range);
}

TEST_CASE("family names round-trip") {
    for (GraphFamily f : {GraphFamily::path, GraphFamily::cycle, GraphFamily::star,
                          GraphFamily::complete, GraphFamily::random_tree}) {
        CHECK(family_from_name(family_name(f)) == f);
    }
    CHECK_FALSE(family_from_name("wheel").has_value());
}
