#pragma once

#include <vector>

#include "setgraph/graph.hpp"
#include "setgraph/labeling.hpp"

namespace setgraph {

/// Universal disjunctive set-indexer: ground set of size n, vertex i gets
/// the singleton {a_{i+1}}. Works on every simple graph.
Labeling singleton_dsi(const Graph& g);

/// Universal conjunctive set-indexer: ground set of size n, vertex i gets
/// the complement of {a_{i+1}}.
Labeling complement_csi(const Graph& g);

/// Nested-chain disjunctive labeling of a tree: vertices taken in
/// breadth-first order from vertex 0, the k-th vertex gets the first k
/// ground elements. The vertex family is a chain topology and every edge
/// inherits its child endpoint's label, so the labeling is a set-indexer.
/// Ground set size is n-1 (size 1 for the single-vertex tree).
Labeling chain_dsi_tree(const Graph& tree);

/// Conjunctive dual of chain_dsi_tree: the k-th vertex in breadth-first
/// order gets the complement of the first k ground elements, so the root
/// carries the ground set itself.
Labeling chain_csi_tree(const Graph& tree);

/// Breadth-first vertex order from vertex 0 with ascending neighbor ties;
/// parents precede children on trees. Exposed for tests.
std::vector<int> bfs_order(const Graph& g);

}  // namespace setgraph
