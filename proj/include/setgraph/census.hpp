#pragma once

#include <functional>

#include "setgraph/graph.hpp"

namespace setgraph {

// Bounds keeping the exhaustive sweeps at desk scale.
inline constexpr int kMaxCensusVertices = 6;
inline constexpr int kMaxTreeCensusVertices = 8;

/// Every graph on n labeled vertices, as edge subsets of the complete
/// graph. No isomorphism reduction; duplicates by shape are intended.
void for_each_graph(int n, const std::function<void(const Graph&)>& fn);

void for_each_connected_graph(int n, const std::function<void(const Graph&)>& fn);

void for_each_connected_non_tree(int n, const std::function<void(const Graph&)>& fn);

/// Every labeled tree on n vertices (edge subsets of size n-1 that connect
/// all vertices). Accepts n up to 8; there are n^(n-2) of them.
void for_each_labeled_tree(int n, const std::function<void(const Graph&)>& fn);

}  // namespace setgraph
