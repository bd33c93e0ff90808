#pragma once

#include <string>

#include "setgraph/graph.hpp"
#include "setgraph/labeling.hpp"

namespace setgraph {

/// DOT rendering of an undirected graph; vertices are v0..v{n-1}.
std::string export_dot(const Graph& g);

/// DOT rendering with vertex and induced edge labels like "{a1,a2}".
std::string export_dot(const Labeling& lab);

}  // namespace setgraph
