#include "setgraph/dot.hpp"

namespace setgraph {

namespace {

std::string render(const Graph& g, const Labeling* lab) {
    std::string out = "graph G {\n";
    for (int v = 0; v < g.vertex_count(); ++v) {
        out += "  v" + std::to_string(v);
        if (lab) out += " [label=\"" + format_subset(lab->vertex_label(v), lab->ground()) + "\"]";
        out += ";\n";
    }
    for (auto [u, v] : g.edges()) {
        out += "  v" + std::to_string(u) + " -- v" + std::to_string(v);
        if (lab) out += " [label=\"" + format_subset(lab->induced_edge_label(u, v), lab->ground()) + "\"]";
        out += ";\n";
    }
    out += "}\n";
    return out;
}

}  // namespace

std::string export_dot(const Graph& g) { return render(g, nullptr); }

std::string export_dot(const Labeling& lab) { return render(lab.graph(), &lab); }

}  // namespace setgraph
