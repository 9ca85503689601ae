#pragma once

// Graphviz DOT export. Edge label is the 1-based color index; the first 12
// colors also get distinct pen colors, anything beyond stays label-only.

#include <array>
#include <ostream>
#include <string_view>

#include "pcc/colored_graph.hpp"

namespace pcc {

namespace detail {

inline constexpr std::array<std::string_view, 12> dot_palette = {
    "red",      "blue",   "forestgreen", "orange", "purple",  "brown",
    "deeppink", "gray40", "olive",       "cyan3",  "magenta", "goldenrod"};

inline void dot_edge_attrs(std::ostream& out, int color) {
    out << " [label=\"" << color << '"';
    if (color >= 1 && color <= static_cast<int>(dot_palette.size()))
        out << ", color=\"" << dot_palette[static_cast<std::size_t>(color - 1)] << '"';
    out << "];\n";
}

}  // namespace detail

inline void export_dot(const ColoredGraph& g, std::ostream& out) {
    out << "graph pcg {\n";
    for (int v = 0; v < g.order(); ++v) out << "  " << v << ";\n";
    for (const auto& e : g.edges()) {
        out << "  " << e.u << " -- " << e.v;
        detail::dot_edge_attrs(out, e.color);
    }
    out << "}\n";
}

inline void export_dot(const ColoredDigraph& d, std::ostream& out) {
    out << "digraph pcg {\n";
    for (int v = 0; v < d.order(); ++v) out << "  " << v << ";\n";
    for (const auto& a : d.arcs()) {
        out << "  " << a.tail << " -> " << a.head;
        detail::dot_edge_attrs(out, a.color);
    }
    out << "}\n";
}

}  // namespace pcc
