#pragma once

// The two graph transformations:
//   bidirect:     H -> H*, replacing each edge xy by arcs xy and yx of the
//                 same color. H has a PC cycle iff H* has one.
//   merge_colors: D -> D', recoloring arcs 1..floor(c/2) to 1 and the rest
//                 to 2. Every PC cycle of D' is a PC cycle of D, and
//                 delta+_mon(D') >= floor(c/2) * delta+_mon(D).

#include <stdexcept>
#include <vector>

#include "pcc/colored_graph.hpp"

namespace pcc {

/// H -> H*: same vertex set and colors; arc count = 2 * edge count.
inline ColoredDigraph bidirect(const ColoredGraph& h) {
    std::vector<ColoredArc> arcs;
    arcs.reserve(2 * h.edge_count());
    for (const auto& e : h.edges()) {
        arcs.push_back({e.u, e.v, e.color});
        arcs.push_back({e.v, e.u, e.color});
    }
    return ColoredDigraph(h.order(), h.colors(), std::move(arcs));
}

/// Recolors every arc through color_map (1-based, values in 1..new_c),
/// leaving the arc set identical. The general form behind merge_colors;
/// not a CLI surface.
inline ColoredDigraph recolor_arcs(const ColoredDigraph& d, const std::vector<int>& color_map,
                                   int new_c) {
    if (static_cast<int>(color_map.size()) != d.colors())
        throw std::invalid_argument("color map must have one entry per color");
    std::vector<ColoredArc> arcs = d.arcs();
    for (auto& a : arcs) {
        int mapped = color_map[static_cast<std::size_t>(a.color - 1)];
        if (mapped < 1 || mapped > new_c) throw std::invalid_argument("color map value out of range");
        a.color = mapped;
    }
    return ColoredDigraph(d.order(), new_c, std::move(arcs));
}

/// D -> D': colors 1..floor(c/2) become 1, the rest become 2. Identity on
/// 2-colored digraphs.
inline ColoredDigraph merge_colors(const ColoredDigraph& d) {
    const int half = d.colors() / 2;
    std::vector<int> map(static_cast<std::size_t>(d.colors()));
    for (int k = 1; k <= d.colors(); ++k) map[static_cast<std::size_t>(k - 1)] = k <= half ? 1 : 2;
    return recolor_arcs(d, map, 2);
}

}  // namespace pcc
