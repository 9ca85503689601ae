#pragma once

// The .pcg file format.
//
//   pcg <u|d> <n> <c>
//   <u> <v> <k>
//   ...
//
// One edge/arc per line, colors 1-based. Lines starting with '#' and blank
// lines are ignored. Undirected files require u < v; duplicate pairs and
// loops are rejected. serialize() emits the canonical form: header line,
// then edges ascending by (u, v).

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include "pcc/colored_graph.hpp"

namespace pcc {

class parse_error : public std::runtime_error {
public:
    parse_error(int line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
    int line() const { return line_; }

private:
    int line_;
};

using AnyGraph = std::variant<ColoredGraph, ColoredDigraph>;

namespace detail {

inline bool parse_int(const std::string& tok, long long& out) {
    std::size_t pos = 0;
    try {
        out = std::stoll(tok, &pos);
    } catch (const std::exception&) {
        return false;
    }
    return pos == tok.size();
}

inline std::vector<std::string> split_ws(const std::string& line) {
    std::vector<std::string> toks;
    std::istringstream iss(line);
    std::string t;
    while (iss >> t) toks.push_back(t);
    return toks;
}

}  // namespace detail

inline AnyGraph parse_pcg(std::istream& in) {
    std::string line;
    int lineno = 0;
    bool directed = false;
    long long n = 0, c = 0;
    bool have_header = false;
    std::vector<ColoredEdge> edges;
    std::vector<ColoredArc> arcs;

    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        auto toks = detail::split_ws(line);
        if (toks.empty() || toks[0][0] == '#') continue;
        if (!have_header) {
            if (toks.size() != 4 || toks[0] != "pcg")
                throw parse_error(lineno, "expected header 'pcg <u|d> <n> <c>'");
            if (toks[1] == "u")
                directed = false;
            else if (toks[1] == "d")
                directed = true;
            else
                throw parse_error(lineno, "mode must be 'u' or 'd', got '" + toks[1] + "'");
            if (!detail::parse_int(toks[2], n) || n < 0)
                throw parse_error(lineno, "bad vertex count '" + toks[2] + "'");
            if (!detail::parse_int(toks[3], c) || c < 2)
                throw parse_error(lineno, "bad color count '" + toks[3] + "' (need an integer >= 2)");
            have_header = true;
            continue;
        }
        if (toks.size() != 3) throw parse_error(lineno, "expected '<u> <v> <k>'");
        long long u, v, k;
        if (!detail::parse_int(toks[0], u) || !detail::parse_int(toks[1], v) ||
            !detail::parse_int(toks[2], k))
            throw parse_error(lineno, "non-integer token");
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw parse_error(lineno, "vertex out of range 0.." + std::to_string(n - 1));
        if (u == v) throw parse_error(lineno, "loop at vertex " + std::to_string(u));
        if (k < 1 || k > c) throw parse_error(lineno, "color out of range 1.." + std::to_string(c));
        if (!directed) {
            if (u > v) throw parse_error(lineno, "undirected edges require u < v");
            edges.push_back({static_cast<int>(u), static_cast<int>(v), static_cast<int>(k)});
        } else {
            arcs.push_back({static_cast<int>(u), static_cast<int>(v), static_cast<int>(k)});
        }
    }
    if (!have_header) throw parse_error(lineno, "missing 'pcg' header");
    try {
        if (directed)
            return ColoredDigraph(static_cast<int>(n), static_cast<int>(c), std::move(arcs));
        return ColoredGraph(static_cast<int>(n), static_cast<int>(c), std::move(edges));
    } catch (const std::invalid_argument& e) {
        // duplicate pairs are only visible once the whole list is assembled
        throw parse_error(lineno, e.what());
    }
}

inline AnyGraph parse_pcg(const std::string& text) {
    std::istringstream iss(text);
    return parse_pcg(iss);
}

inline AnyGraph load_pcg(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    return parse_pcg(in);
}

inline void serialize_pcg(const ColoredGraph& g, std::ostream& out) {
    out << "pcg u " << g.order() << ' ' << g.colors() << '\n';
    for (const auto& e : g.edges()) out << e.u << ' ' << e.v << ' ' << e.color << '\n';
}

inline void serialize_pcg(const ColoredDigraph& d, std::ostream& out) {
    out << "pcg d " << d.order() << ' ' << d.colors() << '\n';
    for (const auto& a : d.arcs()) out << a.tail << ' ' << a.head << ' ' << a.color << '\n';
}

inline void serialize_pcg(const AnyGraph& g, std::ostream& out) {
    std::visit([&](const auto& x) { serialize_pcg(x, out); }, g);
}

template <class G>
std::string serialize_pcg(const G& g) {
    std::ostringstream oss;
    serialize_pcg(g, oss);
    return oss.str();
}

template <class G>
void save_pcg(const G& g, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open " + path + " for writing");
    serialize_pcg(g, out);
    if (!out) throw std::runtime_error("write failed: " + path);
}

}  // namespace pcc
