#pragma once

#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "igc/graph.hpp"
#include "igc/graph_io.hpp"

namespace igc {

/// Closed integer interval [a, b] per vertex, 1 <= a <= b.
/// When `minimal` is set, every occupied integer point corresponds to
/// exactly one maximal clique of the represented graph.
struct IntervalRepresentation {
    std::vector<std::pair<int, int>> intervals;
    bool minimal = false;

    int vertex_count() const { return static_cast<int>(intervals.size()); }

    bool well_formed() const {
        for (auto [a, b] : intervals)
            if (a < 1 || a > b) return false;
        return true;
    }
};

/// The graph whose vertices are the intervals, with edges exactly between
/// intersecting pairs.
inline Graph intersection_graph(const IntervalRepresentation& rep) {
    const int n = rep.vertex_count();
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            auto [au, bu] = rep.intervals[static_cast<std::size_t>(u)];
            auto [av, bv] = rep.intervals[static_cast<std::size_t>(v)];
            if (std::max(au, av) <= std::min(bu, bv)) g.add_edge(u, v);
        }
    return g;
}

/// Text form, one line per vertex: "v a b".
inline std::string write_representation(const IntervalRepresentation& rep) {
    std::ostringstream out;
    for (int v = 0; v < rep.vertex_count(); ++v)
        out << v << ' ' << rep.intervals[static_cast<std::size_t>(v)].first << ' '
            << rep.intervals[static_cast<std::size_t>(v)].second << '\n';
    return out.str();
}

inline IntervalRepresentation parse_representation(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    std::size_t lineno = 0;
    std::vector<std::pair<long long, std::pair<int, int>>> rows;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        std::istringstream ls(line);
        long long v = 0, a = 0, b = 0;
        std::string rest;
        if (!(ls >> v >> a >> b) || (ls >> rest) || v < 0 || a < 1 || a > b)
            throw ParseError("representation: bad line", lineno);
        rows.emplace_back(v, std::make_pair(static_cast<int>(a), static_cast<int>(b)));
    }
    IntervalRepresentation rep;
    rep.intervals.assign(rows.size(), {0, 0});
    std::vector<char> seen(rows.size(), 0);
    for (auto& [v, iv] : rows) {
        if (v >= static_cast<long long>(rows.size()) || seen[static_cast<std::size_t>(v)])
            throw ParseError("representation: vertex ids must be 0..n-1, unique", lineno);
        seen[static_cast<std::size_t>(v)] = 1;
        rep.intervals[static_cast<std::size_t>(v)] = iv;
    }
    return rep;
}

} // namespace igc
