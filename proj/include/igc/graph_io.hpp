#pragma once

#include <cstddef>
#include <sstream>
#include <string>
#include <string_view>

#include "igc/graph.hpp"

namespace igc {

/// Parse failure with the byte offset (graph6) or line number (edge lists)
/// at which the input stopped making sense.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, std::size_t where)
        : std::runtime_error(what), position_(where) {}
    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

namespace g6 {
constexpr int kBias = 63;
constexpr int kMaxWritable = 100000; // practical cap; format allows far more
} // namespace g6

/// graph6, bit-exact to the published format: 6-bit bytes biased by 63,
/// upper-triangle bits in column-major order x(0,1), x(0,2), x(1,2), ...
inline Graph parse_graph6(std::string_view line) {
    std::size_t pos = 0;
    auto need = [&](std::size_t k) {
        if (pos + k > line.size())
            throw ParseError("graph6: truncated input", line.size());
    };
    auto byte = [&]() {
        need(1);
        int c = static_cast<unsigned char>(line[pos]);
        if (c < g6::kBias || c > g6::kBias + 63)
            throw ParseError("graph6: byte out of range", pos);
        ++pos;
        return c - g6::kBias;
    };

    need(1);
    long long n = 0;
    if (static_cast<unsigned char>(line[0]) != '~') {
        n = byte();
    } else {
        ++pos;
        need(1);
        int words = 3;
        if (static_cast<unsigned char>(line[pos]) == '~') {
            ++pos;
            words = 6;
        }
        for (int i = 0; i < words; ++i) n = (n << 6) | byte();
    }
    if (n > g6::kMaxWritable)
        throw ParseError("graph6: vertex count exceeds supported cap", 0);

    Graph g(static_cast<int>(n));
    int acc = 0, left = 0;
    for (Vertex j = 1; j < n; ++j) {
        for (Vertex i = 0; i < j; ++i) {
            if (left == 0) {
                acc = byte();
                left = 6;
            }
            if (acc & (1 << (left - 1))) g.add_edge(i, j);
            --left;
        }
    }
    if (pos != line.size())
        throw ParseError("graph6: trailing bytes", pos);
    return g;
}

inline std::string write_graph6(const Graph& g) {
    const int n = g.vertex_count();
    if (n > g6::kMaxWritable)
        throw std::invalid_argument("write_graph6: vertex count exceeds supported cap");
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(n + g6::kBias));
    } else {
        out.push_back('~');
        for (int shift = 12; shift >= 0; shift -= 6)
            out.push_back(static_cast<char>(((n >> shift) & 0x3f) + g6::kBias));
    }
    int acc = 0, used = 0;
    for (Vertex j = 1; j < n; ++j) {
        for (Vertex i = 0; i < j; ++i) {
            acc = (acc << 1) | (g.has_edge(i, j) ? 1 : 0);
            if (++used == 6) {
                out.push_back(static_cast<char>(acc + g6::kBias));
                acc = 0;
                used = 0;
            }
        }
    }
    if (used > 0) out.push_back(static_cast<char>((acc << (6 - used)) + g6::kBias));
    return out;
}

/// Edge-list text: first line "n m", then m lines "u v" (0-based).
/// Self-loops, duplicates and out-of-range endpoints are rejected with the
/// offending line number.
inline Graph parse_edge_list(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    std::size_t lineno = 0;
    auto next_line = [&]() {
        while (std::getline(in, line)) {
            ++lineno;
            if (line.find_first_not_of(" \t\r") != std::string::npos) return true;
        }
        ++lineno;
        return false;
    };

    if (!next_line()) throw ParseError("edge list: missing header line", lineno);
    long long n = 0, m = 0;
    {
        std::istringstream hs(line);
        if (!(hs >> n >> m) || n < 0 || m < 0)
            throw ParseError("edge list: bad header, expected \"n m\"", lineno);
        std::string rest;
        if (hs >> rest) throw ParseError("edge list: bad header, expected \"n m\"", lineno);
    }
    Graph g(static_cast<int>(n));
    for (long long i = 0; i < m; ++i) {
        if (!next_line()) throw ParseError("edge list: expected more edge lines", lineno);
        std::istringstream es(line);
        long long u = 0, v = 0;
        if (!(es >> u >> v))
            throw ParseError("edge list: bad edge line", lineno);
        std::string rest;
        if (es >> rest) throw ParseError("edge list: bad edge line", lineno);
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw ParseError("edge list: endpoint out of range", lineno);
        if (u == v) throw ParseError("edge list: self-loop", lineno);
        if (g.has_edge(static_cast<Vertex>(u), static_cast<Vertex>(v)))
            throw ParseError("edge list: duplicate edge", lineno);
        g.add_edge(static_cast<Vertex>(u), static_cast<Vertex>(v));
    }
    if (next_line()) throw ParseError("edge list: trailing content", lineno);
    return g;
}

inline std::string write_edge_list(const Graph& g) {
    std::ostringstream out;
    out << g.vertex_count() << ' ' << g.edge_count() << '\n';
    for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
    return out.str();
}

} // namespace igc
