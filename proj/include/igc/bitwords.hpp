#pragma once

#include <cstdint>
#include <vector>

#include "igc/graph.hpp"

namespace igc::detail {

// Fixed-width bit rows used to make the clique set algebra cheap.

using WordRow = std::vector<std::uint64_t>;

inline std::size_t word_width(int n) { return (static_cast<std::size_t>(n) + 63) / 64; }

inline WordRow row_of(const VertexSet& s, std::size_t width) {
    WordRow row(width, 0);
    for (Vertex v : s) row[static_cast<std::size_t>(v) >> 6] |= 1ULL << (v & 63);
    return row;
}

/// (a ∩ b) \ c != ∅
inline bool meet_minus_nonempty(const WordRow& a, const WordRow& b, const WordRow& c) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if ((a[i] & b[i]) & ~c[i]) return true;
    return false;
}

inline VertexSet row_to_set(const WordRow& row) {
    VertexSet out;
    for (std::size_t i = 0; i < row.size(); ++i) {
        std::uint64_t w = row[i];
        while (w) {
            int b = __builtin_ctzll(w);
            out.push_back(static_cast<Vertex>((i << 6) + static_cast<std::size_t>(b)));
            w &= w - 1;
        }
    }
    return out;
}

} // namespace igc::detail
