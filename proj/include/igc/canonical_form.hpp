#pragma once

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "igc/graph.hpp"

namespace igc {

/// Ordered isomorphic copy of a graph: the row-major upper-triangle adjacency
/// bit sequence over labels 0..n-1 (presented as 1..n externally), packed
/// MSB-first, plus the witnessing vertex -> label bijection.
struct CanonicalForm {
    int n = 0;
    std::vector<std::uint8_t> packed;
    std::vector<std::pair<Vertex, int>> bijection; // (original vertex, label), sorted by vertex

    static std::size_t bit_count(int n) {
        return static_cast<std::size_t>(n) * (static_cast<std::size_t>(n) - 1) / 2;
    }
    static std::size_t bit_index(int n, int i, int j) {
        // row-major upper triangle, 0 <= i < j < n
        return static_cast<std::size_t>(i) * static_cast<std::size_t>(n) -
               static_cast<std::size_t>(i) * (static_cast<std::size_t>(i) + 1) / 2 +
               static_cast<std::size_t>(j - i - 1);
    }

    static CanonicalForm empty_of_size(int n, const VertexSet& original_ids) {
        CanonicalForm f;
        f.n = n;
        f.packed.assign((bit_count(n) + 7) / 8, 0);
        f.bijection.reserve(original_ids.size());
        for (std::size_t i = 0; i < original_ids.size(); ++i)
            f.bijection.emplace_back(original_ids[i], static_cast<int>(i));
        return f;
    }

    bool bit(int i, int j) const {
        if (i == j) return false;
        if (i > j) std::swap(i, j);
        std::size_t t = bit_index(n, i, j);
        return (packed[t >> 3] >> (7 - (t & 7))) & 1;
    }

    void set_bit(int i, int j) {
        if (i > j) std::swap(i, j);
        std::size_t t = bit_index(n, i, j);
        packed[t >> 3] |= static_cast<std::uint8_t>(1u << (7 - (t & 7)));
    }

    int label_of(Vertex v) const {
        auto it = std::lower_bound(bijection.begin(), bijection.end(), v,
                                   [](const std::pair<Vertex, int>& p, Vertex x) { return p.first < x; });
        if (it == bijection.end() || it->first != v)
            throw std::invalid_argument("CanonicalForm: vertex not in bijection");
        return it->second;
    }

    Graph decode() const {
        Graph g(n);
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if (bit(i, j)) g.add_edge(i, j);
        return g;
    }

    /// FNV-1a over n and the packed bits, 16 hex chars.
    std::string digest_hex() const {
        std::uint64_t h = 1469598103934665603ULL;
        auto eat = [&](std::uint8_t byte) {
            h ^= byte;
            h *= 1099511628211ULL;
        };
        for (int s = 0; s < 64; s += 8) eat(static_cast<std::uint8_t>((static_cast<std::uint64_t>(n) >> s) & 0xff));
        for (std::uint8_t b : packed) eat(b);
        static const char* hex = "0123456789abcdef";
        std::string out(16, '0');
        for (int i = 15; i >= 0; --i) {
            out[static_cast<std::size_t>(i)] = hex[h & 0xf];
            h >>= 4;
        }
        return out;
    }

    friend bool operator==(const CanonicalForm& a, const CanonicalForm& b) {
        return a.n == b.n && a.packed == b.packed;
    }
};

/// Ascending (n, bits) order; padding bits are zero so byte-wise comparison
/// matches bit-sequence comparison for equal n.
inline bool form_less(const CanonicalForm& a, const CanonicalForm& b) {
    if (a.n != b.n) return a.n < b.n;
    return a.packed < b.packed;
}

/// Lexicographically least form among candidates of equal size.
inline CanonicalForm lex_leader(const std::vector<CanonicalForm>& forms) {
    if (forms.empty()) throw std::invalid_argument("lex_leader: empty candidate list");
    const CanonicalForm* best = &forms[0];
    for (const auto& f : forms) {
        if (f.n != forms[0].n) throw std::invalid_argument("lex_leader: size mismatch");
        if (form_less(f, *best)) best = &f;
    }
    return *best;
}

/// Block-diagonal combination with blocks sorted ascending by (n, bits).
/// Original vertex ids of the inputs must be pairwise disjoint.
inline CanonicalForm lex_disjoint_union(std::vector<CanonicalForm> forms) {
    std::stable_sort(forms.begin(), forms.end(),
                     [](const CanonicalForm& a, const CanonicalForm& b) { return form_less(a, b); });
    long long total = 0;
    for (const auto& f : forms) total += f.n;
    CanonicalForm out;
    out.n = static_cast<int>(total);
    out.packed.assign((CanonicalForm::bit_count(out.n) + 7) / 8, 0);
    int offset = 0;
    for (const auto& f : forms) {
        for (int i = 0; i < f.n; ++i)
            for (int j = i + 1; j < f.n; ++j)
                if (f.bit(i, j)) out.set_bit(offset + i, offset + j);
        for (auto [v, lab] : f.bijection) out.bijection.emplace_back(v, lab + offset);
        offset += f.n;
    }
    std::sort(out.bijection.begin(), out.bijection.end());
    for (std::size_t i = 1; i < out.bijection.size(); ++i)
        if (out.bijection[i].first == out.bijection[i - 1].first)
            throw std::invalid_argument("lex_disjoint_union: overlapping vertex ids");
    return out;
}

} // namespace igc
