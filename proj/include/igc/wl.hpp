#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

#include "igc/graph.hpp"

namespace igc {

namespace wl_detail {

using Digest = std::array<std::uint64_t, 2>;

/// Graph-independent digest of a word sequence (two FNV-1a lanes plus a
/// final avalanche), so colors are comparable across separate refinements.
/// Isomorphic inputs produce identical digests by construction; collisions
/// can only ever under-report differences.
inline Digest digest_words(const std::vector<std::uint64_t>& words) {
    std::uint64_t a = 0xcbf29ce484222325ULL, b = 0x84222325cbf29ce4ULL;
    for (std::uint64_t w : words) {
        for (int s = 0; s < 64; s += 8) {
            std::uint64_t byte = (w >> s) & 0xff;
            a = (a ^ byte) * 0x100000001b3ULL;
            b = (b ^ (byte + 0x9e3779b97f4a7c15ULL)) * 0x100000001b3ULL;
        }
    }
    auto mix = [](std::uint64_t x) {
        x ^= x >> 30;
        x *= 0xbf58476d1ce4e5b9ULL;
        x ^= x >> 27;
        x *= 0x94d049bb133111ebULL;
        x ^= x >> 31;
        return x;
    };
    return {mix(a), mix(b ^ a)};
}

using RoundHistogram = std::vector<std::pair<Digest, int>>; // sorted by digest

inline RoundHistogram histogram_of(std::vector<Digest> ds) {
    std::sort(ds.begin(), ds.end());
    RoundHistogram out;
    for (const Digest& d : ds) {
        if (!out.empty() && out.back().first == d) ++out.back().second;
        else out.emplace_back(d, 1);
    }
    return out;
}

} // namespace wl_detail

/// Transcript of an iterated color refinement run to its stable partition:
/// per round, the sorted multiset of structural color descriptors. Two
/// signatures are equal exactly when joint refinement of the two graphs
/// would never separate their color histograms (modulo digest collisions).
struct WlSignature {
    int k = 1;
    int n = 0;
    int stable_classes = 0;
    std::vector<wl_detail::RoundHistogram> rounds;

    friend bool operator==(const WlSignature&, const WlSignature&) = default;
};

namespace wl_detail {

template <typename Items, typename TupleOf>
inline void refine_loop(WlSignature& sig, std::vector<int>& color, const Items& items,
                        TupleOf&& tuple_of) {
    // round 0: the initial colors themselves
    {
        std::vector<Digest> ds;
        ds.reserve(items.size());
        for (auto it : items) ds.push_back(digest_words({static_cast<std::uint64_t>(color[static_cast<std::size_t>(it)])}));
        sig.rounds.push_back(histogram_of(std::move(ds)));
    }
    std::size_t classes = 0;
    {
        std::vector<int> sorted(color);
        std::sort(sorted.begin(), sorted.end());
        classes = static_cast<std::size_t>(std::unique(sorted.begin(), sorted.end()) - sorted.begin());
    }
    while (true) {
        std::map<std::vector<std::uint64_t>, int> rename;
        std::vector<std::vector<std::uint64_t>> tuples;
        tuples.reserve(items.size());
        for (auto it : items) {
            tuples.push_back(tuple_of(it));
            rename.emplace(tuples.back(), 0);
        }
        int next = 0;
        for (auto& [tup, id] : rename) id = next++;
        std::vector<Digest> ds;
        ds.reserve(items.size());
        std::size_t idx = 0;
        for (auto it : items) {
            color[static_cast<std::size_t>(it)] = rename[tuples[idx]];
            ds.push_back(digest_words(tuples[idx]));
            ++idx;
        }
        sig.rounds.push_back(histogram_of(std::move(ds)));
        std::size_t new_classes = rename.size();
        if (new_classes == classes) break; // stable; this round is the witness
        classes = new_classes;
    }
    sig.stable_classes = static_cast<int>(classes);
}

inline WlSignature refine_1(const Graph& g) {
    WlSignature sig;
    sig.k = 1;
    sig.n = g.vertex_count();
    const int n = g.vertex_count();
    std::vector<int> color(static_cast<std::size_t>(n), 0);
    std::vector<int> items(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) items[static_cast<std::size_t>(i)] = i;
    if (n == 0) {
        sig.rounds.push_back({});
        return sig;
    }
    refine_loop(sig, color, items, [&](int v) {
        std::vector<std::uint64_t> tup;
        tup.reserve(g.neighbors(v).size() + 1);
        tup.push_back(static_cast<std::uint64_t>(color[static_cast<std::size_t>(v)]));
        std::vector<std::uint64_t> nb;
        for (Vertex u : g.neighbors(v)) nb.push_back(static_cast<std::uint64_t>(color[static_cast<std::size_t>(u)]));
        std::sort(nb.begin(), nb.end());
        tup.insert(tup.end(), nb.begin(), nb.end());
        return tup;
    });
    return sig;
}

inline WlSignature refine_2(const Graph& g) {
    WlSignature sig;
    sig.k = 2;
    sig.n = g.vertex_count();
    const int n = g.vertex_count();
    if (n == 0) {
        sig.rounds.push_back({});
        return sig;
    }
    std::vector<int> color(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v)
            color[static_cast<std::size_t>(u) * static_cast<std::size_t>(n) + static_cast<std::size_t>(v)] =
                (u == v) ? 0 : (g.has_edge(u, v) ? 1 : 2);
    std::vector<long long> items(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
    for (std::size_t i = 0; i < items.size(); ++i) items[i] = static_cast<long long>(i);
    refine_loop(sig, color, items, [&](long long pair_idx) {
        const int u = static_cast<int>(pair_idx / n);
        const int v = static_cast<int>(pair_idx % n);
        std::vector<std::uint64_t> tup;
        tup.reserve(static_cast<std::size_t>(n) + 1);
        tup.push_back(static_cast<std::uint64_t>(color[static_cast<std::size_t>(pair_idx)]));
        std::vector<std::uint64_t> ext;
        ext.reserve(static_cast<std::size_t>(n));
        for (int w = 0; w < n; ++w) {
            std::uint64_t cuw = static_cast<std::uint64_t>(
                color[static_cast<std::size_t>(u) * static_cast<std::size_t>(n) + static_cast<std::size_t>(w)]);
            std::uint64_t cwv = static_cast<std::uint64_t>(
                color[static_cast<std::size_t>(w) * static_cast<std::size_t>(n) + static_cast<std::size_t>(v)]);
            ext.push_back((cuw << 32) | cwv);
        }
        std::sort(ext.begin(), ext.end());
        tup.insert(tup.end(), ext.begin(), ext.end());
        return tup;
    });
    return sig;
}

} // namespace wl_detail

constexpr int kWl2VertexCap = 200;

/// Stable refinement signature; k = 1 is classic color refinement, k = 2 the
/// two-dimensional algorithm on ordered pairs with atomic types
/// {equal, adjacent, non-adjacent}.
inline WlSignature wl_refine(const Graph& g, int k) {
    if (k == 1) return wl_detail::refine_1(g);
    if (k == 2) {
        if (g.vertex_count() > kWl2VertexCap)
            throw std::invalid_argument("wl_refine: 2-WL capped at 200 vertices");
        return wl_detail::refine_2(g);
    }
    throw std::invalid_argument("wl_refine: k must be 1 or 2");
}

/// Never true for isomorphic inputs.
inline bool wl_distinguishes(const Graph& g, const Graph& h, int k) {
    return !(wl_refine(g, k) == wl_refine(h, k));
}

} // namespace igc
