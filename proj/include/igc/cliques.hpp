#pragma once

#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "igc/bitwords.hpp"
#include "igc/graph.hpp"

namespace igc {

struct MaxClique {
    VertexSet members;
    int id = -1;
};

/// Deduplicated maximal cliques in lexicographic member order, with a
/// per-vertex index of the clique ids containing it.
struct CliqueFamily {
    std::vector<MaxClique> cliques;
    std::vector<std::vector<int>> member_of; // vertex -> sorted clique ids

    int count() const { return static_cast<int>(cliques.size()); }
    const VertexSet& members(int id) const { return cliques[static_cast<std::size_t>(id)].members; }

    /// Index of the clique with exactly these members, or -1.
    int find(const VertexSet& members_sorted) const {
        int lo = 0, hi = count();
        while (lo < hi) {
            int mid = (lo + hi) / 2;
            if (members(mid) < members_sorted) lo = mid + 1; else hi = mid;
        }
        if (lo < count() && members(lo) == members_sorted) return lo;
        return -1;
    }
};

/// Family construction shared by the clique enumerators: lexicographic member
/// order fixes the ids, membership index derived.
inline CliqueFamily family_from_sets(const std::set<VertexSet>& sets, int n) {
    CliqueFamily fam;
    fam.member_of.assign(static_cast<std::size_t>(n), {});
    int id = 0;
    for (const auto& members : sets) {
        for (Vertex v : members) fam.member_of[static_cast<std::size_t>(v)].push_back(id);
        fam.cliques.push_back(MaxClique{members, id});
        ++id;
    }
    return fam;
}

/// Maximal cliques of the form N(u) ∩ N(v) over closed neighborhoods.
/// Pairs range over adjacent-or-equal (u, v) only; a candidate is kept iff
/// the intersection of the closed neighborhoods over its members equals the
/// candidate itself, which is equivalent to being a maximal clique.
/// On interval graphs this enumerates every maximal clique.
inline CliqueFamily candidate_max_cliques(const Graph& g) {
    const int n = g.vertex_count();
    const std::size_t width = detail::word_width(n);
    std::vector<detail::WordRow> closed(static_cast<std::size_t>(n));
    for (Vertex v = 0; v < n; ++v)
        closed[static_cast<std::size_t>(v)] = detail::row_of(closed_neighborhood(g, v), width);

    std::set<VertexSet> kept;
    detail::WordRow cand(width), common(width);
    auto consider = [&](Vertex u, Vertex v) {
        const auto& cu = closed[static_cast<std::size_t>(u)];
        const auto& cv = closed[static_cast<std::size_t>(v)];
        for (std::size_t i = 0; i < width; ++i) cand[i] = cu[i] & cv[i];
        common.assign(width, ~0ULL);
        bool any = false;
        for (std::size_t i = 0; i < width; ++i) {
            std::uint64_t w = cand[i];
            while (w) {
                any = true;
                Vertex member = static_cast<Vertex>((i << 6) + static_cast<std::size_t>(__builtin_ctzll(w)));
                const auto& cm = closed[static_cast<std::size_t>(member)];
                for (std::size_t t = 0; t < width; ++t) common[t] &= cm[t];
                w &= w - 1;
            }
        }
        if (any && common == cand) kept.insert(detail::row_to_set(cand));
    };
    for (Vertex v = 0; v < n; ++v) {
        consider(v, v);
        for (Vertex u : g.neighbors(v))
            if (u > v) consider(v, u);
    }
    return family_from_sets(kept, n);
}

/// Number of cliques in the family containing v.
inline int span_of(const CliqueFamily& fam, Vertex v) {
    return static_cast<int>(fam.member_of.at(static_cast<std::size_t>(v)).size());
}

/// First (lexicographic) edge of g not inside any clique of fam, if any.
inline std::optional<std::pair<Vertex, Vertex>> edge_coverage_check(const Graph& g,
                                                                    const CliqueFamily& fam) {
    for (auto [u, v] : g.edges()) {
        if (set_intersect(fam.member_of[static_cast<std::size_t>(u)],
                          fam.member_of[static_cast<std::size_t>(v)])
                .empty())
            return std::make_pair(u, v);
    }
    return std::nullopt;
}

} // namespace igc
