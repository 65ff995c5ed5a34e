#pragma once

// Intentionally naive reference implementations used by tests and the
// acceptance harness. Where the main modules use structural recursion these
// use exhaustive search, so agreement between the two is evidence rather
// than tautology.

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <stdexcept>
#include <vector>

#include "igc/canonical_form.hpp"
#include "igc/cliques.hpp"
#include "igc/graph.hpp"
#include "igc/interval_representation.hpp"

namespace igc {

namespace oracle_detail {

constexpr int kBruteVertexCap = 9;
constexpr int kBrutePermCap = 9; // cap on clique permutations

inline void check_vertex_cap(const Graph& g, const char* who) {
    if (g.vertex_count() > kBruteVertexCap)
        throw std::invalid_argument(std::string(who) + ": graph too large for brute force");
}

/// Upper-triangle row-major bits packed into a uint64, MSB-first, under the
/// labeling order[label] = vertex. n <= 9 so at most 36 bits.
inline std::uint64_t encode_order(const std::vector<std::uint32_t>& adj_mask,
                                  const std::vector<int>& order) {
    std::uint64_t enc = 0;
    const int n = static_cast<int>(order.size());
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            enc = (enc << 1) |
                  ((adj_mask[static_cast<std::size_t>(order[static_cast<std::size_t>(i)])] >>
                    order[static_cast<std::size_t>(j)]) & 1u);
    return enc;
}

inline std::vector<std::uint32_t> adjacency_masks(const Graph& g) {
    std::vector<std::uint32_t> m(static_cast<std::size_t>(g.vertex_count()), 0);
    for (auto [u, v] : g.edges()) {
        m[static_cast<std::size_t>(u)] |= 1u << v;
        m[static_cast<std::size_t>(v)] |= 1u << u;
    }
    return m;
}

inline Graph decode_encoding(int n, std::uint64_t enc) {
    Graph g(n);
    const int bits = n * (n - 1) / 2;
    int t = 0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j, ++t)
            if ((enc >> (bits - 1 - t)) & 1ULL) g.add_edge(i, j);
    return g;
}

inline std::pair<std::uint64_t, std::vector<int>> min_encoding(const Graph& g) {
    const int n = g.vertex_count();
    auto masks = adjacency_masks(g);
    std::vector<int> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    std::uint64_t best = ~0ULL;
    std::vector<int> best_order = order;
    do {
        std::uint64_t enc = encode_order(masks, order);
        if (enc < best) {
            best = enc;
            best_order = order;
        }
    } while (std::next_permutation(order.begin(), order.end()));
    if (n <= 1) best = 0;
    return {best, best_order};
}

/// Is perm (a sequence of clique ids) an arrangement with every vertex in
/// consecutive cliques?
inline bool arrangement_consecutive(const CliqueFamily& fam, const std::vector<int>& perm) {
    const int k = static_cast<int>(perm.size());
    std::vector<int> pos(static_cast<std::size_t>(k), 0);
    for (int p = 0; p < k; ++p) pos[static_cast<std::size_t>(perm[static_cast<std::size_t>(p)])] = p;
    for (const auto& ids : fam.member_of) {
        if (ids.empty()) continue;
        int lo = static_cast<int>(pos.size()), hi = -1;
        for (int id : ids) {
            lo = std::min(lo, pos[static_cast<std::size_t>(id)]);
            hi = std::max(hi, pos[static_cast<std::size_t>(id)]);
        }
        if (hi - lo + 1 != static_cast<int>(ids.size())) return false;
    }
    return true;
}

inline void bk_pivot(VertexSet& r, VertexSet p, VertexSet x, const Graph& g,
                     std::set<VertexSet>& out) {
    if (p.empty() && x.empty()) {
        out.insert(r);
        return;
    }
    // pivot with the most neighbors inside p
    Vertex pivot = -1;
    std::size_t best = 0;
    bool first = true;
    for (const VertexSet* side : {&p, &x})
        for (Vertex u : *side) {
            std::size_t cnt = set_intersect(p, g.neighbors(u)).size();
            if (first || cnt > best) {
                pivot = u;
                best = cnt;
                first = false;
            }
        }
    VertexSet iterate = set_difference(p, g.neighbors(pivot));
    for (Vertex v : iterate) {
        r.push_back(v);
        bk_pivot(r, set_intersect(p, g.neighbors(v)), set_intersect(x, g.neighbors(v)), g, out);
        r.pop_back();
        p = set_difference(p, VertexSet{v});
        x = set_union(x, VertexSet{v});
    }
}

inline void bk_basic(VertexSet& r, VertexSet p, VertexSet x, const Graph& g,
                     std::set<VertexSet>& out) {
    if (p.empty() && x.empty()) {
        out.insert(r);
        return;
    }
    VertexSet iterate = p;
    for (Vertex v : iterate) {
        r.push_back(v);
        bk_basic(r, set_intersect(p, g.neighbors(v)), set_intersect(x, g.neighbors(v)), g, out);
        r.pop_back();
        p = set_difference(p, VertexSet{v});
        x = set_union(x, VertexSet{v});
    }
}

} // namespace oracle_detail

/// Reference maximal clique enumeration (Bron-Kerbosch with pivoting).
inline CliqueFamily bron_kerbosch(const Graph& g) {
    std::set<VertexSet> out;
    VertexSet r, p(static_cast<std::size_t>(g.vertex_count()));
    std::iota(p.begin(), p.end(), 0);
    if (!p.empty()) oracle_detail::bk_pivot(r, std::move(p), {}, g, out);
    // sort clique members (r is built unsorted)
    std::set<VertexSet> sorted_out;
    for (auto s : out) {
        std::sort(s.begin(), s.end());
        sorted_out.insert(std::move(s));
    }
    return family_from_sets(sorted_out, g.vertex_count());
}

/// Pivot-free variant, kept as an independent cross-check of the above.
inline CliqueFamily bron_kerbosch_basic(const Graph& g) {
    std::set<VertexSet> out;
    VertexSet r, p(static_cast<std::size_t>(g.vertex_count()));
    std::iota(p.begin(), p.end(), 0);
    if (!p.empty()) oracle_detail::bk_basic(r, std::move(p), {}, g, out);
    std::set<VertexSet> sorted_out;
    for (auto s : out) {
        std::sort(s.begin(), s.end());
        sorted_out.insert(std::move(s));
    }
    return family_from_sets(sorted_out, g.vertex_count());
}

/// Minimum bit sequence over all n! relabelings; n <= 9.
inline CanonicalForm brute_canonical(const Graph& g) {
    oracle_detail::check_vertex_cap(g, "brute_canonical");
    const int n = g.vertex_count();
    auto [enc, order] = oracle_detail::min_encoding(g);
    CanonicalForm f;
    f.n = n;
    f.packed.assign((CanonicalForm::bit_count(n) + 7) / 8, 0);
    const int bits = static_cast<int>(CanonicalForm::bit_count(n));
    for (int t = 0; t < bits; ++t)
        if ((enc >> (bits - 1 - t)) & 1ULL)
            f.packed[static_cast<std::size_t>(t) >> 3] |=
                static_cast<std::uint8_t>(1u << (7 - (t & 7)));
    for (int label = 0; label < n; ++label)
        f.bijection.emplace_back(order[static_cast<std::size_t>(label)], label);
    std::sort(f.bijection.begin(), f.bijection.end());
    return f;
}

/// Bijection search; independent of the canonical-form route.
inline bool brute_isomorphic(const Graph& g, const Graph& h) {
    oracle_detail::check_vertex_cap(g, "brute_isomorphic");
    oracle_detail::check_vertex_cap(h, "brute_isomorphic");
    const int n = g.vertex_count();
    if (h.vertex_count() != n || g.edge_count() != h.edge_count()) return false;

    std::vector<int> map_to(static_cast<std::size_t>(n), -1);
    std::vector<char> used(static_cast<std::size_t>(n), 0);
    auto backtrack = [&](auto&& self, int u) -> bool {
        if (u == n) return true;
        for (int cand = 0; cand < n; ++cand) {
            if (used[static_cast<std::size_t>(cand)]) continue;
            if (g.degree(u) != h.degree(cand)) continue;
            bool ok = true;
            for (int prev = 0; prev < u && ok; ++prev)
                if (g.has_edge(prev, u) != h.has_edge(map_to[static_cast<std::size_t>(prev)], cand))
                    ok = false;
            if (!ok) continue;
            map_to[static_cast<std::size_t>(u)] = cand;
            used[static_cast<std::size_t>(cand)] = 1;
            if (self(self, u + 1)) return true;
            used[static_cast<std::size_t>(cand)] = 0;
            map_to[static_cast<std::size_t>(u)] = -1;
        }
        return false;
    };
    return backtrack(backtrack, 0);
}

struct BruteIntervalResult {
    bool is_interval = false;
    std::optional<IntervalRepresentation> representation;
};

/// Clique-arrangement search per component. A component whose maximal clique
/// count exceeds its vertex count can never be arranged consecutively (every
/// clique needs a private first vertex), so it is rejected outright; beyond
/// that, clique counts above the permutation cap raise a usage error.
inline BruteIntervalResult brute_is_interval(const Graph& g) {
    IntervalRepresentation rep;
    rep.intervals.assign(static_cast<std::size_t>(g.vertex_count()), {0, 0});
    rep.minimal = true;
    int offset = 0;
    for (const VertexSet& w : connected_components(g)) {
        InducedSubgraph sub = induced_subgraph(g, w);
        CliqueFamily fam = bron_kerbosch(sub.graph);
        const int k = fam.count();
        if (k > sub.graph.vertex_count()) return {};
        if (k > oracle_detail::kBrutePermCap)
            throw std::invalid_argument("brute_is_interval: component clique count exceeds cap");
        std::vector<int> perm(static_cast<std::size_t>(k));
        std::iota(perm.begin(), perm.end(), 0);
        bool found = false;
        do {
            if (oracle_detail::arrangement_consecutive(fam, perm)) {
                found = true;
                break;
            }
        } while (std::next_permutation(perm.begin(), perm.end()));
        if (!found) return {};
        for (int p = 0; p < k; ++p) {
            int point = offset + p + 1;
            for (Vertex v : fam.members(perm[static_cast<std::size_t>(p)])) {
                auto& iv = rep.intervals[static_cast<std::size_t>(w[static_cast<std::size_t>(v)])];
                if (iv.first == 0) iv = {point, point};
                else iv.second = point;
            }
        }
        offset += k;
    }
    return {true, std::move(rep)};
}

/// Cliques appearing first in at least one valid consecutive arrangement.
inline std::vector<VertexSet> brute_possible_ends(const Graph& g) {
    CliqueFamily fam = bron_kerbosch(g);
    const int k = fam.count();
    if (k > g.vertex_count()) return {};
    if (k > oracle_detail::kBrutePermCap)
        throw std::invalid_argument("brute_possible_ends: clique count exceeds cap");
    std::set<VertexSet> ends;
    std::vector<int> perm(static_cast<std::size_t>(k));
    std::iota(perm.begin(), perm.end(), 0);
    do {
        if (oracle_detail::arrangement_consecutive(fam, perm))
            ends.insert(fam.members(perm[0]));
    } while (std::next_permutation(perm.begin(), perm.end()));
    return {ends.begin(), ends.end()};
}

struct GeneratedGraph {
    Graph graph;
    IntervalRepresentation representation;
};

/// n intervals with endpoints drawn uniformly from [1, max_coordinate]
/// (mt19937_64 + modulo, stable across platforms), lower endpoint first.
inline GeneratedGraph random_interval_graph(int n, std::uint64_t seed, int max_coordinate) {
    if (n < 0) throw std::invalid_argument("random_interval_graph: negative n");
    if (max_coordinate < 1) throw std::invalid_argument("random_interval_graph: max_coordinate < 1");
    std::mt19937_64 rng(seed);
    IntervalRepresentation rep;
    rep.intervals.reserve(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) {
        int a = static_cast<int>(rng() % static_cast<std::uint64_t>(max_coordinate)) + 1;
        int b = static_cast<int>(rng() % static_cast<std::uint64_t>(max_coordinate)) + 1;
        if (a > b) std::swap(a, b);
        rep.intervals.emplace_back(a, b);
    }
    Graph g = intersection_graph(rep);
    return {std::move(g), std::move(rep)};
}

/// One representative per isomorphism class, n <= 7. Representatives are the
/// decoded brute-canonical forms, listed in ascending canonical order.
/// Counts per n: 1, 1, 2, 4, 11, 34, 156, 1044 for n = 0..7.
inline std::vector<Graph> enumerate_graphs(int n) {
    if (n < 0 || n > 7) throw std::invalid_argument("enumerate_graphs: supported for n <= 7 only");
    if (n <= 6) {
        std::map<std::uint64_t, Graph> classes;
        const int pairs = n * (n - 1) / 2;
        for (std::uint64_t mask = 0; mask < (1ULL << pairs); ++mask) {
            Graph g(n);
            int t = 0;
            for (int i = 0; i < n; ++i)
                for (int j = i + 1; j < n; ++j, ++t)
                    if ((mask >> t) & 1ULL) g.add_edge(i, j);
            auto [enc, order] = oracle_detail::min_encoding(g);
            (void)order;
            if (!classes.count(enc)) classes.emplace(enc, oracle_detail::decode_encoding(n, enc));
        }
        std::vector<Graph> out;
        out.reserve(classes.size());
        for (auto& [enc, g] : classes) out.push_back(std::move(g));
        return out;
    }
    // n == 7: every 7-vertex graph is a 6-vertex graph plus one vertex, so
    // augmenting the 6-vertex representatives covers every class.
    std::map<std::uint64_t, Graph> classes;
    for (const Graph& base : enumerate_graphs(6)) {
        for (std::uint32_t mask = 0; mask < 64; ++mask) {
            Graph g(7);
            for (auto [u, v] : base.edges()) g.add_edge(u, v);
            for (int v = 0; v < 6; ++v)
                if ((mask >> v) & 1u) g.add_edge(v, 6);
            auto [enc, order] = oracle_detail::min_encoding(g);
            (void)order;
            if (!classes.count(enc)) classes.emplace(enc, oracle_detail::decode_encoding(7, enc));
        }
    }
    std::vector<Graph> out;
    out.reserve(classes.size());
    for (auto& [enc, g] : classes) out.push_back(std::move(g));
    return out;
}

} // namespace igc
