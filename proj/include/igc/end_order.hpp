#pragma once

#include <deque>
#include <stdexcept>
#include <vector>

#include "igc/bitwords.hpp"
#include "igc/cliques.hpp"
#include "igc/graph.hpp"

namespace igc {

enum class PrecStatus { WeakOrder, AsymmetryViolated };

/// Raised when a structural guarantee that should hold for interval-graph
/// inputs is found violated (non-interval input that slipped past earlier
/// checks, or a genuine bug).
class ModuleConsistencyError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// The relation computed by seeding clique `root` as the left end and closing
/// under the two derivation rules. When status is AsymmetryViolated the
/// matrix content is unspecified; callers may only read `status`.
struct PrecRelation {
    int k = 0;
    int root = -1;
    PrecStatus status = PrecStatus::WeakOrder;
    std::vector<char> rel; // k*k, rel[c*k+d] != 0  <=>  c precedes d

    bool precedes(int c, int d) const {
        return rel[static_cast<std::size_t>(c) * static_cast<std::size_t>(k) +
                   static_cast<std::size_t>(d)] != 0;
    }
    bool incomparable(int c, int d) const { return c != d && !precedes(c, d) && !precedes(d, c); }
};

namespace detail {

inline void verify_weak_order(const PrecRelation& pr) {
    const int k = pr.k;
    for (int a = 0; a < k; ++a)
        for (int b = 0; b < k; ++b) {
            if (pr.precedes(a, b) && pr.precedes(b, a))
                throw std::logic_error("prec relation: asymmetry check failed after closure");
            if (a == b) continue;
            for (int c = 0; c < k; ++c) {
                if (pr.precedes(a, b) && pr.precedes(b, c) && !pr.precedes(a, c))
                    throw std::logic_error("prec relation: transitivity check failed");
                if (a < b && b != c && a != c && pr.incomparable(a, b) && pr.incomparable(b, c) &&
                    !pr.incomparable(a, c))
                    throw std::logic_error("prec relation: incomparability not transitive");
            }
        }
}

} // namespace detail

/// Least fixed point of the end-order rules for the chosen root clique.
/// Stops early once some pair is derived in both directions.
inline PrecRelation compute_prec(const CliqueFamily& fam, int root) {
    const int k = fam.count();
    if (root < 0 || root >= k) throw std::invalid_argument("compute_prec: root out of range");
    const int n = static_cast<int>(fam.member_of.size());
    const std::size_t width = detail::word_width(n);
    std::vector<detail::WordRow> mask(static_cast<std::size_t>(k));
    for (int c = 0; c < k; ++c) mask[static_cast<std::size_t>(c)] = detail::row_of(fam.members(c), width);

    PrecRelation pr;
    pr.k = k;
    pr.root = root;
    pr.rel.assign(static_cast<std::size_t>(k) * static_cast<std::size_t>(k), 0);

    std::deque<std::pair<int, int>> work;
    bool violated = false;
    auto add = [&](int c, int d) {
        if (violated) return;
        if (c == d || pr.precedes(d, c)) { // includes the (c,c) guard: never derivable
            violated = true;
            return;
        }
        auto idx = static_cast<std::size_t>(c) * static_cast<std::size_t>(k) +
                   static_cast<std::size_t>(d);
        if (pr.rel[idx]) return;
        pr.rel[idx] = 1;
        work.emplace_back(c, d);
    };

    for (int c = 0; c < k; ++c)
        if (c != root) add(root, c);

    while (!work.empty() && !violated) {
        auto [a, b] = work.front();
        work.pop_front();
        const auto& ma = mask[static_cast<std::size_t>(a)];
        const auto& mb = mask[static_cast<std::size_t>(b)];
        // (a,b) as the witness E in rule one: C ≺ b whenever (E∩C)\b != ∅.
        for (int c = 0; c < k && !violated; ++c) {
            if (c == b) continue;
            if (detail::meet_minus_nonempty(ma, mask[static_cast<std::size_t>(c)], mb)) add(c, b);
        }
        // (a,b) as the witness E in rule two: a ≺ D whenever (E∩D)\a != ∅.
        for (int d = 0; d < k && !violated; ++d) {
            if (d == a) continue;
            if (detail::meet_minus_nonempty(mb, mask[static_cast<std::size_t>(d)], ma)) add(a, d);
        }
    }

    if (violated) {
        pr.status = PrecStatus::AsymmetryViolated;
        return pr;
    }
    pr.status = PrecStatus::WeakOrder;
    detail::verify_weak_order(pr); // redundant by theory, kept for arbitrary inputs
    return pr;
}

inline PrecStatus classify(const PrecRelation& pr) { return pr.status; }

/// Incomparability classes of a weak order, blocks listed in the induced
/// linear order, clique ids ascending within each block.
struct IncomparabilityClasses {
    std::vector<std::vector<int>> blocks;
};

inline IncomparabilityClasses incomparability_classes(const PrecRelation& pr) {
    if (pr.status != PrecStatus::WeakOrder)
        throw std::invalid_argument("incomparability_classes: relation is not a weak order");
    // In a strict weak order two cliques are incomparable iff they have the
    // same number of strict predecessors.
    const int k = pr.k;
    std::vector<int> below(static_cast<std::size_t>(k), 0);
    int max_below = 0;
    for (int d = 0; d < k; ++d) {
        int cnt = 0;
        for (int c = 0; c < k; ++c)
            if (pr.precedes(c, d)) ++cnt;
        below[static_cast<std::size_t>(d)] = cnt;
        max_below = std::max(max_below, cnt);
    }
    std::vector<std::vector<int>> buckets(static_cast<std::size_t>(max_below) + 1);
    for (int d = 0; d < k; ++d) buckets[static_cast<std::size_t>(below[static_cast<std::size_t>(d)])].push_back(d);
    IncomparabilityClasses out;
    for (auto& b : buckets)
        if (!b.empty()) out.blocks.push_back(std::move(b));
    return out;
}

/// Vertices private to an incomparability block: the span formula
/// {v ∈ ∪block : spn(v) <= |block|}, cross-checked against the
/// set-difference formula and the module property.
inline VertexSet module_vertices(const Graph& g, const CliqueFamily& fam,
                                 const std::vector<int>& block) {
    VertexSet in_block;
    for (int id : block) in_block = set_union(in_block, fam.members(id));

    const int m = static_cast<int>(block.size());
    VertexSet by_span;
    for (Vertex v : in_block)
        if (span_of(fam, v) <= m) by_span.push_back(v);

    VertexSet outside_union;
    std::vector<char> chosen(static_cast<std::size_t>(fam.count()), 0);
    for (int id : block) chosen[static_cast<std::size_t>(id)] = 1;
    for (int id = 0; id < fam.count(); ++id)
        if (!chosen[static_cast<std::size_t>(id)])
            outside_union = set_union(outside_union, fam.members(id));
    VertexSet by_diff = set_difference(in_block, outside_union);

    if (by_span != by_diff)
        throw ModuleConsistencyError("module_vertices: span and set-difference formulas disagree");

    // Outside cliques must meet every block member in the same set.
    for (int id = 0; id < fam.count(); ++id) {
        if (chosen[static_cast<std::size_t>(id)]) continue;
        VertexSet first = set_intersect(fam.members(id), fam.members(block[0]));
        for (std::size_t i = 1; i < block.size(); ++i)
            if (set_intersect(fam.members(id), fam.members(block[i])) != first)
                throw ModuleConsistencyError(
                    "module_vertices: outside clique splits the block");
    }

    // Module property: vertices outside see all of S or none of it.
    for (Vertex x = 0; x < g.vertex_count(); ++x) {
        if (set_contains(by_span, x)) continue;
        std::size_t hits = set_intersect(g.neighbors(x), by_span).size();
        if (hits != 0 && hits != by_span.size())
            throw ModuleConsistencyError("module_vertices: module property violated");
    }
    return by_span;
}

} // namespace igc
