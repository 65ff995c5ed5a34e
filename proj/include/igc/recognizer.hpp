#pragma once

#include <optional>

#include "igc/canonizer.hpp"
#include "igc/cliques.hpp"
#include "igc/graph.hpp"
#include "igc/interval_representation.hpp"

namespace igc {

struct RecognitionResult {
    bool accepted = false;
    std::optional<IntervalRepresentation> certificate; // set on accept
    std::optional<NotInterval> rejection;              // set on reject
};

/// True iff the intersection graph of rep equals g edge for edge.
inline bool verify_representation(const Graph& g, const IntervalRepresentation& rep) {
    if (rep.vertex_count() != g.vertex_count())
        throw std::invalid_argument("verify_representation: vertex count mismatch");
    if (!rep.well_formed())
        throw std::invalid_argument("verify_representation: malformed intervals");
    return intersection_graph(rep) == g;
}

/// Certificate-producing interval graph recognition: edge coverage first,
/// then the canonization procedure; accepted inputs carry an interval
/// representation read off the canonical clique order and re-verified
/// against the input before being returned.
inline RecognitionResult recognize(const Graph& g) {
    CliqueFamily fam = candidate_max_cliques(g);
    if (auto bad = edge_coverage_check(g, fam)) {
        return RecognitionResult{false, std::nullopt,
                                 NotInterval{FailReason::UncoveredEdge, {}, *bad}};
    }

    ComponentwiseResult parts = canonize_componentwise(g);
    if (!parts.ok()) return RecognitionResult{false, std::nullopt, parts.failure};

    IntervalRepresentation rep;
    rep.intervals.assign(static_cast<std::size_t>(g.vertex_count()), {0, 0});
    rep.minimal = true;
    int offset = 0;
    for (const auto& comp : parts.components) {
        for (std::size_t p = 0; p < comp.clique_order.size(); ++p) {
            int point = offset + static_cast<int>(p) + 1;
            for (Vertex v : comp.clique_order[p]) {
                auto& iv = rep.intervals[static_cast<std::size_t>(v)];
                if (iv.first == 0) iv = {point, point};
                else iv.second = point;
            }
        }
        offset += static_cast<int>(comp.clique_order.size());
    }

    if (!verify_representation(g, rep))
        return RecognitionResult{false, std::nullopt,
                                 NotInterval{FailReason::VerificationMismatch, {}, {-1, -1}}};
    return RecognitionResult{true, std::move(rep), std::nullopt};
}

} // namespace igc
