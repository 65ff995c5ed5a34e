#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "igc/graph.hpp"

namespace igc {

/// Incidence graph: original vertices keep their indices, every edge becomes
/// a degree-2 vertex appended in lexicographic edge order.
struct IncidenceGraph {
    Graph graph;
    int original_vertices = 0; // indices [0, original_vertices) form the vertex part
};

inline IncidenceGraph incidence_graph(const Graph& g) {
    const int n = g.vertex_count();
    auto es = g.edges();
    Graph h(n + static_cast<int>(es.size()));
    int next = n;
    for (auto [u, v] : es) {
        h.add_edge(u, next);
        h.add_edge(v, next);
        ++next;
    }
    return {std::move(h), n};
}

/// Incidence graph plus all edges inside the vertex part.
inline Graph split_incidence_graph(const Graph& g) {
    IncidenceGraph inc = incidence_graph(g);
    Graph h = std::move(inc.graph);
    for (Vertex u = 0; u < inc.original_vertices; ++u)
        for (Vertex v = u + 1; v < inc.original_vertices; ++v)
            if (!h.has_edge(u, v)) h.add_edge(u, v);
    return h;
}

struct ReconstructResult {
    std::optional<Graph> graph;
    std::string reason; // set on failure
    bool ok() const { return graph.has_value(); }
};

namespace transforms_detail {

/// Validates one reading of h as an incidence/split construction: W is the
/// claimed edge part. Returns the reconstructed graph on V \ W (relabeled in
/// ascending order) or nothing.
inline std::optional<Graph> read_with_edge_part(const Graph& h, const VertexSet& w,
                                                bool vertex_part_is_clique) {
    const int n = h.vertex_count();
    std::vector<char> in_w(static_cast<std::size_t>(n), 0);
    for (Vertex v : w) in_w[static_cast<std::size_t>(v)] = 1;
    VertexSet u;
    for (Vertex v = 0; v < n; ++v)
        if (!in_w[static_cast<std::size_t>(v)]) u.push_back(v);

    std::vector<int> new_id(static_cast<std::size_t>(n), -1);
    for (std::size_t i = 0; i < u.size(); ++i) new_id[static_cast<std::size_t>(u[i])] = static_cast<int>(i);

    // Edge part: independent, degree exactly 2, neighbors in the vertex part,
    // no two edge vertices witnessing the same pair.
    std::map<std::pair<int, int>, int> pairs;
    for (Vertex e : w) {
        const VertexSet& nb = h.neighbors(e);
        if (nb.size() != 2) return std::nullopt;
        if (in_w[static_cast<std::size_t>(nb[0])] || in_w[static_cast<std::size_t>(nb[1])])
            return std::nullopt;
        auto key = std::make_pair(new_id[static_cast<std::size_t>(nb[0])],
                                  new_id[static_cast<std::size_t>(nb[1])]);
        if (!pairs.emplace(key, 1).second) return std::nullopt;
    }
    // Vertex part: clique (split) or independent set (plain incidence).
    for (std::size_t i = 0; i < u.size(); ++i)
        for (std::size_t j = i + 1; j < u.size(); ++j)
            if (h.has_edge(u[i], u[j]) != vertex_part_is_clique) return std::nullopt;

    Graph g(static_cast<int>(u.size()));
    for (const auto& [key, cnt] : pairs) g.add_edge(key.first, key.second);
    return g;
}

} // namespace transforms_detail

/// Inverts incidence_graph. Per connected component the bipartition is forced
/// up to a swap; among valid readings the one whose vertex part is
/// lexicographically least wins, so standard-labeled constructions invert
/// exactly. Reconstruction of arbitrary inputs is canonical up to isomorphism
/// only.
inline ReconstructResult reconstruct_from_incidence(const Graph& h) {
    const int n = h.vertex_count();
    std::vector<int> color(static_cast<std::size_t>(n), -1);
    VertexSet edge_part;
    for (Vertex s = 0; s < n; ++s) {
        if (color[static_cast<std::size_t>(s)] != -1) continue;
        // 2-color the component
        VertexSet side[2];
        std::vector<Vertex> stack{s};
        color[static_cast<std::size_t>(s)] = 0;
        side[0].push_back(s);
        while (!stack.empty()) {
            Vertex v = stack.back();
            stack.pop_back();
            for (Vertex nb : h.neighbors(v)) {
                if (color[static_cast<std::size_t>(nb)] == -1) {
                    color[static_cast<std::size_t>(nb)] = 1 - color[static_cast<std::size_t>(v)];
                    side[color[static_cast<std::size_t>(nb)]].push_back(nb);
                    stack.push_back(nb);
                } else if (color[static_cast<std::size_t>(nb)] == color[static_cast<std::size_t>(v)]) {
                    return {std::nullopt, "component is not bipartite"};
                }
            }
        }
        std::sort(side[0].begin(), side[0].end());
        std::sort(side[1].begin(), side[1].end());
        auto all_degree_two = [&](const VertexSet& sd) {
            for (Vertex v : sd)
                if (h.degree(v) != 2) return false;
            return true;
        };
        bool valid0 = all_degree_two(side[1]); // side[0] as vertex part
        bool valid1 = all_degree_two(side[0]); // side[1] as vertex part
        int pick; // side index used as the vertex part
        if (valid0 && valid1)
            pick = std::lexicographical_compare(side[0].begin(), side[0].end(), side[1].begin(),
                                                side[1].end())
                       ? 0
                       : 1;
        else if (valid0) pick = 0;
        else if (valid1) pick = 1;
        else return {std::nullopt, "no side of the bipartition qualifies as edge part"};
        for (Vertex v : side[1 - pick]) edge_part.push_back(v);
    }
    std::sort(edge_part.begin(), edge_part.end());
    auto g = transforms_detail::read_with_edge_part(h, edge_part, false);
    if (!g) return {std::nullopt, "edge part fails validity checks"};
    return {std::move(g), ""};
}

/// Inverts split_incidence_graph. For vertex parts of size >= 4 the reading
/// is forced (edge vertices are exactly the degree-2 vertices); tiny corner
/// cases enumerate the bounded alternatives, again preferring the
/// lexicographically least vertex part.
inline ReconstructResult reconstruct_from_split(const Graph& h) {
    const int n = h.vertex_count();
    if (n == 0) return {Graph(0), ""};

    VertexSet deg2, rest;
    for (Vertex v = 0; v < n; ++v)
        (h.degree(v) == 2 ? deg2 : rest).push_back(v);

    std::vector<VertexSet> candidate_edge_parts;
    candidate_edge_parts.push_back(deg2); // the generic reading
    if (rest.size() <= 2) {
        // A vertex part containing any degree-2 vertex has at most 3 members;
        // enumerate cliques of size <= 3 extending `rest`.
        auto add_candidate = [&](const VertexSet& u_extra) {
            VertexSet u = set_union(rest, u_extra);
            for (std::size_t i = 0; i < u.size(); ++i)
                for (std::size_t j = i + 1; j < u.size(); ++j)
                    if (!h.has_edge(u[i], u[j])) return;
            VertexSet w;
            for (Vertex v = 0; v < n; ++v)
                if (!set_contains(u, v)) w.push_back(v);
            candidate_edge_parts.push_back(std::move(w));
        };
        if (rest.size() == 2) {
            for (Vertex v : deg2) add_candidate({v});
        } else if (rest.size() == 1) {
            for (Vertex v : deg2) add_candidate({v});
            for (Vertex v : deg2)
                for (Vertex x : h.neighbors(v))
                    if (x > v && h.degree(x) == 2) add_candidate(set_union({v}, {x}));
        } else if (n <= 6) { // rest empty; larger graphs cannot validate anyway
            for (Vertex v : deg2) add_candidate({v});
            for (Vertex v : deg2)
                for (Vertex x : h.neighbors(v))
                    if (x > v && h.degree(x) == 2) add_candidate(set_union({v}, {x}));
            for (Vertex v : deg2)
                for (Vertex x : h.neighbors(v))
                    for (Vertex y : h.neighbors(v))
                        if (x > v && y > x && h.degree(x) == 2 && h.degree(y) == 2 &&
                            h.has_edge(x, y))
                            add_candidate(set_union(set_union({v}, {x}), {y}));
        }
    }

    std::optional<Graph> best;
    VertexSet best_vertex_part;
    for (const VertexSet& w : candidate_edge_parts) {
        auto g = transforms_detail::read_with_edge_part(h, w, true);
        if (!g) continue;
        VertexSet u = set_difference([&] {
            VertexSet all(static_cast<std::size_t>(n));
            for (int i = 0; i < n; ++i) all[static_cast<std::size_t>(i)] = i;
            return all;
        }(), w);
        if (!best || std::lexicographical_compare(u.begin(), u.end(), best_vertex_part.begin(),
                                                  best_vertex_part.end())) {
            best = std::move(g);
            best_vertex_part = std::move(u);
        }
    }
    if (!best) return {std::nullopt, "no valid split reading"};
    return {std::move(best), ""};
}

} // namespace igc
