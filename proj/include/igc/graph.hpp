#pragma once

#include <algorithm>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace igc {

using Vertex = int;

/// Sorted sequence of distinct vertex indices.
using VertexSet = std::vector<Vertex>;

// ---- sorted-set helpers -----------------------------------------------------

inline VertexSet set_intersect(const VertexSet& a, const VertexSet& b) {
    VertexSet out;
    out.reserve(std::min(a.size(), b.size()));
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

inline VertexSet set_union(const VertexSet& a, const VertexSet& b) {
    VertexSet out;
    out.reserve(a.size() + b.size());
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

inline VertexSet set_difference(const VertexSet& a, const VertexSet& b) {
    VertexSet out;
    out.reserve(a.size());
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

inline bool set_contains(const VertexSet& a, Vertex v) {
    return std::binary_search(a.begin(), a.end(), v);
}

inline bool is_subset(const VertexSet& a, const VertexSet& b) {
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

/// Undirected simple graph on vertices 0..n-1 with sorted adjacency lists.
/// Adjacency is kept symmetric and irreflexive at all times.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n) : n_(n), adj_(static_cast<std::size_t>(n)) {
        if (n < 0) throw std::invalid_argument("Graph: negative vertex count");
    }

    static Graph from_edges(int n, const std::vector<std::pair<Vertex, Vertex>>& edges) {
        Graph g(n);
        for (auto [u, v] : edges) g.add_edge(u, v);
        return g;
    }

    int vertex_count() const { return n_; }

    long long edge_count() const {
        long long total = 0;
        for (const auto& a : adj_) total += static_cast<long long>(a.size());
        return total / 2;
    }

    bool has_edge(Vertex u, Vertex v) const {
        check_vertex(u);
        check_vertex(v);
        if (u == v) return false;
        return set_contains(adj_[static_cast<std::size_t>(u)], v);
    }

    void add_edge(Vertex u, Vertex v) {
        check_vertex(u);
        check_vertex(v);
        if (u == v) throw std::invalid_argument("Graph: self-loop rejected");
        insert_sorted(adj_[static_cast<std::size_t>(u)], v);
        insert_sorted(adj_[static_cast<std::size_t>(v)], u);
    }

    const VertexSet& neighbors(Vertex v) const {
        check_vertex(v);
        return adj_[static_cast<std::size_t>(v)];
    }

    int degree(Vertex v) const { return static_cast<int>(neighbors(v).size()); }

    /// All edges as (u, v) with u < v, in lexicographic order.
    std::vector<std::pair<Vertex, Vertex>> edges() const {
        std::vector<std::pair<Vertex, Vertex>> out;
        for (Vertex u = 0; u < n_; ++u)
            for (Vertex v : adj_[static_cast<std::size_t>(u)])
                if (u < v) out.emplace_back(u, v);
        return out;
    }

    friend bool operator==(const Graph& a, const Graph& b) {
        return a.n_ == b.n_ && a.adj_ == b.adj_;
    }

private:
    void check_vertex(Vertex v) const {
        if (v < 0 || v >= n_)
            throw std::invalid_argument("Graph: vertex " + std::to_string(v) + " out of range");
    }

    static void insert_sorted(VertexSet& s, Vertex v) {
        auto it = std::lower_bound(s.begin(), s.end(), v);
        if (it == s.end() || *it != v) s.insert(it, v);
    }

    int n_ = 0;
    std::vector<VertexSet> adj_;
};

/// N(v) in the closed sense used throughout: neighbors of v plus v itself.
inline VertexSet closed_neighborhood(const Graph& g, Vertex v) {
    VertexSet out = g.neighbors(v);
    auto it = std::lower_bound(out.begin(), out.end(), v);
    out.insert(it, v);
    return out;
}

/// Induced subgraph on a sorted vertex set plus the old->new index map
/// (entries are -1 for vertices outside w). New index i corresponds to w[i].
struct InducedSubgraph {
    Graph graph;
    VertexSet vertices;          // new index -> old vertex id
    std::vector<int> old_to_new; // old vertex id -> new index or -1
};

inline InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& w) {
    InducedSubgraph out;
    out.vertices = w;
    out.old_to_new.assign(static_cast<std::size_t>(g.vertex_count()), -1);
    for (std::size_t i = 0; i < w.size(); ++i) {
        Vertex v = w[i];
        if (v < 0 || v >= g.vertex_count())
            throw std::invalid_argument("induced_subgraph: vertex out of range");
        if (i > 0 && w[i - 1] >= v)
            throw std::invalid_argument("induced_subgraph: vertex set not strictly ascending");
        out.old_to_new[static_cast<std::size_t>(v)] = static_cast<int>(i);
    }
    Graph sub(static_cast<int>(w.size()));
    for (std::size_t i = 0; i < w.size(); ++i) {
        for (Vertex nb : g.neighbors(w[i])) {
            int j = out.old_to_new[static_cast<std::size_t>(nb)];
            if (j > static_cast<int>(i)) sub.add_edge(static_cast<int>(i), j);
        }
    }
    out.graph = std::move(sub);
    return out;
}

/// Maximal connected vertex sets, each sorted, listed by least element.
inline std::vector<VertexSet> connected_components(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    std::vector<VertexSet> comps;
    std::vector<Vertex> stack;
    for (Vertex s = 0; s < n; ++s) {
        if (seen[static_cast<std::size_t>(s)]) continue;
        VertexSet comp;
        stack.push_back(s);
        seen[static_cast<std::size_t>(s)] = 1;
        while (!stack.empty()) {
            Vertex v = stack.back();
            stack.pop_back();
            comp.push_back(v);
            for (Vertex nb : g.neighbors(v)) {
                if (!seen[static_cast<std::size_t>(nb)]) {
                    seen[static_cast<std::size_t>(nb)] = 1;
                    stack.push_back(nb);
                }
            }
        }
        std::sort(comp.begin(), comp.end());
        comps.push_back(std::move(comp));
    }
    return comps;
}

/// Relabels g along pi, where pi[old] = new. pi must be a bijection on [0, n).
inline Graph apply_permutation(const Graph& g, const std::vector<int>& pi) {
    const int n = g.vertex_count();
    if (static_cast<int>(pi.size()) != n)
        throw std::invalid_argument("apply_permutation: size mismatch");
    std::vector<char> hit(static_cast<std::size_t>(n), 0);
    for (int v : pi) {
        if (v < 0 || v >= n || hit[static_cast<std::size_t>(v)])
            throw std::invalid_argument("apply_permutation: not a bijection");
        hit[static_cast<std::size_t>(v)] = 1;
    }
    Graph out(n);
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v : g.neighbors(u))
            if (u < v) out.add_edge(pi[static_cast<std::size_t>(u)], pi[static_cast<std::size_t>(v)]);
    return out;
}

} // namespace igc
