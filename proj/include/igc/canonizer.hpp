#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "igc/canonical_form.hpp"
#include "igc/cliques.hpp"
#include "igc/end_order.hpp"
#include "igc/graph.hpp"

namespace igc {

enum class FailReason { UncoveredEdge, NoPossibleEnd, ModuleFailure, VerificationMismatch };

/// Structured "this is not an interval graph" outcome.
struct NotInterval {
    FailReason reason = FailReason::NoPossibleEnd;
    VertexSet component;
    std::pair<Vertex, Vertex> edge{-1, -1};

    std::string to_string() const {
        switch (reason) {
            case FailReason::UncoveredEdge:
                return "uncovered-edge(" + std::to_string(edge.first) + "," +
                       std::to_string(edge.second) + ")";
            case FailReason::NoPossibleEnd: return "no-possible-end";
            case FailReason::ModuleFailure: return "module-failure";
            case FailReason::VerificationMismatch: return "verification-mismatch";
        }
        return "unknown";
    }
};

struct CanonResult {
    std::optional<CanonicalForm> form;
    std::optional<NotInterval> failure;
    bool ok() const { return form.has_value(); }
};

/// Vertex classes of the module quotient together with the order data that
/// places them: for each class, the least clique block containing it and its
/// span counted in the quotient graph.
struct QuotientOrder {
    std::vector<VertexSet> classes;   // local vertex ids, each sorted
    std::vector<int> module_block;    // per class: originating block index, -1 for singletons
    std::vector<int> least_block;     // per class: A, first block position containing it
    std::vector<int> quotient_span;   // per class: number of block positions containing it
    std::vector<int> order;           // class indices sorted by (least_block, quotient_span)
    Graph quotient;                   // adjacency between classes, vertex i = class i
    IncomparabilityClasses blocks;    // the clique blocks backing the construction
};

/// Builds the quotient for a connected component graph whose end relation is
/// a weak order. Throws ModuleConsistencyError when a structural guarantee of
/// interval graphs fails to hold.
inline QuotientOrder quotient_order(const Graph& component, const CliqueFamily& fam,
                                    const PrecRelation& pr) {
    if (pr.status != PrecStatus::WeakOrder)
        throw std::invalid_argument("quotient_order: relation is not a weak order");
    const int n = component.vertex_count();

    QuotientOrder qo;
    qo.blocks = incomparability_classes(pr);
    const auto& blocks = qo.blocks.blocks;

    // Nonsingular blocks contribute module classes; everything else is a singleton.
    std::vector<int> class_of(static_cast<std::size_t>(n), -1);
    std::vector<VertexSet> module_sets;
    std::vector<int> module_origin;
    for (std::size_t b = 0; b < blocks.size(); ++b) {
        if (blocks[b].size() < 2) continue;
        VertexSet s = module_vertices(component, fam, blocks[b]);
        for (Vertex v : s) {
            if (class_of[static_cast<std::size_t>(v)] != -1)
                throw ModuleConsistencyError("quotient: module classes overlap");
            class_of[static_cast<std::size_t>(v)] = static_cast<int>(module_sets.size());
        }
        module_sets.push_back(std::move(s));
        module_origin.push_back(static_cast<int>(b));
    }

    // Classes listed by least member vertex.
    std::vector<int> class_index(module_sets.size(), -1);
    for (Vertex v = 0; v < n; ++v) {
        int ms = class_of[static_cast<std::size_t>(v)];
        if (ms == -1) {
            qo.classes.push_back(VertexSet{v});
            qo.module_block.push_back(-1);
        } else if (class_index[static_cast<std::size_t>(ms)] == -1) {
            class_index[static_cast<std::size_t>(ms)] = static_cast<int>(qo.classes.size());
            qo.classes.push_back(module_sets[static_cast<std::size_t>(ms)]);
            qo.module_block.push_back(module_origin[static_cast<std::size_t>(ms)]);
        }
    }
    std::vector<int> cls(static_cast<std::size_t>(n), -1);
    for (std::size_t c = 0; c < qo.classes.size(); ++c)
        for (Vertex v : qo.classes[c]) cls[static_cast<std::size_t>(v)] = static_cast<int>(c);

    // Block positions containing each class; must be one consecutive run.
    const int nc = static_cast<int>(qo.classes.size());
    std::vector<std::vector<int>> positions(static_cast<std::size_t>(nc));
    for (std::size_t b = 0; b < blocks.size(); ++b) {
        std::vector<char> seen(static_cast<std::size_t>(nc), 0);
        for (int cid : blocks[b])
            for (Vertex v : fam.members(cid)) {
                int c = cls[static_cast<std::size_t>(v)];
                if (!seen[static_cast<std::size_t>(c)]) {
                    seen[static_cast<std::size_t>(c)] = 1;
                    positions[static_cast<std::size_t>(c)].push_back(static_cast<int>(b));
                }
            }
    }
    qo.least_block.assign(static_cast<std::size_t>(nc), 0);
    qo.quotient_span.assign(static_cast<std::size_t>(nc), 0);
    for (int c = 0; c < nc; ++c) {
        const auto& ps = positions[static_cast<std::size_t>(c)];
        if (ps.empty())
            throw ModuleConsistencyError("quotient: vertex class in no clique");
        if (ps.back() - ps.front() + 1 != static_cast<int>(ps.size()))
            throw ModuleConsistencyError("quotient: clique memberships not consecutive");
        qo.least_block[static_cast<std::size_t>(c)] = ps.front();
        qo.quotient_span[static_cast<std::size_t>(c)] = static_cast<int>(ps.size());
    }
    // A module class lives in exactly its own block's quotient clique.
    for (int c = 0; c < nc; ++c)
        if (qo.module_block[static_cast<std::size_t>(c)] >= 0 &&
            (qo.quotient_span[static_cast<std::size_t>(c)] != 1 ||
             qo.least_block[static_cast<std::size_t>(c)] != qo.module_block[static_cast<std::size_t>(c)]))
            throw ModuleConsistencyError("quotient: module class escapes its block");

    Graph quot(nc);
    for (auto [u, v] : component.edges()) {
        int cu = cls[static_cast<std::size_t>(u)], cv = cls[static_cast<std::size_t>(v)];
        if (cu != cv && !quot.has_edge(cu, cv)) quot.add_edge(cu, cv);
    }
    qo.quotient = std::move(quot);

    qo.order.resize(static_cast<std::size_t>(nc));
    for (int c = 0; c < nc; ++c) qo.order[static_cast<std::size_t>(c)] = c;
    std::stable_sort(qo.order.begin(), qo.order.end(), [&](int a, int b) {
        if (qo.least_block[static_cast<std::size_t>(a)] != qo.least_block[static_cast<std::size_t>(b)])
            return qo.least_block[static_cast<std::size_t>(a)] < qo.least_block[static_cast<std::size_t>(b)];
        return qo.quotient_span[static_cast<std::size_t>(a)] < qo.quotient_span[static_cast<std::size_t>(b)];
    });

    // Classes tied under (A, span) must be interchangeable: singleton twins
    // with identical closed neighborhoods in the quotient.
    auto closed_q = [&](int c) {
        VertexSet s = qo.quotient.neighbors(c);
        auto it = std::lower_bound(s.begin(), s.end(), c);
        s.insert(it, c);
        return s;
    };
    for (std::size_t r = 1; r < qo.order.size(); ++r) {
        int a = qo.order[r - 1], b = qo.order[r];
        if (qo.least_block[static_cast<std::size_t>(a)] == qo.least_block[static_cast<std::size_t>(b)] &&
            qo.quotient_span[static_cast<std::size_t>(a)] == qo.quotient_span[static_cast<std::size_t>(b)]) {
            if (qo.classes[static_cast<std::size_t>(a)].size() != 1 ||
                qo.classes[static_cast<std::size_t>(b)].size() != 1 || closed_q(a) != closed_q(b))
                throw ModuleConsistencyError("quotient: tied classes are not twins");
        }
    }
    return qo;
}

namespace detail {

struct CanonAbort {
    NotInterval info;
};

struct LevelResult {
    CanonicalForm form;                  // bijection over original (global) vertex ids
    std::vector<VertexSet> clique_order; // global member sets, left end first
};

/// Connected components of g restricted to the sorted subset s (ids of g).
inline std::vector<VertexSet> components_within(const Graph& g, const VertexSet& s) {
    std::vector<VertexSet> comps;
    std::vector<Vertex> stack;
    std::vector<char> seen;
    seen.assign(s.size(), 0);
    auto pos_of = [&](Vertex v) {
        auto it = std::lower_bound(s.begin(), s.end(), v);
        return (it != s.end() && *it == v) ? static_cast<int>(it - s.begin()) : -1;
    };
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (seen[i]) continue;
        VertexSet comp;
        seen[i] = 1;
        stack.push_back(s[i]);
        while (!stack.empty()) {
            Vertex v = stack.back();
            stack.pop_back();
            comp.push_back(v);
            for (Vertex nb : g.neighbors(v)) {
                int p = pos_of(nb);
                if (p >= 0 && !seen[static_cast<std::size_t>(p)]) {
                    seen[static_cast<std::size_t>(p)] = 1;
                    stack.push_back(nb);
                }
            }
        }
        std::sort(comp.begin(), comp.end());
        comps.push_back(std::move(comp));
    }
    return comps;
}

/// Top-down memoized canonization, one instance per canonical_form call.
/// Aborts (CanonAbort) signal a definitive non-interval input; a nullopt from
/// with_end only means the chosen end is not valid for that component.
class Canonizer {
public:
    explicit Canonizer(const Graph& g) : g_(g) {}

    LevelResult component_leader(const VertexSet& w, int bound) {
        const LevelData& lv = level(w);
        std::optional<LevelResult> best;
        for (int c = 0; c < lv.fam.count(); ++c) {
            VertexSet m_global = to_global(lv.sub, lv.fam.members(c));
            auto r = with_end(w, m_global, bound);
            if (r && (!best || form_less(r->form, best->form))) best = std::move(r);
        }
        if (!best) throw CanonAbort{NotInterval{FailReason::NoPossibleEnd, w, {-1, -1}}};
        return *std::move(best);
    }

    std::optional<LevelResult> with_end(const VertexSet& w, const VertexSet& m_global, int bound) {
        auto key = std::make_pair(w, m_global);
        if (auto it = memo_.find(key); it != memo_.end()) return it->second;

        const LevelData& lv = level(w);
        std::optional<LevelResult> result = run_level(lv.sub, lv.fam, m_global, bound);
        memo_.emplace(std::move(key), result);
        return result;
    }

private:
    struct LevelData {
        InducedSubgraph sub;
        CliqueFamily fam;
    };

    // Subgraph and clique family per vertex set, shared by all end choices.
    const LevelData& level(const VertexSet& w) {
        if (auto it = levels_.find(w); it != levels_.end()) return *it->second;
        auto data = std::make_unique<LevelData>();
        data->sub = induced_subgraph(g_, w);
        data->fam = candidate_max_cliques(data->sub.graph);
        if (auto bad = edge_coverage_check(data->sub.graph, data->fam)) {
            NotInterval f{FailReason::UncoveredEdge, w,
                          {data->sub.vertices[static_cast<std::size_t>(bad->first)],
                           data->sub.vertices[static_cast<std::size_t>(bad->second)]}};
            throw CanonAbort{f};
        }
        return *levels_.emplace(w, std::move(data)).first->second;
    }

    static VertexSet to_global(const InducedSubgraph& sub, const VertexSet& local) {
        VertexSet out;
        out.reserve(local.size());
        for (Vertex v : local) out.push_back(sub.vertices[static_cast<std::size_t>(v)]);
        return out;
    }

    std::optional<LevelResult> run_level(const InducedSubgraph& sub, const CliqueFamily& fam,
                                         const VertexSet& m_global, int bound) {
        const VertexSet& w = sub.vertices;
        VertexSet m_local;
        m_local.reserve(m_global.size());
        for (Vertex v : m_global) {
            if (v < 0 || v >= static_cast<int>(sub.old_to_new.size()) ||
                sub.old_to_new[static_cast<std::size_t>(v)] < 0)
                return std::nullopt;
            m_local.push_back(sub.old_to_new[static_cast<std::size_t>(v)]);
        }
        std::sort(m_local.begin(), m_local.end());

        int root = fam.find(m_local);
        if (root < 0) return std::nullopt;
        PrecRelation pr = compute_prec(fam, root);
        if (pr.status != PrecStatus::WeakOrder) return std::nullopt;

        QuotientOrder qo;
        try {
            qo = quotient_order(sub.graph, fam, pr);
        } catch (const ModuleConsistencyError&) {
            throw CanonAbort{NotInterval{FailReason::ModuleFailure, w, {-1, -1}}};
        }
        if (qo.blocks.blocks.front() != std::vector<int>{root})
            throw CanonAbort{NotInterval{FailReason::ModuleFailure, w, {-1, -1}}};

        // Canonize each module class: leaders per component of the module,
        // joined as a lexicographic disjoint union.
        const int nc = static_cast<int>(qo.classes.size());
        std::vector<CanonicalForm> omega(static_cast<std::size_t>(nc));
        std::vector<std::vector<int>> spliced_ids(static_cast<std::size_t>(nc));
        for (int c = 0; c < nc; ++c) {
            int b = qo.module_block[static_cast<std::size_t>(c)];
            if (b < 0) continue;
            canonize_module_class(sub, fam, qo.blocks.blocks[static_cast<std::size_t>(b)],
                                  qo.classes[static_cast<std::size_t>(c)], bound,
                                  omega[static_cast<std::size_t>(c)],
                                  spliced_ids[static_cast<std::size_t>(c)]);
        }

        return assemble(sub, fam, qo, omega, spliced_ids);
    }

    void canonize_module_class(const InducedSubgraph& sub, const CliqueFamily& fam,
                               const std::vector<int>& block, const VertexSet& s_local, int bound,
                               CanonicalForm& omega_out, std::vector<int>& spliced_out) {
        const VertexSet& w = sub.vertices;
        const int m = static_cast<int>(block.size());
        if (m >= bound) // the paper's strict decrease; failing it means non-interval input
            throw CanonAbort{NotInterval{FailReason::ModuleFailure, w, {-1, -1}}};

        std::vector<VertexSet> comps = components_within(sub.graph, s_local);
        const std::size_t h = comps.size();

        // Candidate ends per module component: the traces C ∩ S of block cliques.
        std::vector<std::vector<std::pair<VertexSet, int>>> cands(h); // (local end, clique id)
        for (int cid : block) {
            VertexSet x = set_intersect(fam.members(cid), s_local);
            if (x.empty())
                throw CanonAbort{NotInterval{FailReason::ModuleFailure, w, {-1, -1}}};
            std::size_t at = h;
            for (std::size_t j = 0; j < h; ++j)
                if (set_contains(comps[j], x[0])) { at = j; break; }
            if (at == h || !is_subset(x, comps[at]))
                throw CanonAbort{NotInterval{FailReason::ModuleFailure, w, {-1, -1}}};
            for (const auto& [prev, _] : cands[at])
                if (prev == x)
                    throw CanonAbort{NotInterval{FailReason::ModuleFailure, w, {-1, -1}}};
            cands[at].emplace_back(std::move(x), cid);
        }

        struct PerComp {
            LevelResult leader;
            std::vector<int> parent_ids; // block clique ids in the leader's clique order
        };
        std::vector<PerComp> per(h);
        for (std::size_t j = 0; j < h; ++j) {
            if (cands[j].empty())
                throw CanonAbort{NotInterval{FailReason::NoPossibleEnd, to_global(sub, comps[j]), {-1, -1}}};
            VertexSet comp_global = to_global(sub, comps[j]);
            std::optional<LevelResult> best;
            for (const auto& [x, cid] : cands[j]) {
                auto r = with_end(comp_global, to_global(sub, x), m);
                if (r && (!best || form_less(r->form, best->form))) best = std::move(r);
            }
            if (!best)
                throw CanonAbort{NotInterval{FailReason::NoPossibleEnd, comp_global, {-1, -1}}};
            // Map the winner's clique order back to the block's clique ids.
            std::map<VertexSet, int> lookup;
            for (const auto& [x, cid] : cands[j]) lookup.emplace(to_global(sub, x), cid);
            if (best->clique_order.size() != lookup.size())
                throw CanonAbort{NotInterval{FailReason::ModuleFailure, w, {-1, -1}}};
            PerComp pc;
            pc.leader = std::move(*best);
            for (const auto& k : pc.leader.clique_order) {
                auto it = lookup.find(k);
                if (it == lookup.end())
                    throw CanonAbort{NotInterval{FailReason::ModuleFailure, w, {-1, -1}}};
                pc.parent_ids.push_back(it->second);
            }
            per[j] = std::move(pc);
        }

        std::vector<std::size_t> comp_order(h);
        for (std::size_t j = 0; j < h; ++j) comp_order[j] = j;
        std::stable_sort(comp_order.begin(), comp_order.end(), [&](std::size_t a, std::size_t b) {
            return form_less(per[a].leader.form, per[b].leader.form);
        });

        std::vector<CanonicalForm> leader_forms;
        leader_forms.reserve(h);
        for (std::size_t j : comp_order) leader_forms.push_back(per[j].leader.form);
        omega_out = lex_disjoint_union(std::move(leader_forms));
        for (std::size_t j : comp_order)
            for (int cid : per[j].parent_ids) spliced_out.push_back(cid);
    }

    std::optional<LevelResult> assemble(const InducedSubgraph& sub, const CliqueFamily& fam,
                                        const QuotientOrder& qo,
                                        const std::vector<CanonicalForm>& omega,
                                        const std::vector<std::vector<int>>& spliced_ids) {
        const VertexSet& w = sub.vertices;
        const int n = static_cast<int>(w.size());
        const int nc = static_cast<int>(qo.classes.size());

        std::vector<int> offset(static_cast<std::size_t>(nc), 0);
        std::vector<int> rank_of(static_cast<std::size_t>(nc), 0);
        int acc = 0;
        for (std::size_t r = 0; r < qo.order.size(); ++r) {
            int c = qo.order[r];
            offset[static_cast<std::size_t>(c)] = acc;
            rank_of[static_cast<std::size_t>(c)] = static_cast<int>(r);
            acc += static_cast<int>(qo.classes[static_cast<std::size_t>(c)].size());
        }

        CanonicalForm form;
        form.n = n;
        form.packed.assign((CanonicalForm::bit_count(n) + 7) / 8, 0);
        std::vector<int> label(static_cast<std::size_t>(n), -1);
        for (int c = 0; c < nc; ++c) {
            const VertexSet& cls = qo.classes[static_cast<std::size_t>(c)];
            if (qo.module_block[static_cast<std::size_t>(c)] < 0) {
                label[static_cast<std::size_t>(cls[0])] = offset[static_cast<std::size_t>(c)];
            } else {
                const CanonicalForm& om = omega[static_cast<std::size_t>(c)];
                for (Vertex v : cls)
                    label[static_cast<std::size_t>(v)] =
                        offset[static_cast<std::size_t>(c)] +
                        om.label_of(sub.vertices[static_cast<std::size_t>(v)]);
            }
        }

        // Inter-class edges follow the quotient; intra-class edges come from
        // the module's canonized form.
        for (int c = 0; c < nc; ++c) {
            for (Vertex q : qo.quotient.neighbors(c)) {
                if (q <= c) continue;
                for (Vertex u : qo.classes[static_cast<std::size_t>(c)])
                    for (Vertex v : qo.classes[static_cast<std::size_t>(q)])
                        form.set_bit(label[static_cast<std::size_t>(u)], label[static_cast<std::size_t>(v)]);
            }
            const CanonicalForm& om = omega[static_cast<std::size_t>(c)];
            if (qo.module_block[static_cast<std::size_t>(c)] >= 0) {
                int base = offset[static_cast<std::size_t>(c)];
                for (int i = 0; i < om.n; ++i)
                    for (int j = i + 1; j < om.n; ++j)
                        if (om.bit(i, j)) form.set_bit(base + i, base + j);
            }
        }

        form.bijection.reserve(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i)
            form.bijection.emplace_back(w[static_cast<std::size_t>(i)], label[static_cast<std::size_t>(i)]);

        // Clique order: blocks left to right; module blocks splice in their
        // components' orders.
        LevelResult out;
        out.form = std::move(form);
        std::vector<int> class_of_block(qo.blocks.blocks.size(), -1);
        for (int c = 0; c < nc; ++c)
            if (qo.module_block[static_cast<std::size_t>(c)] >= 0)
                class_of_block[static_cast<std::size_t>(qo.module_block[static_cast<std::size_t>(c)])] = c;
        for (std::size_t b = 0; b < qo.blocks.blocks.size(); ++b) {
            if (qo.blocks.blocks[b].size() == 1) {
                out.clique_order.push_back(to_global(sub, fam.members(qo.blocks.blocks[b][0])));
            } else {
                int c = class_of_block[b];
                if (c < 0)
                    throw CanonAbort{NotInterval{FailReason::ModuleFailure, w, {-1, -1}}};
                for (int cid : spliced_ids[static_cast<std::size_t>(c)])
                    out.clique_order.push_back(to_global(sub, fam.members(cid)));
            }
        }
        return out;
    }

    const Graph& g_;
    std::map<VertexSet, std::unique_ptr<LevelData>> levels_;
    std::map<std::pair<VertexSet, VertexSet>, std::optional<LevelResult>> memo_;
};

} // namespace detail

struct ComponentCanon {
    VertexSet component;
    CanonicalForm form;
    std::vector<VertexSet> clique_order;
};

struct ComponentwiseResult {
    std::vector<ComponentCanon> components;
    std::optional<NotInterval> failure;
    bool ok() const { return !failure.has_value(); }
};

/// Leader canonization of every connected component.
inline ComponentwiseResult canonize_componentwise(const Graph& g) {
    ComponentwiseResult out;
    detail::Canonizer cz(g);
    try {
        for (const VertexSet& w : connected_components(g)) {
            detail::LevelResult r = cz.component_leader(w, static_cast<int>(w.size()));
            out.components.push_back(ComponentCanon{w, std::move(r.form), std::move(r.clique_order)});
        }
    } catch (const detail::CanonAbort& abort) {
        out.components.clear();
        out.failure = abort.info;
    }
    return out;
}

/// Canonical ordered form of an interval graph: per component the
/// lexicographic leader over all possible ends, components combined as a
/// lexicographic disjoint union. Permutation-invariant on interval graphs.
inline CanonResult canonical_form(const Graph& g) {
    ComponentwiseResult parts = canonize_componentwise(g);
    if (!parts.ok()) return CanonResult{std::nullopt, parts.failure};
    std::vector<CanonicalForm> forms;
    forms.reserve(parts.components.size());
    for (auto& c : parts.components) forms.push_back(std::move(c.form));
    CanonicalForm total = lex_disjoint_union(std::move(forms));

    // Unconditional soundness check: the decoded copy must match g under the
    // produced bijection, edge for edge.
    for (Vertex u = 0; u < g.vertex_count(); ++u) {
        int lu = total.label_of(u);
        for (Vertex v = u + 1; v < g.vertex_count(); ++v)
            if (g.has_edge(u, v) != total.bit(lu, total.label_of(v)))
                return CanonResult{std::nullopt,
                                   NotInterval{FailReason::VerificationMismatch, {}, {u, v}}};
    }
    return CanonResult{std::move(total), std::nullopt};
}

/// Canonization of one component with a chosen end clique (both given as
/// global vertex sets). Fails with NoPossibleEnd when M is not a valid end.
inline CanonResult canonize_with_end(const Graph& g, const VertexSet& w, const VertexSet& m) {
    detail::Canonizer cz(g);
    try {
        auto r = cz.with_end(w, m, static_cast<int>(w.size()));
        if (!r) return CanonResult{std::nullopt, NotInterval{FailReason::NoPossibleEnd, w, {-1, -1}}};
        return CanonResult{std::move(r->form), std::nullopt};
    } catch (const detail::CanonAbort& abort) {
        return CanonResult{std::nullopt, abort.info};
    }
}

struct IsoResult {
    std::optional<bool> verdict;
    std::optional<NotInterval> failure;
    bool ok() const { return verdict.has_value(); }
};

/// Isomorphism of interval graphs via canonical form equality.
inline IsoResult isomorphic(const Graph& g, const Graph& h) {
    CanonResult cg = canonical_form(g);
    if (!cg.ok()) return IsoResult{std::nullopt, cg.failure};
    CanonResult ch = canonical_form(h);
    if (!ch.ok()) return IsoResult{std::nullopt, ch.failure};
    return IsoResult{*cg.form == *ch.form, std::nullopt};
}

} // namespace igc
