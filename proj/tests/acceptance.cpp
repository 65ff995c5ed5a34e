// Acceptance harness: runs every criterion at its stated tolerance and
// prints one PASS/FAIL line per criterion. Exit code = number of failures.

#include <chrono>
#include <cstdio>
#include <random>
#include <set>
#include <vector>

#include "igc/igc.hpp"

using namespace igc;

namespace {

struct Corpus {
    std::vector<Graph> classes6;          // all isomorphism classes, n <= 6
    std::vector<Graph> interval6;         // the interval ones
    std::vector<CanonicalForm> forms6;    // their canonical forms
};

std::vector<int> random_permutation(int n, std::mt19937_64& rng) {
    std::vector<int> pi(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) pi[static_cast<std::size_t>(i)] = i;
    for (int i = n - 1; i > 0; --i)
        std::swap(pi[static_cast<std::size_t>(i)], pi[rng() % static_cast<std::uint64_t>(i + 1)]);
    return pi;
}

bool criterion1_and_2(long long& elapsed_ms, int& inv_failures, int& sound_failures) {
    auto t0 = std::chrono::steady_clock::now();
    std::mt19937_64 rng(20260810);
    inv_failures = 0;
    sound_failures = 0;
    for (int i = 0; i < 1000; ++i) {
        int n = 1 + static_cast<int>(rng() % 40);
        Graph g = random_interval_graph(n, 77000 + static_cast<std::uint64_t>(i), 2 * n).graph;
        auto base = canonical_form(g);
        if (!base.ok()) {
            ++inv_failures;
            continue;
        }
        std::string base_g6 = write_graph6(base.form->decode());
        // soundness via the emitted bijection, edge-exact
        Graph dec = base.form->decode();
        for (int u = 0; u < n && sound_failures == 0; ++u)
            for (int v = u + 1; v < n; ++v)
                if (g.has_edge(u, v) !=
                    dec.has_edge(base.form->label_of(u), base.form->label_of(v))) {
                    ++sound_failures;
                    break;
                }
        for (int t = 0; t < 5; ++t) {
            Graph moved = apply_permutation(g, random_permutation(n, rng));
            auto res = canonical_form(moved);
            if (!res.ok() || write_graph6(res.form->decode()) != base_g6) ++inv_failures;
        }
    }
    elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                     std::chrono::steady_clock::now() - t0)
                     .count();
    return inv_failures == 0 && sound_failures == 0 && elapsed_ms < 60000;
}

Corpus build_corpus() {
    Corpus c;
    const int interval_counts[] = {1, 2, 4, 10, 27, 92}; // pinned after first run
    for (int n = 1; n <= 6; ++n) {
        int ivals = 0;
        for (Graph& g : enumerate_graphs(n)) {
            if (brute_is_interval(g).is_interval) {
                auto cf = canonical_form(g);
                if (cf.ok()) {
                    c.interval6.push_back(g);
                    c.forms6.push_back(*cf.form);
                }
                ++ivals;
            }
            c.classes6.push_back(std::move(g));
        }
        if (ivals != interval_counts[n - 1]) {
            std::printf("  [corpus] interval count mismatch at n=%d: %d\n", n, ivals);
        }
    }
    return c;
}

bool criterion3(const Corpus& c, int& disagreements) {
    disagreements = 0;
    if (c.interval6.size() != 136) ++disagreements; // 1+2+4+10+27+92
    for (std::size_t i = 0; i < c.interval6.size(); ++i)
        for (std::size_t j = i + 1; j < c.interval6.size(); ++j)
            if ((c.forms6[i] == c.forms6[j]) != brute_isomorphic(c.interval6[i], c.interval6[j]))
                ++disagreements;

    // sampled pairs at n = 7
    std::vector<Graph> interval7;
    for (const Graph& g : enumerate_graphs(7))
        if (brute_is_interval(g).is_interval) interval7.push_back(g);
    std::mt19937_64 rng(7777);
    int sampled = 0;
    for (int t = 0; t < 250; ++t) {
        const Graph& a = interval7[rng() % interval7.size()];
        const Graph& b = interval7[rng() % interval7.size()];
        auto ca = canonical_form(a);
        auto cb = canonical_form(b);
        if (!ca.ok() || !cb.ok()) {
            ++disagreements;
            continue;
        }
        if ((*ca.form == *cb.form) != brute_isomorphic(a, b)) ++disagreements;
        ++sampled;
    }
    // isomorphic positives: relabelings must land in the same class
    for (int t = 0; t < 50; ++t) {
        const Graph& a = interval7[rng() % interval7.size()];
        Graph moved = apply_permutation(a, random_permutation(7, rng));
        auto ca = canonical_form(a);
        auto cm = canonical_form(moved);
        if (!ca.ok() || !cm.ok() || !(*ca.form == *cm.form) || !brute_isomorphic(a, moved))
            ++disagreements;
        ++sampled;
    }
    return disagreements == 0 && sampled >= 200;
}

bool criterion4(const Corpus& c, int& disagreements) {
    disagreements = 0;
    if (c.classes6.size() != 208) ++disagreements;
    for (const Graph& g : c.classes6) {
        auto res = recognize(g);
        auto brute = brute_is_interval(g);
        if (res.accepted != brute.is_interval) ++disagreements;
        if (res.accepted && !verify_representation(g, *res.certificate)) ++disagreements;
    }
    return disagreements == 0;
}

bool criterion5(const Corpus& c, int& disagreements) {
    disagreements = 0;
    auto equal_families = [](const CliqueFamily& a, const CliqueFamily& b) {
        if (a.count() != b.count()) return false;
        for (int i = 0; i < a.count(); ++i)
            if (a.members(i) != b.members(i)) return false;
        return true;
    };
    for (const Graph& g : c.interval6)
        if (!equal_families(candidate_max_cliques(g), bron_kerbosch(g))) ++disagreements;
    for (int t = 0; t < 500; ++t) {
        int n = 1 + (t % 40);
        Graph g = random_interval_graph(n, 88000 + static_cast<std::uint64_t>(t), 2 * n).graph;
        if (!equal_families(candidate_max_cliques(g), bron_kerbosch(g))) ++disagreements;
    }
    return disagreements == 0;
}

bool criterion6_and_7(const Corpus& c, int& end_disagreements, int& module_violations) {
    end_disagreements = 0;
    module_violations = 0;
    for (const Graph& g : c.interval6) {
        auto fam = candidate_max_cliques(g);
        std::vector<VertexSet> weak_ends;
        for (int root = 0; root < fam.count(); ++root) {
            auto pr = compute_prec(fam, root);
            if (pr.status != PrecStatus::WeakOrder) continue;
            weak_ends.push_back(fam.members(root));
            // criterion 7 on every weak order encountered here
            for (const auto& block : incomparability_classes(pr).blocks) {
                try {
                    module_vertices(g, fam, block);
                } catch (const ModuleConsistencyError&) {
                    ++module_violations;
                }
            }
        }
        if (weak_ends != brute_possible_ends(g)) ++end_disagreements;
    }
    return end_disagreements == 0 && module_violations == 0;
}

bool criterion8(int& failures) {
    failures = 0;
    std::mt19937_64 rng(31415);
    for (int t = 0; t < 200; ++t) {
        int n = 1 + static_cast<int>(rng() % 30);
        Graph g(n);
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (rng() % 10 < 3) g.add_edge(u, v);
        auto inc = reconstruct_from_incidence(incidence_graph(g).graph);
        if (!inc.ok() || !(*inc.graph == g)) ++failures;
    }
    for (int t = 0; t < 200; ++t) {
        int n = 4 + static_cast<int>(rng() % 27);
        Graph g(n);
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (rng() % 10 < 3) g.add_edge(u, v);
        auto spl = reconstruct_from_split(split_incidence_graph(g));
        if (!spl.ok() || !(*spl.graph == g)) ++failures;
    }
    return failures == 0;
}

bool criterion9(const Corpus& c, int& soundness_failures, double& frac1, double& frac2) {
    soundness_failures = 0;
    std::mt19937_64 rng(2718);
    for (int t = 0; t < 500; ++t) {
        int n = 1 + static_cast<int>(rng() % 24);
        Graph g = random_interval_graph(n, 99000 + static_cast<std::uint64_t>(t), 2 * n).graph;
        Graph moved = apply_permutation(g, random_permutation(n, rng));
        int k = 1 + static_cast<int>(t % 2);
        if (wl_distinguishes(g, moved, k)) ++soundness_failures;
    }
    // report: fraction of non-isomorphic interval pairs distinguished
    std::vector<WlSignature> sig1, sig2;
    for (const Graph& g : c.interval6) {
        sig1.push_back(wl_refine(g, 1));
        sig2.push_back(wl_refine(g, 2));
    }
    long long pairs = 0, d1 = 0, d2 = 0;
    for (std::size_t i = 0; i < c.interval6.size(); ++i)
        for (std::size_t j = i + 1; j < c.interval6.size(); ++j) {
            ++pairs; // distinct classes, hence non-isomorphic
            if (!(sig1[i] == sig1[j])) ++d1;
            if (!(sig2[i] == sig2[j])) ++d2;
        }
    frac1 = pairs ? static_cast<double>(d1) / static_cast<double>(pairs) : 0.0;
    frac2 = pairs ? static_cast<double>(d2) / static_cast<double>(pairs) : 0.0;
    return soundness_failures == 0;
}

bool criterion10() {
    // p1=0, p2=1, p4=2, l=3, r=4; cliques M={0,3}, C={1,3}, D={3,4}, X={2,4}
    Graph g = Graph::from_edges(5, {{0, 3}, {1, 3}, {3, 4}, {2, 4}});
    auto fam = candidate_max_cliques(g);
    if (fam.count() != 4) return false;
    int m = fam.find({0, 3}), cc = fam.find({1, 3}), d = fam.find({3, 4}), x = fam.find({2, 4});
    if (m < 0 || cc < 0 || d < 0 || x < 0) return false;
    auto pr = compute_prec(fam, m);
    if (pr.status != PrecStatus::WeakOrder) return false;
    std::set<std::pair<int, int>> expected{{m, cc}, {m, d}, {m, x}, {cc, d}, {cc, x}, {d, x}};
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b)
            if (pr.precedes(a, b) != (expected.count({a, b}) > 0)) return false;
    return true;
}

} // namespace

int main() {
    int failures = 0;
    auto report = [&failures](int idx, bool ok, const char* what, const std::string& detail) {
        std::printf("criterion %2d: %s  %s%s%s\n", idx, ok ? "PASS" : "FAIL", what,
                    detail.empty() ? "" : "  -- ", detail.c_str());
        if (!ok) ++failures;
    };

    long long ms = 0;
    int inv = 0, sound = 0;
    criterion1_and_2(ms, inv, sound);
    report(1, inv == 0 && ms < 60000,
           "canonical invariance over 1000 graphs x 5 relabelings, n in [1,40]",
           "elapsed " + std::to_string(ms) + " ms, mismatches " + std::to_string(inv));
    report(2, sound == 0, "canonical soundness via emitted bijections",
           "failures " + std::to_string(sound));

    Corpus corpus = build_corpus();

    int dis3 = 0;
    report(3, criterion3(corpus, dis3),
           "completeness vs brute isomorphism, all interval graphs n <= 6 + 300 sampled pairs at n = 7",
           "disagreements " + std::to_string(dis3));

    int dis4 = 0;
    report(4, criterion4(corpus, dis4),
           "recognition matches the oracle on all 208 classes n <= 6, certificates verify",
           "disagreements " + std::to_string(dis4));

    int dis5 = 0;
    report(5, criterion5(corpus, dis5),
           "pair-neighborhood cliques equal Bron-Kerbosch (exhaustive n <= 6 + 500 random n <= 40)",
           "disagreements " + std::to_string(dis5));

    int dis6 = 0, dis7 = 0;
    criterion6_and_7(corpus, dis6, dis7);
    report(6, dis6 == 0, "weak-order classification equals brute possible ends, n <= 6",
           "disagreements " + std::to_string(dis6));
    report(7, dis7 == 0,
           "module formulas agree and the module property holds on every weak order",
           "violations " + std::to_string(dis7));

    int dis8 = 0;
    report(8, criterion8(dis8), "transform round trips (incidence and split), 200 graphs each",
           "failures " + std::to_string(dis8));

    int dis9 = 0;
    double frac1 = 0, frac2 = 0;
    bool ok9 = criterion9(corpus, dis9, frac1, frac2);
    char buf[160];
    std::snprintf(buf, sizeof(buf),
                  "soundness failures %d; fraction distinguished at k=1: %.4f, k=2: %.4f "
                  "(reported, not thresholded)",
                  dis9, frac1, frac2);
    report(9, ok9, "Weisfeiler-Lehman soundness and distinguishing-power report", buf);

    report(10, criterion10(), "four-clique worked example derives exactly M < C < D < X", "");

    std::printf("%d criterion(s) failed\n", failures);
    return failures;
}
