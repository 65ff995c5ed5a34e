#include <catch2/catch_amalgamated.hpp>

#include "igc/end_order.hpp"
#include "igc/graph.hpp"
#include "igc/oracle.hpp"
#include "test_support.hpp"

using namespace igc;
namespace ts = testsupport;

namespace {

/// Naive re-implementation of the closure: iterate the two rules with triple
/// loops until nothing changes. Intentionally different bookkeeping from the
/// worklist version.
struct NaivePrec {
    int k;
    std::vector<std::vector<char>> rel;
    bool asymmetric;
};

NaivePrec naive_prec(const CliqueFamily& fam, int root) {
    const int k = fam.count();
    NaivePrec out{k, std::vector<std::vector<char>>(static_cast<std::size_t>(k),
                                                    std::vector<char>(static_cast<std::size_t>(k), 0)),
                  true};
    for (int c = 0; c < k; ++c)
        if (c != root) out.rel[static_cast<std::size_t>(root)][static_cast<std::size_t>(c)] = 1;
    auto nonempty_meet_minus = [&](int a, int b, int minus) {
        for (Vertex v : set_intersect(fam.members(a), fam.members(b)))
            if (!set_contains(fam.members(minus), v)) return true;
        return false;
    };
    bool changed = true;
    while (changed) {
        changed = false;
        for (int c = 0; c < k; ++c)
            for (int d = 0; d < k; ++d) {
                if (c == d || out.rel[static_cast<std::size_t>(c)][static_cast<std::size_t>(d)]) continue;
                bool derive = false;
                for (int e = 0; e < k && !derive; ++e) {
                    if (out.rel[static_cast<std::size_t>(e)][static_cast<std::size_t>(d)] &&
                        nonempty_meet_minus(e, c, d))
                        derive = true;
                    if (out.rel[static_cast<std::size_t>(c)][static_cast<std::size_t>(e)] &&
                        nonempty_meet_minus(e, d, c))
                        derive = true;
                }
                if (derive) {
                    out.rel[static_cast<std::size_t>(c)][static_cast<std::size_t>(d)] = 1;
                    changed = true;
                }
            }
    }
    for (int c = 0; c < k; ++c)
        for (int d = 0; d < k; ++d)
            if (out.rel[static_cast<std::size_t>(c)][static_cast<std::size_t>(d)] &&
                out.rel[static_cast<std::size_t>(d)][static_cast<std::size_t>(c)])
                out.asymmetric = false;
    return out;
}

} // namespace

TEST_CASE("four-clique chain derives the full linear order") {
    // cliques: M={p1,l}={0,3}, C={p2,l}={1,3}, D={l,r}={3,4}, X={r,p4}={2,4}
    Graph g = ts::paper_four_clique_chain();
    auto fam = candidate_max_cliques(g);
    REQUIRE(fam.count() == 4);
    int M = fam.find({0, 3}), C = fam.find({1, 3}), D = fam.find({3, 4}), X = fam.find({2, 4});
    REQUIRE(M >= 0);
    REQUIRE(C >= 0);
    REQUIRE(D >= 0);
    REQUIRE(X >= 0);

    auto pr = compute_prec(fam, M);
    REQUIRE(pr.status == PrecStatus::WeakOrder);
    // the fixed point is exactly the strict linear order M < C < D < X
    std::vector<std::pair<int, int>> expected{{M, C}, {M, D}, {M, X}, {C, D}, {C, X}, {D, X}};
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b) {
            bool want = std::find(expected.begin(), expected.end(), std::make_pair(a, b)) !=
                        expected.end();
            CHECK(pr.precedes(a, b) == want);
        }

    auto classes = incomparability_classes(pr);
    REQUIRE(classes.blocks.size() == 4);
    CHECK(classes.blocks[0] == std::vector<int>{M});
    CHECK(classes.blocks[1] == std::vector<int>{C});
    CHECK(classes.blocks[2] == std::vector<int>{D});
    CHECK(classes.blocks[3] == std::vector<int>{X});
}

TEST_CASE("single clique graph") {
    auto fam = candidate_max_cliques(ts::complete(4));
    auto pr = compute_prec(fam, 0);
    CHECK(pr.status == PrecStatus::WeakOrder);
    CHECK(pr.k == 1);
    CHECK_FALSE(pr.precedes(0, 0));
    CHECK(classify(pr) == PrecStatus::WeakOrder);

    auto k1fam = candidate_max_cliques(Graph(1));
    CHECK(classify(compute_prec(k1fam, 0)) == PrecStatus::WeakOrder);
}

TEST_CASE("worklist closure agrees with the naive triple-loop closure") {
    // middle clique of the five-vertex figure is not an end
    Graph fig = ts::paper_five_vertex();
    auto fam = candidate_max_cliques(fig);
    int mid = fam.find({1, 2, 3});
    REQUIRE(mid >= 0);
    CHECK(compute_prec(fam, mid).status == PrecStatus::AsymmetryViolated);
    CHECK_FALSE(naive_prec(fam, mid).asymmetric);

    // content equality wherever the relation is a weak order
    std::mt19937_64 rng(41);
    for (int t = 0; t < 60; ++t) {
        int n = 1 + static_cast<int>(rng() % 12);
        Graph g = random_interval_graph(n, 4000 + t, std::max(1, n)).graph;
        auto f = candidate_max_cliques(g);
        for (int root = 0; root < f.count(); ++root) {
            auto fast = compute_prec(f, root);
            auto slow = naive_prec(f, root);
            CHECK((fast.status == PrecStatus::WeakOrder) == slow.asymmetric);
            if (fast.status != PrecStatus::WeakOrder) continue;
            for (int c = 0; c < f.count(); ++c)
                for (int d = 0; d < f.count(); ++d)
                    CHECK(fast.precedes(c, d) ==
                          (slow.rel[static_cast<std::size_t>(c)][static_cast<std::size_t>(d)] != 0));
        }
    }
}

TEST_CASE("closure is a fixed point") {
    Graph g = ts::paper_module_example();
    auto fam = candidate_max_cliques(g);
    int root = fam.find({0, 4});
    REQUIRE(root >= 0);
    auto pr = compute_prec(fam, root);
    REQUIRE(pr.status == PrecStatus::WeakOrder);
    // one more pass of the rules adds nothing
    auto nonempty_meet_minus = [&](int a, int b, int minus) {
        for (Vertex v : set_intersect(fam.members(a), fam.members(b)))
            if (!set_contains(fam.members(minus), v)) return true;
        return false;
    };
    for (int c = 0; c < pr.k; ++c)
        for (int d = 0; d < pr.k; ++d) {
            if (c == d || pr.precedes(c, d)) continue;
            for (int e = 0; e < pr.k; ++e) {
                CHECK_FALSE((pr.precedes(e, d) && nonempty_meet_minus(e, c, d)));
                CHECK_FALSE((pr.precedes(c, e) && nonempty_meet_minus(e, d, c)));
            }
        }
}

TEST_CASE("classification equals brute-force possible ends, n <= 5") {
    for (int n = 1; n <= 5; ++n) {
        for (const Graph& g : enumerate_graphs(n)) {
            if (!brute_is_interval(g).is_interval) continue;
            auto fam = candidate_max_cliques(g);
            std::vector<VertexSet> weak_ends;
            for (int c = 0; c < fam.count(); ++c)
                if (classify(compute_prec(fam, c)) == PrecStatus::WeakOrder)
                    weak_ends.push_back(fam.members(c));
            CHECK(weak_ends == brute_possible_ends(g));
        }
    }
}

TEST_CASE("module example: nonsingular block and the box S") {
    Graph g = ts::paper_module_example();
    auto fam = candidate_max_cliques(g);
    REQUIRE(fam.count() == 5);
    int M = fam.find({0, 4});
    REQUIRE(M >= 0);
    auto pr = compute_prec(fam, M);
    REQUIRE(pr.status == PrecStatus::WeakOrder);
    auto classes = incomparability_classes(pr);
    REQUIRE(classes.blocks.size() == 3);
    CHECK(classes.blocks[0] == std::vector<int>{M});
    CHECK(classes.blocks[1].size() == 3); // cliques 2..4 of the drawing
    CHECK(classes.blocks[2].size() == 1);

    VertexSet s = module_vertices(g, fam, classes.blocks[1]);
    CHECK(s == VertexSet{2, 3, 5, 6}); // the four interval-vertices inside the box

    // singleton blocks: both formulas coincide on the private vertices
    CHECK(module_vertices(g, fam, classes.blocks[0]) == VertexSet{4});  // p1
    CHECK(module_vertices(g, fam, classes.blocks[2]) == VertexSet{7});  // p5
}

TEST_CASE("module formulas agree on random interval graphs") {
    std::mt19937_64 rng(43);
    int blocks_seen = 0;
    for (int t = 0; t < 120; ++t) {
        int n = 2 + static_cast<int>(rng() % 16);
        Graph g = random_interval_graph(n, 5000 + t, n).graph;
        auto fam = candidate_max_cliques(g);
        for (int root = 0; root < fam.count(); ++root) {
            auto pr = compute_prec(fam, root);
            if (pr.status != PrecStatus::WeakOrder) continue;
            for (const auto& block : incomparability_classes(pr).blocks) {
                // module_vertices re-derives both formulas internally and
                // throws on disagreement
                CHECK_NOTHROW(module_vertices(g, fam, block));
                ++blocks_seen;
            }
        }
    }
    CHECK(blocks_seen > 100);
}

TEST_CASE("incomparability classes validated pairwise against the relation") {
    std::mt19937_64 rng(47);
    for (int t = 0; t < 50; ++t) {
        int n = 1 + static_cast<int>(rng() % 14);
        Graph g = random_interval_graph(n, 6000 + t, std::max(1, n - 2)).graph;
        auto fam = candidate_max_cliques(g);
        auto ends = brute_possible_ends(g);
        if (ends.empty()) continue;
        int root = fam.find(ends[rng() % ends.size()]);
        REQUIRE(root >= 0);
        auto pr = compute_prec(fam, root);
        REQUIRE(pr.status == PrecStatus::WeakOrder);
        auto classes = incomparability_classes(pr);
        for (std::size_t b1 = 0; b1 < classes.blocks.size(); ++b1)
            for (int c : classes.blocks[b1])
                for (std::size_t b2 = 0; b2 < classes.blocks.size(); ++b2)
                    for (int d : classes.blocks[b2]) {
                        if (b1 == b2) CHECK(!pr.precedes(c, d));
                        else if (b1 < b2) CHECK(pr.precedes(c, d));
                        else CHECK(pr.precedes(d, c));
                    }
    }
}

TEST_CASE("equivariance of the relation under relabeling") {
    std::mt19937_64 rng(53);
    for (int t = 0; t < 30; ++t) {
        int n = 1 + static_cast<int>(rng() % 12);
        Graph g = random_interval_graph(n, 8000 + t, std::max(1, n)).graph;
        auto pi = ts::random_permutation(n, rng);
        Graph h = apply_permutation(g, pi);
        auto fg = candidate_max_cliques(g);
        auto fh = candidate_max_cliques(h);
        for (int root = 0; root < fg.count(); ++root) {
            VertexSet image = fg.members(root);
            for (auto& v : image) v = pi[static_cast<std::size_t>(v)];
            std::sort(image.begin(), image.end());
            int root_h = fh.find(image);
            REQUIRE(root_h >= 0);
            auto pg = compute_prec(fg, root);
            auto ph = compute_prec(fh, root_h);
            CHECK(pg.status == ph.status);
            if (pg.status != PrecStatus::WeakOrder) continue;
            for (int c = 0; c < fg.count(); ++c)
                for (int d = 0; d < fg.count(); ++d) {
                    VertexSet ci = fg.members(c), di = fg.members(d);
                    for (auto& v : ci) v = pi[static_cast<std::size_t>(v)];
                    for (auto& v : di) v = pi[static_cast<std::size_t>(v)];
                    std::sort(ci.begin(), ci.end());
                    std::sort(di.begin(), di.end());
                    CHECK(pg.precedes(c, d) == ph.precedes(fh.find(ci), fh.find(di)));
                }
        }
    }
}

TEST_CASE("usage errors") {
    auto fam = candidate_max_cliques(ts::paper_five_vertex());
    CHECK_THROWS_AS(compute_prec(fam, 99), std::invalid_argument);
    auto bad = compute_prec(fam, fam.find({1, 2, 3}));
    REQUIRE(bad.status == PrecStatus::AsymmetryViolated);
    CHECK_THROWS_AS(incomparability_classes(bad), std::invalid_argument);
}
