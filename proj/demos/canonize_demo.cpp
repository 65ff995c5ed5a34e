// Minimal library walkthrough: build a graph, canonize it, test isomorphism
// against a relabeling, and print a recognition certificate.

#include <cstdio>

#include "igc/igc.hpp"

int main() {
    using namespace igc;

    // intervals a=[1,1], b=[1,2], c=[1,3], d=[2,3], e=[3,3]
    Graph g = Graph::from_edges(5, {{0, 1}, {0, 2}, {1, 2}, {1, 3}, {2, 3}, {2, 4}, {3, 4}});

    CanonResult canon = canonical_form(g);
    if (!canon.ok()) {
        std::printf("not an interval graph: %s\n", canon.failure->to_string().c_str());
        return 1;
    }
    std::printf("canonical graph6: %s\n", write_graph6(canon.form->decode()).c_str());
    std::printf("digest:           %s\n", canon.form->digest_hex().c_str());
    for (auto [v, label] : canon.form->bijection)
        std::printf("  vertex %d -> label %d\n", v, label + 1);

    Graph relabeled = apply_permutation(g, {4, 2, 0, 3, 1});
    IsoResult iso = isomorphic(g, relabeled);
    std::printf("isomorphic to its relabeling: %s\n", *iso.verdict ? "yes" : "no");

    RecognitionResult rec = recognize(g);
    std::printf("recognized: %s\ncertificate (vertex a b):\n%s", rec.accepted ? "interval" : "no",
                write_representation(*rec.certificate).c_str());
    return 0;
}
