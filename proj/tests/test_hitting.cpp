#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "tripack/harness.hpp"
#include "tripack/hitting.hpp"
#include "tripack/oracles.hpp"
#include "tripack/rng.hpp"

using namespace tripack;

TEST_CASE("clique edges hit every triangle of a complete split graph") {
    PartitionedGraph split = complete_split(3, 2);
    HittingSet h = clique_edges_hitting(split);
    CHECK(h.size() == 3);
    CHECK(validate_hitting(split.graph(), h));
}

TEST_CASE("single-vertex clique gives the empty hitting set") {
    PartitionedGraph split = complete_split(1, 4);
    HittingSet h = clique_edges_hitting(split);
    CHECK(h.size() == 0);
    CHECK(validate_hitting(split.graph(), h));
}

TEST_CASE("clique hitting validates on random split graphs") {
    SplitMix64 rng(42);
    for (int trial = 0; trial < 40; ++trial) {
        int n = 3 + static_cast<int>(rng.below(9));
        PartitionedGraph pg = gen_split(n, 0, rng.next());
        HittingSet h = clique_edges_hitting(pg);
        CHECK(validate_hitting(pg.graph(), h));
        std::size_t k = pg.clique_vertices().size();
        CHECK(h.size() == k * (k - 1) / 2);
    }
}

TEST_CASE("clique hitting rejects non-split graphs") {
    CHECK_THROWS_AS(clique_edges_hitting(complete_multipartite({2, 2, 2})),
                    PreconditionError);
}

TEST_CASE("cut complement hitting on K_3") {
    Graph g = complete_graph(3);
    HittingSet h = cut_complement_hitting(g);
    CHECK(h.size() == 1); // max cut 2 of 3 edges
    CHECK(validate_hitting(g, h));
}

TEST_CASE("cut complement hitting of a bipartite graph is empty") {
    HittingSet h = cut_complement_hitting(complete_bipartite(3, 4));
    CHECK(h.size() == 0);
}

TEST_CASE("cut complement hitting on K_5") {
    Graph g = complete_graph(5);
    HittingSet h = cut_complement_hitting(g);
    CHECK(h.size() <= 4); // cut at least 6
    CHECK(validate_hitting(g, h));
}

TEST_CASE("cut complement meets the tau bound on connected seeded graphs") {
    SplitMix64 rng(4242);
    int checked = 0;
    while (checked < 60) {
        int n = 3 + static_cast<int>(rng.below(8));
        Graph g(n);
        int percent = 40 + static_cast<int>(rng.below(50));
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (rng.below(100) < static_cast<std::uint64_t>(percent)) g.add_edge(u, v);
        if (!g.connected()) continue;
        ++checked;
        HittingSet h = cut_complement_hitting(g);
        CHECK(validate_hitting(g, h));
        // |h| <= m/2 - (n-1)/4, cleared of fractions
        CHECK(4 * static_cast<long long>(h.size()) <= 2LL * g.edge_count() - (n - 1));
    }
}

TEST_CASE("cut complement reports failure on graphs missing the bound") {
    Graph two_triangles(6);
    for (auto [u, v] : {std::pair{0, 1}, {0, 2}, {1, 2}, {3, 4}, {3, 5}, {4, 5}})
        two_triangles.add_edge(u, v);
    // disconnected: max cut 4 < 3 + 5/4
    CHECK_THROWS_AS(cut_complement_hitting(two_triangles), InfeasibleError);
}

TEST_CASE("local search route works above the exact cutoff") {
    // two complete bipartite blobs joined by one edge: 26 vertices, bipartite,
    // so the whole edge set is a cut and the hitting is empty
    Graph g(26);
    for (int u = 0; u < 6; ++u)
        for (int v = 6; v < 13; ++v) g.add_edge(u, v);
    for (int u = 13; u < 19; ++u)
        for (int v = 19; v < 26; ++v) g.add_edge(u, v);
    g.add_edge(0, 19);
    HittingSet h = cut_complement_hitting(g, 1);
    CHECK(validate_hitting(g, h));
    CHECK(4 * static_cast<long long>(h.size()) <= 2LL * g.edge_count() - (g.vertex_count() - 1));
}
