#include "tripack/hitting.hpp"

#include "tripack/oracles.hpp"
#include "tripack/rational.hpp"
#include "tripack/rng.hpp"

namespace tripack {

HittingSet clique_edges_hitting(const PartitionedGraph& g) {
    const std::vector<int>& clique = g.clique_vertices(); // throws when not split
    HittingSet out;
    for (std::size_t i = 0; i < clique.size(); ++i)
        for (std::size_t j = i + 1; j < clique.size(); ++j)
            out.edges.push_back(Edge(clique[i], clique[j]));
    return out;
}

namespace {

long long cut_size(const Graph& g, const std::vector<char>& side) {
    long long cut = 0;
    for (const Edge& e : g.edges())
        if (side[e.u] != side[e.v]) ++cut;
    return cut;
}

// hill-climb single vertex flips to a local optimum
long long local_search(const Graph& g, std::vector<char>& side) {
    long long cut = cut_size(g, side);
    bool improved = true;
    while (improved) {
        improved = false;
        for (int v = 0; v < g.vertex_count(); ++v) {
            int same = 0, cross = 0;
            for (int w : g.neighbors(v)) (side[w] == side[v] ? same : cross) += 1;
            if (same > cross) {
                side[v] = !side[v];
                cut += same - cross;
                improved = true;
            }
        }
    }
    return cut;
}

} // namespace

HittingSet cut_complement_hitting(const Graph& g, std::uint64_t seed, int restart_budget) {
    int n = g.vertex_count();
    long long m = g.edge_count();
    // Edwards guarantee, as 4*cut >= 2m + n - 1
    auto meets_bound = [&](long long cut) { return 4 * cut >= 2 * m + n - 1; };

    std::vector<char> side(n, 0);
    if (n <= 24) {
        MaxCutResult mc = exact_max_cut(g);
        if (!meets_bound(mc.value))
            throw InfeasibleError("maximum cut misses the guaranteed size (graph disconnected?)");
        for (int v : mc.sides.second) side[v] = 1;
    } else {
        SplitMix64 rng(seed);
        bool found = false;
        for (int attempt = 0; attempt < restart_budget && !found; ++attempt) {
            for (int v = 0; v < n; ++v) side[v] = rng.coin() ? 1 : 0;
            found = meets_bound(local_search(g, side));
        }
        if (!found) throw InfeasibleError("cut search exhausted its restart budget");
    }

    HittingSet out;
    for (const Edge& e : g.edges())
        if (side[e.u] == side[e.v]) out.edges.push_back(e);
    return out;
}

} // namespace tripack
