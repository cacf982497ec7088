#include "tripack/bounds.hpp"

#include <algorithm>
#include <numeric>

#include "tripack/coloring.hpp"

namespace tripack {

TrianglePacking extend_packing(const Graph& g, const std::vector<int>& x_set,
                               const std::vector<int>& y_set, const EdgeColoring& coloring) {
    std::vector<char> in_x(g.vertex_count(), 0);
    for (int x : x_set) in_x.at(x) = 1;
    for (int x : x_set)
        for (int y : y_set)
            if (!g.has_edge(x, y))
                throw PreconditionError("missing cross edge " + std::to_string(x) + "-" +
                                        std::to_string(y));

    // classes must be disjoint matchings inside g[x_set]
    std::vector<Edge> seen;
    for (const auto& cls : coloring.classes) {
        std::vector<int> touched;
        for (const Edge& e : cls) {
            if (!in_x[e.u] || !in_x[e.v] || !g.has_edge(e.u, e.v))
                throw PreconditionError("coloring edge outside g[X]");
            touched.push_back(e.u);
            touched.push_back(e.v);
            seen.push_back(e);
        }
        std::sort(touched.begin(), touched.end());
        if (std::adjacent_find(touched.begin(), touched.end()) != touched.end())
            throw PreconditionError("coloring class is not a matching");
    }
    std::sort(seen.begin(), seen.end());
    if (std::adjacent_find(seen.begin(), seen.end()) != seen.end())
        throw PreconditionError("coloring classes overlap");

    std::vector<std::size_t> order(coloring.classes.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return coloring.classes[a].size() > coloring.classes[b].size();
    });

    std::vector<int> apexes = y_set;
    std::sort(apexes.begin(), apexes.end());

    TrianglePacking packing;
    std::size_t take = std::min(apexes.size(), order.size());
    for (std::size_t i = 0; i < take; ++i)
        for (const Edge& e : coloring.classes[order[i]])
            packing.triangles.push_back(Triangle(apexes[i], e.u, e.v));
    std::sort(packing.triangles.begin(), packing.triangles.end());
    return packing;
}

TrianglePacking complete_split_packing(int k_size, int s_size) {
    PartitionedGraph split = complete_split(k_size, s_size);
    const Graph& g = split.graph();
    Graph clique = induced_edge_subgraph(g, split.clique_vertices());
    EdgeColoring coloring = vizing_color(clique);
    return extend_packing(g, split.clique_vertices(), split.independent_vertices(), coloring);
}

long long nu_complete_formula(int n) {
    if (n < 2) throw DomainError("nu(K_n) formula requires n >= 2");
    long long pairs = static_cast<long long>(n) * (n - 1) / 2;
    long long k;
    switch (n % 6) {
    case 1:
    case 3: k = 0; break;
    case 5: k = 4; break;
    case 0:
    case 2: k = n / 2; break;
    default: k = n / 2 + 1; break; // n mod 6 == 4
    }
    return (pairs - k) / 3;
}

Rational lower_bound_general(const Graph& g) {
    int n = g.vertex_count();
    if (n < 3) throw DomainError("general lower bound requires n >= 3");
    long long triangles = static_cast<long long>(enumerate_triangles(g).size());
    long long triples = static_cast<long long>(n) * (n - 1) * (n - 2) / 6;
    return Rational(triangles * nu_complete_formula(n), triples);
}

Rational lower_bound_split(const PartitionedGraph& g) {
    if (!g.is_split()) throw PreconditionError("not a split graph");
    const std::vector<int>& clique = g.clique_vertices();
    const std::vector<int>& indep = g.independent_vertices();
    int clique_class = clique.empty() ? -1 : g.class_of(clique.front());
    long long crossing = 0;
    for (const Triangle& t : enumerate_triangles(g.graph())) {
        int in_clique = 0;
        for (int v : t.v)
            if (g.class_of(v) == clique_class) ++in_clique;
        if (in_clique >= 1 && in_clique <= 2) ++crossing;
    }
    long long denom = std::max(clique.size(), indep.size());
    if (denom == 0) return Rational(0);
    return Rational(crossing, denom);
}

Rational tripartite_bound_factor(int n, int m) {
    long long n2 = static_cast<long long>(n) * n;
    long long spare = 4LL * m - n2;
    if (spare <= 0)
        throw DomainError("density too low: need m > n^2/4");
    return Rational(n2, 3 * spare);
}

Rational bollobas_triangle_bound(int n, int m) {
    long long n2 = static_cast<long long>(n) * n;
    return Rational(n, 9) * Rational(4LL * m - n2);
}

Rational cut_upper_bound_tau(int n, int m) {
    return Rational(m, 2) - Rational(n - 1, 4);
}

} // namespace tripack
