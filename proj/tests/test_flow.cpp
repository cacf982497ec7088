#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "tripack/flow.hpp"
#include "tripack/rng.hpp"

using namespace tripack;

namespace {

BipartiteSides sides_of(int left, int right) {
    BipartiteSides sides;
    for (int v = 0; v < left; ++v) sides.first.push_back(v);
    for (int v = 0; v < right; ++v) sides.second.push_back(left + v);
    return sides;
}

Graph random_bipartite(int left, int right, SplitMix64& rng, int percent = 60) {
    Graph g(left + right);
    for (int u = 0; u < left; ++u)
        for (int v = 0; v < right; ++v)
            if (rng.below(100) < static_cast<std::uint64_t>(percent))
                g.add_edge(u, left + v);
    return g;
}

// flow-based feasibility, the independent route the spec pairs with the
// subset-enumeration check
bool flow_feasible(const Graph& g, const BipartiteSides& sides, const DegreeSpec& f) {
    int fc = f.sum_over(sides.first);
    int fd = f.sum_over(sides.second);
    if (fc != fd) return false;
    FlowNetwork net;
    int n = g.vertex_count();
    net.node_count = n + 2;
    net.source = n;
    net.sink = n + 1;
    std::vector<char> in_c(n, 0);
    for (int v : sides.first) in_c[v] = 1;
    for (int v : sides.first) net.arcs.push_back({net.source, v, f.at(v)});
    for (int v : sides.second) net.arcs.push_back({v, net.sink, f.at(v)});
    for (const Edge& e : g.edges())
        net.arcs.push_back({in_c[e.u] ? e.u : e.v, in_c[e.u] ? e.v : e.u, 1});
    return max_flow(net).value == fd;
}

} // namespace

TEST_CASE("max flow on a single arc") {
    FlowNetwork net{2, {{0, 1, 5}}, 0, 1};
    MaxFlowResult r = max_flow(net);
    CHECK(r.value == 5);
    CHECK(r.arc_flows == std::vector<int>{5});
}

TEST_CASE("max flow on two disjoint unit paths") {
    FlowNetwork net{4, {{0, 1, 1}, {0, 2, 1}, {1, 3, 1}, {2, 3, 1}}, 0, 3};
    CHECK(max_flow(net).value == 2);
}

TEST_CASE("max flow respects conservation and capacities") {
    FlowNetwork net{6,
                    {{0, 1, 3}, {0, 2, 2}, {1, 3, 2}, {2, 3, 2}, {1, 4, 2}, {4, 5, 3},
                     {3, 5, 4}},
                    0, 5};
    MaxFlowResult r = max_flow(net);
    CHECK(r.value == 5);
    std::vector<int> balance(net.node_count, 0);
    for (std::size_t i = 0; i < net.arcs.size(); ++i) {
        CHECK(r.arc_flows[i] >= 0);
        CHECK(r.arc_flows[i] <= net.arcs[i].capacity);
        balance[net.arcs[i].tail] -= r.arc_flows[i];
        balance[net.arcs[i].head] += r.arc_flows[i];
    }
    for (int v = 0; v < net.node_count; ++v)
        if (v != net.source && v != net.sink) CHECK(balance[v] == 0);
}

TEST_CASE("max flow rejects malformed networks") {
    CHECK_THROWS_AS(max_flow(FlowNetwork{2, {{0, 1, -1}}, 0, 1}), PreconditionError);
    CHECK_THROWS_AS(max_flow(FlowNetwork{3, {{1, 0, 1}}, 0, 2}), PreconditionError);
    CHECK_THROWS_AS(max_flow(FlowNetwork{3, {{2, 1, 1}}, 0, 2}), PreconditionError);
}

TEST_CASE("perfect matching of K_22 as a flow") {
    // network encoding the f-factor of K_{2,2} with f == 1
    Graph g = complete_bipartite(2, 2);
    DegreeSpec f;
    for (int v = 0; v < 4; ++v) f.required[v] = 1;
    CHECK(flow_feasible(g, sides_of(2, 2), f));
    CHECK(ore_ryser_feasible(g, sides_of(2, 2), f));
}

TEST_CASE("ore-ryser fails on the unbalanced path") {
    Graph g(3); // u - v - w with C = {v}, D = {u, w}
    g.add_edge(0, 1);
    g.add_edge(1, 2);
    DegreeSpec f;
    f.required[0] = 1;
    f.required[1] = 1;
    f.required[2] = 1;
    BipartiteSides sides{{1}, {0, 2}};
    CHECK_FALSE(ore_ryser_feasible(g, sides, f)); // f(C)=1 != f(D)=2
}

TEST_CASE("ore-ryser on K_43 against the flow oracle") {
    Graph g = complete_bipartite(4, 3);
    DegreeSpec f;
    f.required[0] = 2;
    f.required[1] = 2;
    f.required[2] = 1;
    f.required[3] = 1;
    for (int v = 4; v < 7; ++v) f.required[v] = 2;
    BipartiteSides sides = sides_of(4, 3);
    CHECK(ore_ryser_feasible(g, sides, f));
    CHECK(flow_feasible(g, sides, f));
}

TEST_CASE("ore-ryser agrees with the flow oracle on random instances") {
    SplitMix64 rng(404);
    for (int trial = 0; trial < 500; ++trial) {
        int left = 1 + static_cast<int>(rng.below(7));
        int right = 1 + static_cast<int>(rng.below(7)); // n <= 14
        Graph g = random_bipartite(left, right, rng, 30 + static_cast<int>(rng.below(60)));
        BipartiteSides sides = sides_of(left, right);
        DegreeSpec f;
        for (int v = 0; v < left + right; ++v)
            f.required[v] = static_cast<int>(rng.below(g.degree(v) + 1));
        bool subset_route = ore_ryser_feasible(g, sides, f);
        CHECK(subset_route == flow_feasible(g, sides, f));
        if (subset_route) {
            Graph factor = f_factor(g, sides, f);
            for (int v = 0; v < g.vertex_count(); ++v) CHECK(factor.degree(v) == f.at(v));
            for (const Edge& e : factor.edges()) CHECK(g.has_edge(e.u, e.v));
        } else {
            CHECK_THROWS_AS(f_factor(g, sides, f), InfeasibleError);
        }
    }
}

TEST_CASE("f-factor of K_22 with f == 1 is a perfect matching") {
    Graph g = complete_bipartite(2, 2);
    DegreeSpec f;
    for (int v = 0; v < 4; ++v) f.required[v] = 1;
    Graph factor = f_factor(g, sides_of(2, 2), f);
    CHECK(factor.edge_count() == 2);
    for (int v = 0; v < 4; ++v) CHECK(factor.degree(v) == 1);
}

TEST_CASE("f-factor of K_33 with f == 2 is 2-regular") {
    Graph g = complete_bipartite(3, 3);
    DegreeSpec f;
    for (int v = 0; v < 6; ++v) f.required[v] = 2;
    Graph factor = f_factor(g, sides_of(3, 3), f);
    for (int v = 0; v < 6; ++v) CHECK(factor.degree(v) == 2);
    for (const Edge& e : factor.edges()) CHECK(g.has_edge(e.u, e.v));
}

TEST_CASE("infeasible spec raises") {
    Graph g = complete_bipartite(2, 2);
    DegreeSpec f;
    f.required[0] = 2;
    f.required[1] = 0;
    f.required[2] = 1;
    f.required[3] = 0; // sums 2 vs 1
    CHECK_THROWS_AS(f_factor(g, sides_of(2, 2), f), InfeasibleError);
}

TEST_CASE("balanced factor example c=4 d=3 k=2") {
    DegreeSpec f = balanced_factor(4, 3, 2);
    CHECK(f.at(4) == 2);
    CHECK(f.at(5) == 2);
    CHECK(f.at(6) == 2);
    // r = 6 mod 4 = 2 ceiling values first
    CHECK(f.at(0) == 2);
    CHECK(f.at(1) == 2);
    CHECK(f.at(2) == 1);
    CHECK(f.at(3) == 1);
}

TEST_CASE("balanced factor edge cases") {
    DegreeSpec zero = balanced_factor(3, 2, 0);
    for (int v = 0; v < 5; ++v) CHECK(zero.at(v) == 0);

    DegreeSpec full = balanced_factor(3, 3, 3);
    for (int v = 0; v < 6; ++v) CHECK(full.at(v) == 3);

    CHECK_THROWS_AS(balanced_factor(2, 3, 3), DomainError); // k > c
}

TEST_CASE("balanced factor satisfies ore-ryser on complete bipartite graphs") {
    for (int c = 1; c <= 6; ++c)
        for (int d = 1; d <= c; ++d)
            for (int k = 0; k <= c; ++k) {
                DegreeSpec f = balanced_factor(c, d, k);
                Graph g = complete_bipartite(c, d);
                // exhaustive subset route (|D| <= 6 here)
                CHECK(ore_ryser_feasible(g, sides_of(c, d), f));
            }
}
